import random

import pytest

from negaseq.verify import (
    DUPLICATE_WINDOW,
    NEGA_REVERSE_COLLISION,
    NEGASYMMETRIC_WINDOW,
    PeriodicSequence,
    is_nos,
    is_nos_naive,
    is_os,
    is_window_sequence,
    minimal_period,
    parse_sequence_line,
    read_sequences,
)


def seq(symbols, k):
    return PeriodicSequence(tuple(symbols), k)


class TestPeriodicSequence:
    def test_validation(self):
        with pytest.raises(ValueError):
            PeriodicSequence((0, 1), 2)
        with pytest.raises(ValueError):
            PeriodicSequence((), 3)
        with pytest.raises(ValueError):
            PeriodicSequence((0, 3), 3)

    def test_window_wraps(self):
        s = seq([0, 1, 2], 3)
        assert s.window(2, 2).symbols == (2, 0)
        assert s.window(1, 4).symbols == (1, 2, 0, 1)

    def test_nega_reverse(self):
        s = seq([0, 1, 1], 3)
        assert s.nega_reverse().symbols == (2, 2, 0)
        assert s.nega_reverse().nega_reverse() == s

    def test_minimal_period(self):
        assert minimal_period(seq([0, 1, 0, 1], 3)) == 2
        assert minimal_period(seq([0, 1, 1], 3)) == 3
        assert minimal_period(seq([2, 2, 2, 2], 3)) == 1
        assert minimal_period(seq([0, 1, 2, 0, 1], 3)) == 5

    def test_normalized(self):
        assert seq([0, 1, 0, 1], 3).normalized() == seq([0, 1], 3)
        s = seq([0, 1, 2], 3)
        assert s.normalized() is s


class TestWindowSequence:
    def test_valid(self):
        assert is_window_sequence(seq([0, 1, 1], 3), 2).valid

    def test_duplicate(self):
        # windows of 0,1,0,1,2: (0,1) recurs at indices 0 and 2
        v = is_window_sequence(seq([0, 1, 0, 1, 2], 3), 2)
        assert not v.valid
        assert v.witness.kind == DUPLICATE_WINDOW
        assert (v.witness.i, v.witness.j) == (0, 2)

    def test_normalizes_before_checking(self):
        # (0,1,0,1) stores two copies of period-2 content; the cyclic object
        # has windows (0,1) and (1,0) only, so it is a valid window sequence.
        v = is_window_sequence(seq([0, 1, 0, 1], 3), 2)
        assert v.valid
        assert v.period == 2

    def test_order_exceeds_period_flag(self):
        v = is_window_sequence(seq([0, 1, 1], 3), 5)
        assert v.order_exceeds_period
        assert not is_window_sequence(seq([0, 1, 1], 3), 3).order_exceeds_period

    def test_rejects_order_below_two(self):
        with pytest.raises(ValueError):
            is_window_sequence(seq([0, 1], 3), 1)


class TestNos:
    def test_valid_example(self):
        v = is_nos(seq([0, 1, 1], 3), 2)
        assert v.valid and v.period == 3

    def test_negasymmetric_window(self):
        # window (0,0) at index 0 equals its own negated reverse
        v = is_nos(seq([0, 0, 1], 3), 2)
        assert not v.valid
        assert (v.witness.i, v.witness.j, v.witness.kind) == (0, 0, NEGASYMMETRIC_WINDOW)

    def test_nega_reverse_collision(self):
        # windows of 0,1,2: (0,1), (1,2), (2,0); (0,1) = -(2,0)^R
        v = is_nos(seq([0, 1, 2], 3), 2)
        assert not v.valid
        assert v.witness.kind in (NEGA_REVERSE_COLLISION, NEGASYMMETRIC_WINDOW)
        assert (v.witness.i, v.witness.j) == (0, 2)

    def test_duplicate_dominates(self):
        v = is_nos(seq([0, 1, 0, 1, 2], 3), 2)
        assert not v.valid
        assert v.witness.kind == DUPLICATE_WINDOW

    def test_duality(self):
        for symbols, k in [((0, 1, 1), 3), ((0, 1, 2, 2), 5),
                           ((0, 0, 1, 2), 4), ((0, 2, 1, 1, 2), 5)]:
            s = seq(symbols, k)
            a = is_nos(s, 2)
            b = is_nos(s.nega_reverse(), 2)
            assert a.valid == b.valid
            assert a.period == b.period

    def test_monotone_in_order(self):
        # distinct-and-collision-free n-windows imply the same at order n+1
        rng = random.Random(7)
        for _ in range(200):
            k = rng.choice([3, 4, 5])
            m = rng.randint(2, 12)
            s = seq([rng.randrange(k) for _ in range(m)], k)
            for n in (2, 3, 4):
                if is_nos(s, n).valid:
                    assert is_nos(s, n + 1).valid, (s, n)


class TestNaiveOracle:
    def test_agreement_on_random_words(self):
        rng = random.Random(20260823)
        for _ in range(400):
            k = rng.choice([3, 4, 5, 6])
            m = rng.randint(2, 40)
            n = rng.randint(2, 5)
            s = seq([rng.randrange(k) for _ in range(m)], k)
            a = is_nos(s, n)
            b = is_nos_naive(s, n)
            assert a == b, (s, n)

    def test_agreement_on_structured_words(self):
        for symbols, k, n in [((0, 1, 0, 1), 3, 2), ((0, 0, 0), 3, 2),
                              ((0, 1, 2, 1), 3, 3), ((1, 3, 1, 3), 4, 2)]:
            s = seq(symbols, k)
            assert is_nos(s, n) == is_nos_naive(s, n)


class TestOs:
    def test_palindrome_window_rejected(self):
        # window (1,0,1) of 1,0,1,2 is a palindrome
        v = is_os(seq([1, 0, 1, 2], 3), 3)
        assert not v.valid
        assert v.witness.kind == "reverse-collision"

    def test_reverse_collision(self):
        v = is_os(seq([0, 0, 1, 1], 3), 2)
        assert not v.valid

    def test_nos_need_not_be_os(self):
        s = seq([0, 1, 1], 3)
        assert is_nos(s, 2).valid
        assert not is_os(s, 2).valid  # (1,1) is its own reverse


class TestTextFormat:
    def test_parse_line(self):
        assert parse_sequence_line("0,1,2", 3).symbols == (0, 1, 2)

    def test_read_skips_comments_and_blanks(self):
        lines = ["# header", "", "0,1,1", "  ", "0,2,2"]
        got = [s.symbols for s in read_sequences(lines, 3)]
        assert got == [(0, 1, 1), (0, 2, 2)]

    def test_bad_symbol_raises(self):
        with pytest.raises(ValueError):
            parse_sequence_line("0,9", 3)
