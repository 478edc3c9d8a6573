"""Words over Z_k, their symmetry maps, structural predicates and counts.

A "word" here is a fixed-length tuple of residues mod k with the alphabet
size carried alongside.  The structural predicates (negasymmetric, uniform,
alternating, uniform-alternating, left/right semi-negasymmetric) drive both
the reduced de Bruijn graph and the period-bound bookkeeping.  Every closed
count has a brute-force enumeration oracle (`enumerate_class`) so each
formula branch is independently checkable.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Iterator

from .errors import AlphabetMismatchError, EnumerationBudgetError

DEFAULT_ENUMERATION_BUDGET = 10**7


@dataclass(frozen=True)
class Word:
    """An n-tuple over Z_k.  Immutable; all operations return new words."""

    symbols: tuple[int, ...]
    k: int

    def __post_init__(self):
        if self.k < 3:
            raise ValueError(f"alphabet size must be at least 3, got k={self.k}"
                             " (negating a symbol is the identity for k=2)")
        if not self.symbols:
            raise ValueError("word must be nonempty")
        if any(not (0 <= s < self.k) for s in self.symbols):
            raise ValueError(f"symbols {self.symbols} out of range for k={self.k}")

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __getitem__(self, i):
        return self.symbols[i]

    def reverse(self) -> "Word":
        return Word(self.symbols[::-1], self.k)

    def negate(self) -> "Word":
        return Word(tuple((-s) % self.k for s in self.symbols), self.k)

    def nega_reverse(self) -> "Word":
        """negate(reverse(self)); an involution."""
        return Word(tuple((-s) % self.k for s in reversed(self.symbols)), self.k)

    # -- structural predicates -------------------------------------------

    def is_negasymmetric(self) -> bool:
        """True iff symbols[i] == -symbols[n-1-i] mod k for every i."""
        n, k, s = len(self.symbols), self.k, self.symbols
        return all(s[i] == (-s[n - 1 - i]) % k for i in range((n + 1) // 2))

    def is_uniform(self) -> bool:
        return len(set(self.symbols)) == 1

    def is_alternating(self) -> bool:
        """Even positions carry one value, odd positions another, distinct."""
        self._require_length(2, "alternating")
        s = self.symbols
        c0, c1 = s[0], s[1]
        if c0 == c1:
            return False
        return all(s[i] == (c0 if i % 2 == 0 else c1) for i in range(2, len(s)))

    def is_uniform_alternating(self) -> bool:
        """Each symbol is the mod-k negation of its predecessor."""
        self._require_length(2, "uniform-alternating")
        s, k = self.symbols, self.k
        return all(s[i + 1] == (-s[i]) % k for i in range(len(s) - 1))

    def is_left_sns(self) -> bool:
        """Prefix of length n-1 is negasymmetric (semi-negasymmetric on the left).

        Defined for n >= 1; a 1-tuple is vacuously left-sns (empty prefix).
        """
        n, k, s = len(self.symbols), self.k, self.symbols
        return all(s[i] == (-s[n - i - 2]) % k for i in range(n - 1))

    def is_right_sns(self) -> bool:
        """Suffix of length n-1 is negasymmetric."""
        n, k, s = len(self.symbols), self.k, self.symbols
        return all(s[i] == (-s[n - i]) % k for i in range(1, n))

    def _require_length(self, minimum: int, what: str) -> None:
        if len(self.symbols) < minimum:
            raise ValueError(f"{what} is only defined for length >= {minimum}")

    def code(self) -> int:
        """Base-k integer code, leftmost symbol most significant."""
        return encode(self.symbols, self.k)

    def __str__(self) -> str:
        return ",".join(str(s) for s in self.symbols)


def require_same_alphabet(a: Word, b: Word) -> None:
    if a.k != b.k:
        raise AlphabetMismatchError(f"mixed alphabet sizes k={a.k} and k={b.k}")


# -- integer codes --------------------------------------------------------
#
# Codes fix the enumeration order (lexicographic, leftmost symbol most
# significant) used by bitmaps, DOT export and the search.

def encode(symbols: tuple[int, ...], k: int) -> int:
    code = 0
    for s in symbols:
        code = code * k + s
    return code


def decode(code: int, n: int, k: int) -> tuple[int, ...]:
    out = []
    for _ in range(n):
        code, r = divmod(code, k)
        out.append(r)
    return tuple(reversed(out))


def nega_reverse_code(code: int, n: int, k: int) -> int:
    """Code of -u^R given the code of u."""
    out = 0
    for _ in range(n):
        code, r = divmod(code, k)
        out = out * k + ((-r) % k)
    return out


def is_negasymmetric_code(code: int, n: int, k: int) -> bool:
    return code == nega_reverse_code(code, n, k)


# -- tuple classes and counting ------------------------------------------

class TupleClass(Enum):
    NEGASYMMETRIC = "negasymmetric"
    UNIFORM = "uniform"
    ALTERNATING = "alternating"
    UNIFORM_ALTERNATING = "uniform-alternating"
    UNIFORM_AND_UNIFORM_ALTERNATING = "uniform-and-uniform-alternating"
    UNIFORM_NEGASYMMETRIC = "uniform-negasymmetric"
    UNIFORM_ALTERNATING_NEGASYMMETRIC = "uniform-alternating-negasymmetric"
    ALTERNATING_NEGASYMMETRIC = "alternating-negasymmetric"
    LEFT_SNS = "left-sns"
    RIGHT_SNS = "right-sns"
    NON_UNIFORM_LEFT_SNS = "non-uniform-left-sns"
    NON_UNIFORM_RIGHT_SNS = "non-uniform-right-sns"
    NON_UNIFORM_ALTERNATING_LEFT_SNS = "non-uniform-alternating-left-sns"
    NON_UNIFORM_ALTERNATING_RIGHT_SNS = "non-uniform-alternating-right-sns"
    NON_UNIFORM_NON_ALTERNATING_LEFT_SNS = "non-uniform-non-alternating-left-sns"
    NON_UNIFORM_NON_ALTERNATING_RIGHT_SNS = "non-uniform-non-alternating-right-sns"


# Note: the "non-uniform-alternating" classes read as "not uniform-alternating",
# i.e. left-sns words that fail the uniform-alternating predicate.

_MIN_N = {cls: 2 for cls in TupleClass}
_MIN_N[TupleClass.NEGASYMMETRIC] = 1
# The non-alternating exclusion is computed via alternating (n-1)-tuples,
# which only exist for n >= 3; at n=2 the closed form does not apply.
_MIN_N[TupleClass.NON_UNIFORM_NON_ALTERNATING_LEFT_SNS] = 3
_MIN_N[TupleClass.NON_UNIFORM_NON_ALTERNATING_RIGHT_SNS] = 3


def class_predicate(cls: TupleClass, w: Word) -> bool:
    if cls is TupleClass.NEGASYMMETRIC:
        return w.is_negasymmetric()
    if cls is TupleClass.UNIFORM:
        return w.is_uniform()
    if cls is TupleClass.ALTERNATING:
        return w.is_alternating()
    if cls is TupleClass.UNIFORM_ALTERNATING:
        return w.is_uniform_alternating()
    if cls is TupleClass.UNIFORM_AND_UNIFORM_ALTERNATING:
        return w.is_uniform() and w.is_uniform_alternating()
    if cls is TupleClass.UNIFORM_NEGASYMMETRIC:
        return w.is_uniform() and w.is_negasymmetric()
    if cls is TupleClass.UNIFORM_ALTERNATING_NEGASYMMETRIC:
        return w.is_uniform_alternating() and w.is_negasymmetric()
    if cls is TupleClass.ALTERNATING_NEGASYMMETRIC:
        return w.is_alternating() and w.is_negasymmetric()
    if cls is TupleClass.LEFT_SNS:
        return w.is_left_sns()
    if cls is TupleClass.RIGHT_SNS:
        return w.is_right_sns()
    if cls is TupleClass.NON_UNIFORM_LEFT_SNS:
        return w.is_left_sns() and not w.is_uniform()
    if cls is TupleClass.NON_UNIFORM_RIGHT_SNS:
        return w.is_right_sns() and not w.is_uniform()
    if cls is TupleClass.NON_UNIFORM_ALTERNATING_LEFT_SNS:
        return w.is_left_sns() and not w.is_uniform_alternating()
    if cls is TupleClass.NON_UNIFORM_ALTERNATING_RIGHT_SNS:
        return w.is_right_sns() and not w.is_uniform_alternating()
    if cls is TupleClass.NON_UNIFORM_NON_ALTERNATING_LEFT_SNS:
        return w.is_left_sns() and not w.is_uniform() and not w.is_alternating()
    if cls is TupleClass.NON_UNIFORM_NON_ALTERNATING_RIGHT_SNS:
        return w.is_right_sns() and not w.is_uniform() and not w.is_alternating()
    raise ValueError(f"unknown class {cls}")


def _check_count_args(cls: TupleClass, n: int, k: int) -> None:
    if k < 3:
        raise ValueError(f"alphabet size must be at least 3, got k={k}")
    if n < _MIN_N[cls]:
        raise ValueError(f"{cls.value} requires n >= {_MIN_N[cls]}, got n={n}")


def count_class(cls: TupleClass, n: int, k: int) -> int:
    """Closed-form count of the class among all k-ary n-tuples.

    Each parity branch is written out separately so it can be pinned
    against the enumeration oracle on its own.
    """
    _check_count_args(cls, n, k)
    n_odd, k_odd = n % 2 == 1, k % 2 == 1

    if cls is TupleClass.NEGASYMMETRIC:
        if n_odd and k_odd:
            return k ** ((n - 1) // 2)
        if n_odd:
            return 2 * k ** ((n - 1) // 2)
        return k ** (n // 2)

    if cls is TupleClass.UNIFORM:
        return k

    if cls is TupleClass.ALTERNATING:
        return k * (k - 1)

    if cls is TupleClass.UNIFORM_ALTERNATING:
        return k

    if cls is TupleClass.UNIFORM_AND_UNIFORM_ALTERNATING:
        return 1 if k_odd else 2

    if cls is TupleClass.UNIFORM_NEGASYMMETRIC:
        return 1 if k_odd else 2

    if cls is TupleClass.UNIFORM_ALTERNATING_NEGASYMMETRIC:
        if n_odd:
            return 1 if k_odd else 2
        return k

    if cls is TupleClass.ALTERNATING_NEGASYMMETRIC:
        if n_odd:
            return 0 if k_odd else 2
        return (k - 1) if k_odd else (k - 2)

    if cls in (TupleClass.LEFT_SNS, TupleClass.RIGHT_SNS):
        if n_odd:
            return k ** ((n + 1) // 2)
        if k_odd:
            return k ** (n // 2)
        return 2 * k ** (n // 2)

    if cls in (TupleClass.NON_UNIFORM_LEFT_SNS, TupleClass.NON_UNIFORM_RIGHT_SNS):
        if n_odd and k_odd:
            return k ** ((n + 1) // 2) - 1
        if n_odd:
            return k ** ((n + 1) // 2) - 2
        if k_odd:
            return k ** (n // 2) - 1
        return 2 * k ** (n // 2) - 2

    if cls in (TupleClass.NON_UNIFORM_ALTERNATING_LEFT_SNS,
               TupleClass.NON_UNIFORM_ALTERNATING_RIGHT_SNS):
        if n_odd:
            return k ** ((n + 1) // 2) - k
        if k_odd:
            return k ** (n // 2) - 1
        return 2 * k ** (n // 2) - 2

    if cls in (TupleClass.NON_UNIFORM_NON_ALTERNATING_LEFT_SNS,
               TupleClass.NON_UNIFORM_NON_ALTERNATING_RIGHT_SNS):
        if n_odd:
            return k ** ((n + 1) // 2) - k
        if k_odd:
            return k ** (n // 2) - 1
        return 2 * k ** (n // 2) - 4

    raise ValueError(f"unknown class {cls}")


def enumerate_class(cls: TupleClass, n: int, k: int,
                    budget: int = DEFAULT_ENUMERATION_BUDGET) -> Iterator[Word]:
    """Brute-force oracle: yield, in lexicographic order, the n-tuples in cls."""
    _check_count_args(cls, n, k)
    if k ** n > budget:
        raise EnumerationBudgetError(
            f"k^n = {k**n} exceeds the enumeration budget of {budget}")
    for symbols in itertools.product(range(k), repeat=n):
        w = Word(symbols, k)
        if class_predicate(cls, w):
            yield w
