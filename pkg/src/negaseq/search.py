"""Exhaustive search for maximum-period negative orientable sequences.

The search space is the set of closed walks in the reduced de Bruijn
graph that use at most one edge from each pair {e, -e^R}; every such
closed walk of length m reads off an NOS of period m, and conversely.
The walk is explored depth-first over an explicit used-edge bitmap.

Two reductions keep the exhaustive cases tractable without losing any
maximum-length walk:

* rotation canonicalization: every closed walk is generated only from the
  rotation starting at its smallest edge code, so later edges must exceed
  the first one;
* alphabet symmetry: the maps x -> u*x (u a unit of Z_k) and e -> -e^R
  send valid walks to valid walks of the same length, so the first edge
  can be restricted to codes minimal within their orbit under that group.

Optionally, branches are cut when the walk length plus the number of
still-unused edge pairs cannot beat the incumbent, and the whole search
stops once the incumbent meets the proven period upper bound (no longer
walk can exist).
"""

from __future__ import annotations

import hashlib
import math
import time
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import GraphSizeError, InternalConsistencyError
from .bounds import nos_bound
from .graph import ReducedGraph
from .verify import PeriodicSequence, is_nos

DEFAULT_NODE_BUDGET = 10**9
DEFAULT_MAX_CODES = 2**24


@dataclass(frozen=True)
class SearchConfig:
    n: int
    k: int
    node_budget: int = DEFAULT_NODE_BUDGET
    time_budget: Optional[float] = None  # seconds of wall clock
    symmetry_reduction: bool = True
    prune_bound: bool = True
    max_codes: int = DEFAULT_MAX_CODES

    def __post_init__(self):
        if self.n < 2 or self.k < 3:
            raise ValueError(f"need n >= 2 and k >= 3, got n={self.n}, k={self.k}")
        if self.node_budget <= 0:
            raise ValueError("node budget must be positive")
        if self.time_budget is not None and self.time_budget <= 0:
            raise ValueError("time budget must be positive")


@dataclass
class SearchResult:
    config: SearchConfig
    best_sequence: Optional[PeriodicSequence]
    period: int
    optimal: bool
    expansions: int
    elapsed: float
    bound: int


def units(k: int) -> list[int]:
    return [u for u in range(1, k) if math.gcd(u, k) == 1]


def canonicalize(seq: PeriodicSequence, n: int) -> PeriodicSequence:
    """Lexicographically least word in the orbit of seq under rotations,
    the nega-reverse map and unit symbol multiplication.

    All three generators preserve the NOS property, so the orbit is a
    legitimate symmetry class for deduplication.
    """
    best: Optional[tuple[int, ...]] = None
    k = seq.k
    for variant in (seq.symbols, seq.nega_reverse().symbols):
        for u in units(k):
            mapped = tuple((u * s) % k for s in variant)
            m = len(mapped)
            doubled = mapped + mapped
            for r in range(m):
                rotated = doubled[r:r + m]
                if best is None or rotated < best:
                    best = rotated
    assert best is not None
    return PeriodicSequence(best, k)


def _edge_tables(n: int, k: int) -> tuple[np.ndarray, np.ndarray]:
    """(partner, digit stacks) for all k^n codes; partner[e] = code of -e^R."""
    codes = np.arange(k**n, dtype=np.int64)
    partner = np.zeros_like(codes)
    rest = codes.copy()
    digits = []
    for _ in range(n):
        rest, digit = np.divmod(rest, k)
        digits.append(digit)  # least significant first
        partner = partner * k + (-digit) % k
    return partner, np.stack(digits)


def _orbit_minimal_mask(partner: np.ndarray, digits: np.ndarray,
                        n: int, k: int) -> np.ndarray:
    """mask[e] true iff e == min over {u(e), u(partner(e)) : u unit of Z_k}."""
    codes = np.arange(k**n, dtype=np.int64)
    orbit_min = codes.copy()
    weights = np.array([k**i for i in range(n)], dtype=np.int64)  # lsd first
    for u in units(k):
        image = ((digits * u) % k * weights[:, None]).sum(axis=0)
        orbit_min = np.minimum(orbit_min, image)
        orbit_min = np.minimum(orbit_min, image[partner])
    return codes == orbit_min


def _walk_to_sequence(walk: list[int], n: int, k: int) -> PeriodicSequence:
    shift = k ** (n - 1)
    return PeriodicSequence(tuple(e // shift for e in walk), k)


def max_nos_search(cfg: SearchConfig) -> SearchResult:
    """Depth-first search over pair-disjoint closed walks in B_k^-(n-1)."""
    n, k = cfg.n, cfg.k
    num_codes = k**n
    if num_codes > cfg.max_codes:
        raise GraphSizeError(
            f"k^n = {num_codes} exceeds the search bitmap budget of {cfg.max_codes}")

    started = time.monotonic()
    bound = nos_bound(n, k).value

    partner_arr, digits = _edge_tables(n, k)
    is_edge = (np.arange(num_codes, dtype=np.int64) != partner_arr)
    if cfg.symmetry_reduction:
        candidate_mask = is_edge & _orbit_minimal_mask(partner_arr, digits, n, k)
    else:
        candidate_mask = is_edge
    candidates = np.flatnonzero(candidate_mask).tolist()

    partner = partner_arr.tolist()
    edge_ok = is_edge.tolist()
    total_pairs = int(np.count_nonzero(is_edge)) // 2

    used = bytearray(num_codes)
    num_vertices = k ** (n - 1)

    # Per-vertex counts of available (unused, unblocked) edges.  They back
    # an admissible upper bound on how many edges a completion of the
    # current walk can still add: a trail from v back to start departs each
    # vertex at most min(in, out) times, with +-1 endpoint slack.
    avail_in = [0] * num_vertices
    avail_out = [0] * num_vertices
    for e in range(num_codes):
        if edge_ok[e]:
            avail_out[e // k] += 1
            avail_in[e % num_vertices] += 1

    def mark(e: int) -> None:
        for c in (e, partner[e]):
            used[c] = 1
            avail_out[c // k] -= 1
            avail_in[c % num_vertices] -= 1

    def unmark(e: int) -> None:
        for c in (e, partner[e]):
            used[c] = 0
            avail_out[c // k] += 1
            avail_in[c % num_vertices] += 1

    def completion_bound(v: int, start: int) -> int:
        total = 0
        for w in range(num_vertices):
            a, b = avail_in[w], avail_out[w]
            total += a if a < b else b
        if v == start:
            return total
        a, b = avail_in[v], avail_out[v]
        total -= a if a < b else b
        total += b if b < a + 1 else a + 1
        a, b = avail_in[start], avail_out[start]
        if a == 0:
            return -1  # the walk can never close again
        total -= a if a < b else b
        total += b if b < a - 1 else a - 1
        return total

    best_len = 0
    best_seq: Optional[PeriodicSequence] = None
    expansions = 0
    aborted = False
    prune = cfg.prune_bound

    def out_of_budget() -> bool:
        if expansions >= cfg.node_budget:
            return True
        if cfg.time_budget is not None and expansions % 4096 == 0:
            return time.monotonic() - started > cfg.time_budget
        return False

    def record(walk: list[int]) -> None:
        nonlocal best_len, best_seq
        m = len(walk)
        seq = canonicalize(_walk_to_sequence(walk, n, k), n)
        verdict = is_nos(seq, n)
        if not verdict.valid or verdict.period != m:
            raise InternalConsistencyError(
                f"search produced a non-NOS walk of length {m}: {seq}")
        if m > bound:
            raise InternalConsistencyError(
                f"walk of length {m} exceeds the proven bound {bound} "
                f"at n={n}, k={k}")
        if m > best_len or (m == best_len and best_seq is not None
                            and seq.symbols < best_seq.symbols):
            best_len, best_seq = m, seq

    for e0 in candidates:
        if best_len >= bound or aborted:
            break
        mark(e0)
        pairs_rem = total_pairs - 1
        start = e0 // k
        walk = [e0]
        ptr = [0]
        vstack = [e0 % num_vertices]
        while walk:
            d = len(walk) - 1
            v = vstack[d]
            if ptr[d] == 0:
                if v == start and len(walk) >= best_len:
                    record(walk)
                    if best_len >= bound:
                        break
                if prune:
                    room = completion_bound(v, start)
                    if room > pairs_rem:
                        room = pairs_rem
                    if room < 0 or len(walk) + room <= best_len:
                        ptr[d] = k  # cannot close or cannot beat the incumbent
            x = ptr[d]
            base = v * k
            e = -1
            while x < k:
                cand = base + x
                x += 1
                if cand > e0 and edge_ok[cand] and not used[cand]:
                    e = cand
                    break
            if e < 0:
                unmark(walk.pop())
                ptr.pop()
                vstack.pop()
                pairs_rem += 1
                continue
            ptr[d] = x
            mark(e)
            pairs_rem -= 1
            expansions += 1
            walk.append(e)
            ptr.append(0)
            vstack.append(e % num_vertices)
            if out_of_budget():
                aborted = True
                break
        # unwind anything left on the stack (early break paths)
        for e in walk:
            unmark(e)

    elapsed = time.monotonic() - started
    optimal = (not aborted) or best_len >= bound
    return SearchResult(config=cfg, best_sequence=best_seq, period=best_len,
                        optimal=optimal, expansions=expansions,
                        elapsed=elapsed, bound=bound)


def graph_content_hash(n: int, k: int) -> str:
    """SHA-256 of the packed edge bitmap; pins the searched graph in certificates."""
    bitmap = ReducedGraph(n, k).edge_bitmap()
    return hashlib.sha256(np.packbits(bitmap).tobytes()).hexdigest()


def certify(result: SearchResult) -> str:
    """Replayable plain-text certificate for a search result."""
    cfg = result.config
    lines = [
        "negative-orientable-sequence search certificate",
        f"n={cfg.n}",
        f"k={cfg.k}",
        f"period={result.period}",
        f"optimal={'true' if result.optimal else 'false'}",
        f"period_upper_bound={result.bound}",
    ]
    if result.best_sequence is not None:
        verdict = is_nos(result.best_sequence, cfg.n)
        status = "valid" if verdict.valid else "invalid"
        lines.append(f"sequence={result.best_sequence}")
        lines.append(f"verifier={status} nos period={verdict.period}")
    else:
        lines.append("sequence=")
        lines.append("verifier=no sequence found")
    lines += [
        f"expansions={result.expansions}",
        f"node_budget={cfg.node_budget}",
        f"time_budget={cfg.time_budget if cfg.time_budget is not None else 'none'}",
        f"symmetry_reduction={'true' if cfg.symmetry_reduction else 'false'}",
        f"prune_bound={'true' if cfg.prune_bound else 'false'}",
        f"graph_edges_sha256={graph_content_hash(cfg.n, cfg.k)}",
    ]
    return "\n".join(lines) + "\n"
