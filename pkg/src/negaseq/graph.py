"""The reduced de Bruijn graph and the per-sequence subgraph.

Vertices are the k^(n-1) words of length n-1; each n-tuple is an edge from
its length-(n-1) prefix to its length-(n-1) suffix.  The reduced graph
drops every negasymmetric n-tuple.  Two representations are kept in sync:
an implicit membership predicate on integer codes (O(1) memory, used by
the search) and an optional explicit bitmap (used for exhaustive checks
and export).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator, Optional, Union

import numpy as np

from .errors import GraphSizeError, NotAnNosError
from .tuples import (
    TupleClass,
    Word,
    count_class,
    decode,
    is_negasymmetric_code,
    nega_reverse_code,
)
from .verify import PeriodicSequence

DEFAULT_EXPLICIT_EDGE_BUDGET = 2**24
DEFAULT_DOT_EDGE_BUDGET = 10**5


def edge_count_formula(n: int, k: int) -> int:
    """Number of non-negasymmetric n-tuples: k^n minus the negasymmetric count."""
    if n < 2 or k < 3:
        raise ValueError(f"need n >= 2 and k >= 3, got n={n}, k={k}")
    if n % 2 == 1 and k % 2 == 1:
        return k**n - k ** ((n - 1) // 2)
    if n % 2 == 1:
        return k**n - 2 * k ** ((n - 1) // 2)
    return k**n - k ** (n // 2)


class ReducedGraph:
    """B_k^-(n-1): the de Bruijn graph minus negasymmetric edges.

    Immutable after construction; safe to share between readers.
    """

    def __init__(self, n: int, k: int, explicit: bool = False,
                 edge_budget: int = DEFAULT_EXPLICIT_EDGE_BUDGET):
        if n < 2 or k < 3:
            raise ValueError(f"need n >= 2 and k >= 3, got n={n}, k={k}")
        self.n = n
        self.k = k
        self.num_vertices = k ** (n - 1)
        self.num_codes = k**n
        self._bitmap: Optional[np.ndarray] = None
        if explicit:
            if self.num_codes > edge_budget:
                raise GraphSizeError(
                    f"k^n = {self.num_codes} exceeds the explicit edge budget "
                    f"of {edge_budget}")
            self._bitmap = self._build_bitmap()

    def _build_bitmap(self) -> np.ndarray:
        codes = np.arange(self.num_codes, dtype=np.int64)
        partner = np.zeros_like(codes)
        rest = codes.copy()
        for _ in range(self.n):
            rest, digit = np.divmod(rest, self.k)
            partner = partner * self.k + (-digit) % self.k
        return codes != partner

    @property
    def explicit(self) -> bool:
        return self._bitmap is not None

    def edge_bitmap(self) -> np.ndarray:
        """Boolean array over edge codes; built on first use."""
        if self._bitmap is None:
            self._bitmap = self._build_bitmap()
        return self._bitmap

    def has_edge_code(self, code: int) -> bool:
        if self._bitmap is not None:
            return bool(self._bitmap[code])
        return not is_negasymmetric_code(code, self.n, self.k)

    def has_edge(self, edge: Word) -> bool:
        if len(edge) != self.n or edge.k != self.k:
            raise ValueError(f"edge must be an n-tuple over Z_k (n={self.n}, k={self.k})")
        return self.has_edge_code(edge.code())

    def edge_count(self) -> int:
        """Count edges from the explicit bitmap (independent of the formula)."""
        return int(np.count_nonzero(self.edge_bitmap()))

    def edges(self) -> Iterator[int]:
        """Edge codes in increasing (lexicographic) order."""
        for code in range(self.num_codes):
            if self.has_edge_code(code):
                yield code

    def edge_head(self, code: int) -> int:
        """Vertex code of the suffix of the edge's n-tuple."""
        return code % self.num_vertices

    def edge_tail(self, code: int) -> int:
        """Vertex code of the prefix of the edge's n-tuple."""
        return code // self.k

    def out_edges(self, vertex_code: int) -> Iterator[int]:
        base = vertex_code * self.k
        for x in range(self.k):
            if self.has_edge_code(base + x):
                yield base + x

    def in_edges(self, vertex_code: int) -> Iterator[int]:
        for y in range(self.k):
            code = y * self.num_vertices + vertex_code
            if self.has_edge_code(code):
                yield code

    def vertex_word(self, vertex_code: int) -> Word:
        return Word(decode(vertex_code, self.n - 1, self.k), self.k)


def build_reduced_graph(n: int, k: int, explicit: bool = True,
                        edge_budget: int = DEFAULT_EXPLICIT_EDGE_BUDGET) -> ReducedGraph:
    return ReducedGraph(n, k, explicit=explicit, edge_budget=edge_budget)


@dataclass(frozen=True)
class VertexProfile:
    label: Word
    in_degree: int
    out_degree: int
    left_sns: bool
    right_sns: bool
    negasymmetric: bool
    uniform: bool
    alternating: bool
    uniform_alternating: bool
    in_parity: str  # "even" | "odd"
    out_parity: str


def vertex_profile(g: ReducedGraph, v: Word) -> VertexProfile:
    """Degrees by direct edge probing plus the classification flags.

    The degrees always satisfy: in = k-1 iff left-sns else k, and
    out = k-1 iff right-sns else k.
    """
    if len(v) != g.n - 1 or v.k != g.k:
        raise ValueError(
            f"vertex label must have length {g.n - 1} over Z_{g.k}, got {v}")
    code = v.code()
    in_degree = sum(1 for _ in g.in_edges(code))
    out_degree = sum(1 for _ in g.out_edges(code))
    # Alternating flags need length >= 2; a length-1 label has neither.
    long_enough = len(v) >= 2
    return VertexProfile(
        label=v,
        in_degree=in_degree,
        out_degree=out_degree,
        left_sns=v.is_left_sns(),
        right_sns=v.is_right_sns(),
        negasymmetric=v.is_negasymmetric(),
        uniform=v.is_uniform(),
        alternating=v.is_alternating() if long_enough else False,
        uniform_alternating=v.is_uniform_alternating() if long_enough else False,
        in_parity="even" if in_degree % 2 == 0 else "odd",
        out_parity="even" if out_degree % 2 == 0 else "odd",
    )


@dataclass
class SequenceSubgraph:
    """B^-(S, n): the edges contributed by S and by -S^R.

    For a period-m NOS this has exactly 2m distinct edges, is closed under
    the nega-reverse map, contains no negasymmetric edge, and balances
    in-degree against out-degree at every vertex.
    """

    n: int
    k: int
    edge_codes: set[int] = field(default_factory=set)
    in_degree: Counter = field(default_factory=Counter)
    out_degree: Counter = field(default_factory=Counter)
    # edge code -> (stream, window index), stream in {"S", "-S^R"}
    edge_origin: dict[int, tuple[str, int]] = field(default_factory=dict)

    def edge_count(self) -> int:
        return len(self.edge_codes)

    def is_balanced(self) -> bool:
        vertices = set(self.in_degree) | set(self.out_degree)
        return all(self.in_degree[v] == self.out_degree[v] for v in vertices)

    def has_negasymmetric_edge(self) -> bool:
        return any(is_negasymmetric_code(c, self.n, self.k) for c in self.edge_codes)

    def closed_under_nega_reverse(self) -> bool:
        return all(nega_reverse_code(c, self.n, self.k) in self.edge_codes
                   for c in self.edge_codes)


def sequence_subgraph(seq: PeriodicSequence, n: int) -> SequenceSubgraph:
    """Build B^-(S, n) from one period of S.

    Raises NotAnNosError on the first duplicate edge, naming the colliding
    windows: a duplicate certifies that S is not an NOS of order n.
    """
    norm = seq.normalized()
    sub = SequenceSubgraph(n=n, k=norm.k)
    num_vertices = norm.k ** (n - 1)
    for stream_name, stream in (("S", norm), ("-S^R", norm.nega_reverse())):
        m = len(stream)
        for i in range(m):
            code = stream.window(i, n).code()
            if code in sub.edge_origin:
                raise NotAnNosError(
                    f"window {stream_name}[{i}] duplicates "
                    f"{sub.edge_origin[code][0]}[{sub.edge_origin[code][1]}]: "
                    f"not an order-{n} NOS",
                    first=sub.edge_origin[code], second=(stream_name, i))
            sub.edge_origin[code] = (stream_name, i)
            sub.edge_codes.add(code)
            sub.out_degree[code // norm.k] += 1
            sub.in_degree[code % num_vertices] += 1
    return sub


# -- DOT export -----------------------------------------------------------
#
# Deterministic output: statements sorted lexicographically by code, LF
# line endings, vertex names are the concatenated symbols.  Fill colors
# encode the classification: negasymmetric -> grey, both-sns -> gold,
# left-sns only -> lightblue, right-sns only -> lightgreen.

def _vertex_name(code: int, n: int, k: int) -> str:
    sep = "" if k <= 10 else "_"
    return sep.join(str(s) for s in decode(code, n - 1, k))


def _vertex_attrs(profile: VertexProfile) -> str:
    if profile.negasymmetric:
        color = "grey"
    elif profile.left_sns and profile.right_sns:
        color = "gold"
    elif profile.left_sns:
        color = "lightblue"
    elif profile.right_sns:
        color = "lightgreen"
    else:
        color = "white"
    return f'style=filled fillcolor="{color}"'


def export_dot(graph: Union[ReducedGraph, SequenceSubgraph],
               name: str = "reduced_debruijn",
               edge_budget: int = DEFAULT_DOT_EDGE_BUDGET) -> str:
    if isinstance(graph, ReducedGraph):
        g = graph
        edge_codes = list(g.edges())
    else:
        g = ReducedGraph(graph.n, graph.k)
        edge_codes = sorted(graph.edge_codes)
    if len(edge_codes) > edge_budget:
        raise GraphSizeError(
            f"{len(edge_codes)} edges exceed the DOT export budget of {edge_budget}")
    n, k = g.n, g.k
    lines = [f"digraph {name} {{"]
    for vcode in range(g.num_vertices):
        word = g.vertex_word(vcode)
        attrs = _vertex_attrs(vertex_profile(g, word))
        lines.append(f'  "{_vertex_name(vcode, n, k)}" [{attrs}];')
    for ecode in edge_codes:
        tail = _vertex_name(ecode // k, n, k)
        head = _vertex_name(ecode % g.num_vertices, n, k)
        label = "" if k <= 10 else "_"
        label = label.join(str(s) for s in decode(ecode, n, k))
        lines.append(f'  "{tail}" -> "{head}" [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- excluded-edge budget -------------------------------------------------

@dataclass(frozen=True)
class BoundBreakdown:
    """The edge budget behind the period bound for one (n, k).

    u_out/u_in count outgoing/incoming exclusions at semi-negasymmetric
    vertices with unequal degrees; p_out/p_in count exclusions at vertices
    whose full degree is odd but whose degree in the sequence subgraph must
    be even.  The ix_* fields are the maximum possible overlaps between
    those sets (budget constants per regime, not per-instance measurements).
    """

    n: int
    k: int
    N: int
    u_out: int = 0
    u_in: int = 0
    p_out: int = 0
    p_in: int = 0
    ix_up: int = 0  # overlap of outgoing-u with incoming-p exclusions
    ix_pu: int = 0  # overlap of outgoing-p with incoming-u exclusions
    ix_uu: int = 0
    ix_pp: int = 0
    resulting_edge_cap: int = 0
    resulting_period_bound: int = 0


def excluded_edge_budget(n: int, k: int) -> BoundBreakdown:
    """Fill the excluded-edge bookkeeping for the applicable (n, k) regime.

    The n=2, n=3, n=4 and four n>4 parity regimes each form a dedicated
    branch; the set sizes come from the tuple-class counting formulas at
    length n-1 and the overlap maxima are fixed per regime.
    """
    if n < 2 or k < 3:
        raise ValueError(f"need n >= 2 and k >= 3, got n={n}, k={k}")
    N = edge_count_formula(n, k)
    k_odd = k % 2 == 1

    def negasym_non_uniform(length: int) -> int:
        return (count_class(TupleClass.NEGASYMMETRIC, length, k)
                - count_class(TupleClass.UNIFORM_NEGASYMMETRIC, length, k))

    if n == 2:
        p_out = 0 if k_odd else 2
        cap = N - p_out
        return BoundBreakdown(n, k, N, p_out=p_out,
                              resulting_edge_cap=cap,
                              resulting_period_bound=cap // 2)

    if n == 3:
        if k_odd:
            p = negasym_non_uniform(2)  # k - 1
            ix_pp = k - 1
        else:
            # Uniform or alternating 2-tuples with entries in {0, k/2}.
            p = 4
            ix_pp = 2
        cap = N - 2 * p + ix_pp
        return BoundBreakdown(n, k, N, p_out=p, p_in=p, ix_pp=ix_pp,
                              resulting_edge_cap=cap,
                              resulting_period_bound=cap // 2)

    if n == 4:
        u_out = count_class(TupleClass.NON_UNIFORM_ALTERNATING_LEFT_SNS, 3, k)
        if k_odd:
            p_out = negasym_non_uniform(3)  # k - 1
        else:
            p_out = count_class(TupleClass.UNIFORM_ALTERNATING_NEGASYMMETRIC, 3, k)
        cap = N - u_out - p_out
        return BoundBreakdown(n, k, N, u_out=u_out, p_out=p_out,
                              resulting_edge_cap=cap,
                              resulting_period_bound=cap // 2)

    n_odd = n % 2 == 1
    if n_odd and k_odd:
        u = count_class(TupleClass.NON_UNIFORM_LEFT_SNS, n - 1, k)
        p = negasym_non_uniform(n - 1)
        ix_up = ix_pu = k - 1
        ix_uu = k - 1
        ix_pp = k - 1
    elif n_odd:
        u = count_class(TupleClass.NON_UNIFORM_NON_ALTERNATING_LEFT_SNS, n - 1, k)
        p = (count_class(TupleClass.UNIFORM_NEGASYMMETRIC, n - 1, k)
             + count_class(TupleClass.ALTERNATING_NEGASYMMETRIC, n - 1, k))  # k
        ix_up = ix_pu = 0
        ix_uu = 4 * k - 4
        ix_pp = k - 2
    elif k_odd:
        u = count_class(TupleClass.NON_UNIFORM_ALTERNATING_LEFT_SNS, n - 1, k)
        p = negasym_non_uniform(n - 1)
        ix_up = ix_pu = k - 1
        ix_uu = k * (k - 1)
        ix_pp = 0
    else:
        u = count_class(TupleClass.NON_UNIFORM_ALTERNATING_LEFT_SNS, n - 1, k)
        p = count_class(TupleClass.UNIFORM_ALTERNATING_NEGASYMMETRIC, n - 1, k)  # 2
        ix_up = ix_pu = 0
        ix_uu = k * (k - 1)
        ix_pp = 2
    cap = N - 2 * u - 2 * p + ix_up + ix_pu + ix_uu + ix_pp
    return BoundBreakdown(n, k, N, u_out=u, u_in=u, p_out=p, p_in=p,
                          ix_up=ix_up, ix_pu=ix_pu, ix_uu=ix_uu, ix_pp=ix_pp,
                          resulting_edge_cap=cap,
                          resulting_period_bound=cap // 2)
