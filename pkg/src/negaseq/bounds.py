"""Period upper bounds for negative orientable sequences.

`nos_bound` evaluates the closed-form case formulas directly; the
excluded-edge bookkeeping in `graph.excluded_edge_budget` rebuilds the
same values from the tuple-class counts, giving two independent routes
that the tests compare.  Reference values (including the opaque older
bounds and the best known periods) live in a CSV shipped with the
package.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from importlib import resources
from typing import Optional

from .errors import InternalConsistencyError
from .graph import BoundBreakdown, excluded_edge_budget


def _regime(n: int, k: int) -> str:
    k_tag = "odd" if k % 2 == 1 else "even"
    if n in (2, 3, 4):
        return f"n{n}-{k_tag}"
    n_tag = "odd" if n % 2 == 1 else "even"
    return f"{n_tag}-{k_tag}"


@dataclass(frozen=True)
class BoundValue:
    n: int
    k: int
    value: int
    regime: str
    breakdown: BoundBreakdown


def _numerator(n: int, k: int) -> int:
    """The case formula's numerator (twice the bound).  Exact integers only."""
    k_odd = k % 2 == 1
    if n == 2:
        return k**2 - k if k_odd else k**2 - k - 2
    if n == 3:
        return k**3 - 2 * k + 1 if k_odd else k**3 - 2 * k - 6
    if n == 4:
        return k**4 - 2 * k**2 + 1 if k_odd else k**4 - 2 * k**2 + k - 2
    if n % 2 == 1 and k_odd:
        return k**n - 5 * k ** ((n - 1) // 2) + 4 * k
    if n % 2 == 1:
        return k**n - 6 * k ** ((n - 1) // 2) + 3 * k + 2
    if k_odd:
        return k**n - 3 * k ** (n // 2) - 2 * k ** ((n - 2) // 2) + k**2 + 3 * k
    return k**n - 3 * k ** (n // 2) + k**2 + k - 2


def nos_bound(n: int, k: int) -> BoundValue:
    """Upper bound on the period of a k-ary order-n negative orientable sequence."""
    if n < 2 or k < 3:
        raise ValueError(f"need n >= 2 and k >= 3, got n={n}, k={k}")
    numerator = _numerator(n, k)
    if numerator % 2 != 0:
        raise InternalConsistencyError(
            f"odd bound numerator {numerator} at n={n}, k={k}")
    return BoundValue(n=n, k=k, value=numerator // 2, regime=_regime(n, k),
                      breakdown=excluded_edge_budget(n, k))


# -- reference tables -----------------------------------------------------

@dataclass(frozen=True)
class ReferenceEntry:
    n: int
    k: int
    new_bound: int
    old_bound: int
    best_known: Optional[int]
    maximal: Optional[bool]


def load_reference_table(path: Optional[str] = None) -> dict[tuple[int, int], ReferenceEntry]:
    """Parse the reference CSV (the packaged one unless a path is given)."""
    if path is None:
        text = (resources.files("negaseq") / "data" / "reference_bounds.csv").read_text()
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    lines = [ln for ln in text.splitlines() if ln and not ln.startswith("#")]
    entries: dict[tuple[int, int], ReferenceEntry] = {}
    for row in csv.DictReader(lines):
        n, k = int(row["n"]), int(row["k"])
        best = int(row["best_known"]) if row["best_known"] else None
        maximal = bool(int(row["maximal"])) if row["maximal"] else None
        entries[(n, k)] = ReferenceEntry(
            n=n, k=k, new_bound=int(row["new_bound"]),
            old_bound=int(row["old_bound"]), best_known=best, maximal=maximal)
    return entries


@dataclass(frozen=True)
class TableCell:
    n: int
    k: int
    bound: int
    regime: str
    reference: Optional[int]  # reference new_bound if recorded
    matches_reference: Optional[bool]


def bound_table(n_range: range, k_range: range,
                reference: Optional[dict[tuple[int, int], ReferenceEntry]] = None
                ) -> list[TableCell]:
    """Compute nos_bound on a grid, attaching reference values where known."""
    if n_range.start < 2 or k_range.start < 3:
        raise ValueError("ranges must satisfy n >= 2 and k >= 3")
    if reference is None:
        reference = load_reference_table()
    cells = []
    for n in n_range:
        for k in k_range:
            b = nos_bound(n, k)
            entry = reference.get((n, k))
            cells.append(TableCell(
                n=n, k=k, bound=b.value, regime=b.regime,
                reference=entry.new_bound if entry else None,
                matches_reference=(entry.new_bound == b.value) if entry else None))
    return cells


def format_table(cells: list[TableCell], flag_mismatches: bool = False) -> str:
    """Aligned plain-text table, rows indexed by n, columns by k."""
    ns = sorted({c.n for c in cells})
    ks = sorted({c.k for c in cells})
    by_pos = {(c.n, c.k): c for c in cells}

    def render(c: TableCell) -> str:
        text = str(c.bound)
        if flag_mismatches and c.matches_reference is False:
            text += "!"
        return text

    widths = {k: max(len(f"k={k}"), *(len(render(by_pos[(n, k)])) for n in ns))
              for k in ks}
    header = "n  " + "  ".join(f"k={k}".rjust(widths[k]) for k in ks)
    lines = [header]
    for n in ns:
        row = f"{n}  " + "  ".join(render(by_pos[(n, k)]).rjust(widths[k]) for k in ks)
        lines.append(row)
    return "\n".join(lines) + "\n"
