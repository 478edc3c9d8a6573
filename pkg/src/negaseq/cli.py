"""Command-line front end.

Results go to stdout; diagnostics and timing go to stderr so identical
invocations produce byte-identical result output.  Exit codes: 0 success
or verified, 1 verification failed / nothing found, 2 usage error,
3 budget exceeded.
"""

from __future__ import annotations

import json
import sys

import click

from . import bounds as bounds_mod
from . import graph as graph_mod
from . import search as search_mod
from . import tuples as tuples_mod
from . import verify as verify_mod
from .errors import EnumerationBudgetError, GraphSizeError, NotAnNosError

EXIT_INVALID = 1
EXIT_BUDGET = 3

FORMATS = click.Choice(["text", "json"])


def _parse_tuple(text: str, k: int) -> tuples_mod.Word:
    try:
        return tuples_mod.Word(tuple(int(p) for p in text.split(",")), k)
    except ValueError as exc:
        raise click.UsageError(str(exc))


def _parse_range(text: str) -> range:
    """Inclusive 'a..b' range, or a single value 'a'."""
    if ".." in text:
        lo, hi = text.split("..", 1)
    else:
        lo = hi = text
    try:
        return range(int(lo), int(hi) + 1)
    except ValueError:
        raise click.UsageError(f"bad range {text!r}; expected a..b")


class KParam(click.IntRange):
    def __init__(self):
        super().__init__(min=3)

    def convert(self, value, param, ctx):
        try:
            return super().convert(value, param, ctx)
        except click.UsageError:
            raise click.UsageError(
                f"k must be at least 3 (got {value}): negating a symbol "
                "is the identity map when k=2, so nothing here is defined")


K_OPTION = click.option("--k", type=KParam(), required=True,
                        help="Alphabet size (k >= 3).")
N_OPTION = click.option("--n", type=click.IntRange(min=2), required=True,
                        help="Window order (n >= 2).")
FORMAT_OPTION = click.option("--format", "fmt", type=FORMATS, default="text",
                             show_default=True, help="Output format.")


def _emit(payload, fmt: str, text: str, output=None) -> None:
    rendered = json.dumps(payload, sort_keys=True) + "\n" if fmt == "json" else text
    if output is not None:
        output.write(rendered)
    else:
        click.echo(rendered, nl=False)


@click.group()
def main():
    """Analyze negative orientable sequences (NOS) over Z_k, k > 2."""


@main.command()
@K_OPTION
@click.option("--tuple", "tuple_text", required=True,
              help="Comma-separated symbols, e.g. 0,1,2.")
@FORMAT_OPTION
def classify(k, tuple_text, fmt):
    """Classification flags for one tuple."""
    w = _parse_tuple(tuple_text, k)
    long_enough = len(w) >= 2
    flags = {
        "negasymmetric": w.is_negasymmetric(),
        "uniform": w.is_uniform(),
        "alternating": w.is_alternating() if long_enough else False,
        "uniform_alternating": w.is_uniform_alternating() if long_enough else False,
        "left_sns": w.is_left_sns() if long_enough else None,
        "right_sns": w.is_right_sns() if long_enough else None,
    }
    payload = {"tuple": str(w), "k": k, "flags": flags}
    text = f"tuple {w} over Z_{k}\n" + "".join(
        f"  {name}: {value}\n" for name, value in flags.items())
    _emit(payload, fmt, text)


@main.command()
@click.option("--class", "class_name", required=True,
              type=click.Choice([c.value for c in tuples_mod.TupleClass]),
              help="Tuple class to count.")
@N_OPTION
@K_OPTION
@click.option("--enumerate", "do_enumerate", is_flag=True,
              help="Cross-check the closed form against brute-force enumeration.")
@FORMAT_OPTION
def count(class_name, n, k, do_enumerate, fmt):
    """Closed-form count of a tuple class."""
    cls = tuples_mod.TupleClass(class_name)
    try:
        value = tuples_mod.count_class(cls, n, k)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    payload = {"class": class_name, "n": n, "k": k, "count": value}
    if do_enumerate:
        try:
            enumerated = sum(1 for _ in tuples_mod.enumerate_class(cls, n, k))
        except EnumerationBudgetError as exc:
            click.echo(str(exc), err=True)
            sys.exit(EXIT_BUDGET)
        payload["enumerated"] = enumerated
        payload["matches"] = enumerated == value
    text = f"{value}\n"
    _emit(payload, fmt, text)
    if do_enumerate and not payload["matches"]:
        sys.exit(EXIT_INVALID)


@main.command()
@N_OPTION
@K_OPTION
@FORMAT_OPTION
def edges(n, k, fmt):
    """Edge count of the reduced de Bruijn graph."""
    value = graph_mod.edge_count_formula(n, k)
    payload = {"n": n, "k": k, "edges": value,
               "vertices": k ** (n - 1)}
    _emit(payload, fmt, f"{value}\n")


@main.command()
@N_OPTION
@K_OPTION
@click.option("--vertex", required=True,
              help="Vertex label: comma-separated symbols of length n-1.")
@FORMAT_OPTION
def profile(n, k, vertex, fmt):
    """Degree and classification profile of one vertex."""
    g = graph_mod.ReducedGraph(n, k)
    w = _parse_tuple(vertex, k)
    try:
        p = graph_mod.vertex_profile(g, w)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    payload = {
        "label": str(p.label), "n": n, "k": k,
        "in_degree": p.in_degree, "out_degree": p.out_degree,
        "in_parity": p.in_parity, "out_parity": p.out_parity,
        "flags": {
            "left_sns": p.left_sns, "right_sns": p.right_sns,
            "negasymmetric": p.negasymmetric, "uniform": p.uniform,
            "alternating": p.alternating,
            "uniform_alternating": p.uniform_alternating,
        },
    }
    text = (f"vertex {p.label}: in={p.in_degree} ({p.in_parity}), "
            f"out={p.out_degree} ({p.out_parity})\n"
            f"  left_sns={p.left_sns} right_sns={p.right_sns} "
            f"negasymmetric={p.negasymmetric} uniform={p.uniform} "
            f"alternating={p.alternating} "
            f"uniform_alternating={p.uniform_alternating}\n")
    _emit(payload, fmt, text)


@main.command()
@N_OPTION
@K_OPTION
@FORMAT_OPTION
def bound(n, k, fmt):
    """New period upper bound for an order-n NOS over Z_k."""
    b = bounds_mod.nos_bound(n, k)
    d = b.breakdown
    payload = {
        "n": n, "k": k, "bound": b.value, "regime": b.regime,
        "breakdown": {
            "N": d.N, "u_out": d.u_out, "u_in": d.u_in,
            "p_out": d.p_out, "p_in": d.p_in,
            "ix_up": d.ix_up, "ix_pu": d.ix_pu,
            "ix_uu": d.ix_uu, "ix_pp": d.ix_pp,
            "edge_cap": d.resulting_edge_cap,
        },
    }
    _emit(payload, fmt, f"{b.value}\n")


@main.command()
@click.option("--n", "n_text", required=True, help="Row range, e.g. 2..9.")
@click.option("--k", "k_text", required=True, help="Column range, e.g. 3..9.")
@click.option("--check-reference", is_flag=True,
              help="Compare cells against the shipped reference table.")
@click.option("--reference-csv", type=click.Path(exists=True), default=None,
              help="Override the packaged reference CSV.")
@FORMAT_OPTION
def table(n_text, k_text, check_reference, reference_csv, fmt):
    """Grid of period bounds (rows n, columns k)."""
    n_range, k_range = _parse_range(n_text), _parse_range(k_text)
    if n_range.start < 2 or k_range.start < 3:
        raise click.UsageError("ranges must satisfy n >= 2 and k >= 3")
    reference = bounds_mod.load_reference_table(reference_csv)
    cells = bounds_mod.bound_table(n_range, k_range, reference)
    payload = [{
        "n": c.n, "k": c.k, "bound": c.bound, "regime": c.regime,
        "reference": c.reference, "matches_reference": c.matches_reference,
    } for c in cells]
    text = bounds_mod.format_table(cells, flag_mismatches=check_reference)
    _emit(payload, fmt, text)
    if check_reference:
        mismatched = [c for c in cells if c.matches_reference is False]
        if mismatched:
            for c in mismatched:
                click.echo(f"mismatch at n={c.n}, k={c.k}: computed {c.bound}, "
                           f"reference {c.reference}", err=True)
            sys.exit(EXIT_INVALID)


@main.command()
@N_OPTION
@K_OPTION
@click.option("--seed-file", type=click.File("r"), default=None,
              help="Sequences to verify, one per line; default stdin.")
@click.option("--property", "prop", type=click.Choice(["window", "nos", "os"]),
              default="nos", show_default=True)
@FORMAT_OPTION
def verify(n, k, seed_file, prop, fmt):
    """Verify sequences read from a file or stdin."""
    check = {"window": verify_mod.is_window_sequence,
             "nos": verify_mod.is_nos,
             "os": verify_mod.is_os}[prop]
    stream = seed_file if seed_file is not None else sys.stdin
    any_invalid = False
    for seq in verify_mod.read_sequences(stream, k):
        verdict = check(seq, n)
        payload = {
            "sequence": str(seq), "n": n, "k": k, "property": prop,
            "valid": verdict.valid, "period": verdict.period,
            "witness": None if verdict.witness is None else {
                "i": verdict.witness.i, "j": verdict.witness.j,
                "kind": verdict.witness.kind,
            },
            "order_exceeds_period": verdict.order_exceeds_period,
        }
        if verdict.valid:
            text = f"valid {prop.upper() if prop != 'window' else 'window sequence'}, period {verdict.period}\n"
        else:
            w = verdict.witness
            text = (f"invalid {prop}: {w.kind} at windows ({w.i},{w.j}), "
                    f"period {verdict.period}\n")
            any_invalid = True
        _emit(payload, fmt, text)
    if any_invalid:
        sys.exit(EXIT_INVALID)


@main.command()
@N_OPTION
@K_OPTION
@click.option("--budget", type=int, default=search_mod.DEFAULT_NODE_BUDGET,
              show_default=True, help="Maximum search-tree expansions.")
@click.option("--time-budget", type=float, default=None,
              help="Wall-clock cap in seconds.")
@click.option("--symmetry/--no-symmetry", default=True, show_default=True,
              help="Restrict first edges to symmetry-orbit representatives.")
@click.option("--prune/--no-prune", default=True, show_default=True,
              help="Cut branches that cannot beat the incumbent.")
@click.option("--certificate", "certificate_path", type=click.File("w"),
              default=None, help="Write a replayable certificate here.")
@click.option("--output", type=click.File("w"), default=None,
              help="Write the result record here instead of stdout.")
@FORMAT_OPTION
def search(n, k, budget, time_budget, symmetry, prune, certificate_path,
           output, fmt):
    """Exhaustive (or budgeted) search for a maximum-period NOS."""
    cfg = search_mod.SearchConfig(n=n, k=k, node_budget=budget,
                                  time_budget=time_budget,
                                  symmetry_reduction=symmetry,
                                  prune_bound=prune)
    try:
        result = search_mod.max_nos_search(cfg)
    except GraphSizeError as exc:
        click.echo(str(exc), err=True)
        sys.exit(EXIT_BUDGET)
    payload = {
        "n": n, "k": k, "period": result.period,
        "optimal": result.optimal,
        "sequence": str(result.best_sequence) if result.best_sequence else None,
        "expansions": result.expansions,
        "bound": result.bound,
    }
    text = (f"period {result.period} "
            f"({'optimal' if result.optimal else 'budget exhausted'}), "
            f"bound {result.bound}\n"
            f"sequence {result.best_sequence}\n")
    _emit(payload, fmt, text, output)
    click.echo(f"elapsed {result.elapsed:.3f}s, "
               f"{result.expansions} expansions", err=True)
    if certificate_path is not None:
        certificate_path.write(search_mod.certify(result))
    if result.best_sequence is None:
        sys.exit(EXIT_INVALID)
    if not result.optimal:
        sys.exit(EXIT_BUDGET)


@main.command("export-dot")
@N_OPTION
@K_OPTION
@click.option("--sequence", "sequence_text", default=None,
              help="Export B^-(S,n) for this sequence instead of the full graph.")
@click.option("--output", type=click.File("w"), default=None,
              help="Write DOT here instead of stdout.")
def export_dot(n, k, sequence_text, output):
    """DOT export of the reduced graph or one sequence subgraph."""
    try:
        if sequence_text is None:
            g = graph_mod.ReducedGraph(n, k, explicit=True)
            text = graph_mod.export_dot(g)
        else:
            seq = verify_mod.parse_sequence_line(sequence_text, k)
            sub = graph_mod.sequence_subgraph(seq, n)
            text = graph_mod.export_dot(sub, name="nega_sequence_subgraph")
    except (GraphSizeError,) as exc:
        click.echo(str(exc), err=True)
        sys.exit(EXIT_BUDGET)
    except NotAnNosError as exc:
        click.echo(str(exc), err=True)
        sys.exit(EXIT_INVALID)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    if output is not None:
        output.write(text)
    else:
        click.echo(text, nl=False)


if __name__ == "__main__":
    main()
