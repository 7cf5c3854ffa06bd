"""Command line interface: graph6 in, JSONL out.

Every subcommand reads graph6 (file argument or stdin), emits one JSON
object per line, and honors the ODDHOLES_BUDGET environment variable as
the default node budget; --budget overrides it.
"""

from __future__ import annotations

import sys

import click

from .budget import Budget, BudgetExceeded, default_budget_cap
from .coloring import chromatic_number, is_k_vertex_critical
from .cuts import find_path_cut, find_two_edge_cut
from .decompose import decompose as run_decompose
from .decompose import verify_certificate
from .generators import GeneratorSpec, generate
from .graphs import read_graph6_lines, to_graph6
from .holes import check_membership, odd_hole_spectrum
from .jumps import find_jumps
from .report import (
    dumps,
    render_hole_histogram,
    render_verdict_counts,
    report_lines,
    write_jsonl,
)
from .structures import find_chordal_paths, find_k4_subdivisions
from .suites import (
    CONJECTURE_IDS,
    SUITE_IDS,
    CorpusItem,
    default_corpus,
    run_conjecture,
    run_suite,
)


def _read_graphs(path: str | None):
    if path is None or path == "-":
        return read_graph6_lines(sys.stdin)
    with open(path) as fh:
        return read_graph6_lines(fh)


def _emit(records, out: str | None):
    write_jsonl([dumps(r) for r in records], out)


def _budget(cap: int | None) -> Budget:
    return Budget(cap if cap is not None else default_budget_cap())


graphs_arg = click.argument("graphs", required=False, type=click.Path(allow_dash=True))
out_opt = click.option("--out", default=None, type=click.Path(), help="write JSONL here instead of stdout")
budget_opt = click.option("--budget", default=None, type=int, help="node budget per expensive call")


@click.group()
def main():
    """Odd hole structure toolkit."""


@main.command()
@graphs_arg
@click.option("--ell", required=True, type=int)
@budget_opt
@out_opt
def membership(graphs, ell, budget, out):
    """Decide membership in the girth-(2*ell+1), no-longer-odd-hole class."""
    recs = []
    for i, g in enumerate(_read_graphs(graphs)):
        v = check_membership(g, ell, _budget(budget))
        recs.append({"index": i, "graph6": to_graph6(g), **v.as_dict()})
    _emit(recs, out)


@main.command()
@graphs_arg
@budget_opt
@out_opt
@click.option("--figures", default=None, type=click.Path(), help="render figures into this directory")
def holes(graphs, budget, out, figures):
    """Hole spectrum: girth plus odd/even hole length counts."""
    recs = []
    for i, g in enumerate(_read_graphs(graphs)):
        try:
            spec = odd_hole_spectrum(g, _budget(budget), keep_holes=bool(figures))
            rec = {"index": i, "graph6": to_graph6(g), **spec.as_dict()}
            if figures:
                rec["figure"] = render_hole_histogram(spec, figures, name=f"graph{i}")
        except BudgetExceeded:
            rec = {"index": i, "graph6": to_graph6(g), "status": "unknown",
                   "reason": "budget exceeded"}
        recs.append(rec)
    _emit(recs, out)


@main.command()
@graphs_arg
@click.option("--find", "what", type=click.Choice(["k4", "chordal"]), default="k4")
@budget_opt
@out_opt
def structures(graphs, what, budget, out):
    """Find K4-subdivisions or chordal paths of odd holes."""
    recs = []
    for i, g in enumerate(_read_graphs(graphs)):
        rec = {"index": i, "graph6": to_graph6(g)}
        try:
            if what == "k4":
                subs = find_k4_subdivisions(g, budget=_budget(budget))
                rec["k4_subdivisions"] = [h.as_dict() for h in subs]
            else:
                items = []
                spec = odd_hole_spectrum(g, _budget(budget))
                for h in spec.holes or []:
                    if not h.odd:
                        continue
                    for cp in find_chordal_paths(g, h, _budget(budget)):
                        items.append({"hole": list(h.vertices),
                                      "path": list(cp.path.vertices),
                                      "lengths": list(cp.lengths)})
                rec["chordal_paths"] = items
        except BudgetExceeded:
            rec["status"] = "unknown"
            rec["reason"] = "budget exceeded"
        recs.append(rec)
    _emit(recs, out)


@main.command()
@graphs_arg
@budget_opt
@out_opt
def jumps(graphs, budget, out):
    """Classify every jump over every odd hole."""
    recs = []
    for i, g in enumerate(_read_graphs(graphs)):
        rec = {"index": i, "graph6": to_graph6(g), "jumps": []}
        try:
            spec = odd_hole_spectrum(g, _budget(budget))
            for h in spec.holes or []:
                if not h.odd:
                    continue
                for j in find_jumps(g, h, _budget(budget)):
                    rec["jumps"].append({"hole": list(h.vertices), **j.as_dict()})
        except BudgetExceeded:
            rec["status"] = "unknown"
            rec["reason"] = "budget exceeded"
        recs.append(rec)
    _emit(recs, out)


@main.command()
@graphs_arg
@click.option("--ell", required=True, type=int)
@budget_opt
@out_opt
def decompose(graphs, ell, budget, out):
    """Run the four-way decomposition and verify its certificate."""
    if ell < 5:
        raise click.UsageError("decomposition requires --ell >= 5")
    recs = []
    for i, g in enumerate(_read_graphs(graphs)):
        res = run_decompose(g, ell, _budget(budget))
        rec = {"index": i, "graph6": to_graph6(g), **res.as_dict()}
        if res.status == "certificate":
            ok, why = verify_certificate(g, res.certificate)
            rec["verified"] = ok
            if not ok:
                rec["verify_error"] = why
        recs.append(rec)
    _emit(recs, out)


@main.command()
@graphs_arg
@click.option("--max-k", default=8, type=int)
@budget_opt
@out_opt
def color(graphs, max_k, budget, out):
    """Exact chromatic number with a witness coloring."""
    recs = []
    for i, g in enumerate(_read_graphs(graphs)):
        try:
            res = chromatic_number(g, max_k=max_k, budget=_budget(budget))
            rec = {"index": i, "graph6": to_graph6(g)}
            if res is None:
                rec["status"] = "unknown"
                rec["reason"] = f"not colorable within max_k={max_k}"
            else:
                rec.update(res.as_dict())
        except BudgetExceeded:
            rec = {"index": i, "graph6": to_graph6(g), "status": "unknown",
                   "reason": "budget exceeded"}
        recs.append(rec)
    _emit(recs, out)


@main.command()
@graphs_arg
@click.option("--k", required=True, type=int)
@budget_opt
@out_opt
def critical(graphs, k, budget, out):
    """Decide k-vertex-criticality."""
    recs = []
    for i, g in enumerate(_read_graphs(graphs)):
        try:
            crit, info = is_k_vertex_critical(g, k, _budget(budget))
            recs.append({"index": i, "graph6": to_graph6(g), "k": k,
                         "critical": crit, "chi": info.get("chi")})
        except BudgetExceeded:
            recs.append({"index": i, "graph6": to_graph6(g), "k": k,
                         "status": "unknown", "reason": "budget exceeded"})
    _emit(recs, out)


def _load_corpus(graphs, ell, seed):
    if graphs is not None:
        gs = _read_graphs(graphs)
        return [CorpusItem(g, ell, f"input:{i}") for i, g in enumerate(gs)]
    return default_corpus(seed=seed)


@main.command()
@graphs_arg
@click.option("--id", "suite_id", required=True, type=click.Choice(SUITE_IDS))
@click.option("--ell", default=None, type=int, help="ell for all input graphs")
@click.option("--seed", default=0, type=int)
@budget_opt
@out_opt
@click.option("--figures", default=None, type=click.Path(), help="render figures into this directory")
def suite(graphs, suite_id, ell, seed, budget, out, figures):
    """Run a lemma suite over a corpus (input graphs or the built-in one)."""
    corpus = _load_corpus(graphs, ell, seed)
    cap = budget if budget is not None else default_budget_cap()
    rep = run_suite(suite_id, corpus, budget_cap=cap, seed=seed)
    if figures:
        render_verdict_counts(rep, figures)
    write_jsonl(report_lines(rep), out)
    if rep.counts["violation"]:
        sys.exit(3)


@main.command()
@graphs_arg
@click.option("--id", "conj_id", required=True, type=click.Choice(CONJECTURE_IDS))
@click.option("--ell", default=None, type=int)
@click.option("--seed", default=0, type=int)
@budget_opt
@out_opt
@click.option("--figures", default=None, type=click.Path(), help="render figures into this directory")
def conjecture(graphs, conj_id, ell, seed, budget, out, figures):
    """Check a conjecture over a corpus; violations are counterexamples."""
    corpus = _load_corpus(graphs, ell, seed)
    cap = budget if budget is not None else default_budget_cap()
    rep = run_conjecture(conj_id, corpus, budget_cap=cap, seed=seed)
    if figures:
        render_verdict_counts(rep, figures)
    write_jsonl(report_lines(rep), out)
    if rep.counts["violation"]:
        sys.exit(3)


@main.command()
@click.option("--kind", required=True,
              type=click.Choice(["odd_cycle", "named", "subdivided_k4", "augmented_member"]))
@click.option("--ell", default=None, type=int)
@click.option("--name", default=None, type=str)
@click.option("--lengths", default=None, type=str, help="six comma-separated arris lengths")
@click.option("--steps", default=4, type=int)
@click.option("--count", default=1, type=int)
@click.option("--seed", default=0, type=int)
@out_opt
def generate_cmd(kind, ell, name, lengths, steps, count, seed, out):
    """Emit generated graphs as graph6 lines."""
    params = {}
    if ell is not None:
        params["ell"] = ell
    if name is not None:
        params["name"] = name
    if lengths is not None:
        params["lengths"] = [int(x) for x in lengths.split(",")]
    if kind == "augmented_member":
        params.update(steps=steps, count=count, seed=seed)
    spec = GeneratorSpec(kind, params)
    lines = [to_graph6(g) for g in generate(spec)]
    write_jsonl(lines, out)


main.add_command(generate_cmd, name="generate")


if __name__ == "__main__":
    main()
