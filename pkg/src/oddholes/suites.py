"""Per-lemma fuzz suites and conjecture checks over graph corpora.

Each suite locates its hypothesis instances with the detector modules,
evaluates the conclusion checker, and aggregates verdicts.  Violations
carry standalone reproduction bundles (graph6 plus the instance data);
per-instance "unknown" verdicts record budget exhaustion and are never
silently dropped.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations

from .budget import Budget, BudgetExceeded
from .coloring import chromatic_number, is_k_vertex_critical
from .cuts import find_path_cut, find_two_edge_cut
from .decompose import decompose, verify_certificate
from .generators import augment_member, odd_cycle, odd_k4_member, petersen
from .graphs import Graph, to_graph6
from .holes import check_membership, enumerate_cycles_with_length, girth, odd_hole_spectrum
from .jumps import (
    LOCAL,
    SHORT,
    LemmaViolation,
    check_cross_short_jump,
    check_uncrossing_jumps,
    crossing,
    extract_local_one_or_short,
    extract_short_jump,
    find_jumps,
    jump_parity_check,
    validate_short_jump,
)
from .structures import (
    BALANCED,
    BALANCED_TYPE_1_2,
    check_4ell_hole_chords,
    check_easy_case,
    check_theta_pair,
    find_chordal_paths,
    find_k4_subdivisions,
    lemma_odd_k4_check,
    _is_theta_union,
)
from .verdicts import (
    CONSISTENT,
    NOT_APPLICABLE,
    UNKNOWN,
    VIOLATION,
    Verdict,
    consistent,
    not_applicable,
    unknown,
    violation,
)

SUITE_IDS = (
    "L2.1",
    "L2.2",
    "L2.3",
    "theta_pair",
    "4ell_chords",
    "L3.1",
    "T3.2",
    "L4.1",
    "L4.2",
    "L4.3",
    "L4.4",
    "L4.5",
    "T4.6",
    "T5.1",
    "T1.2",
)

CONJECTURE_IDS = ("wu_xu_xu_1_3", "same_length_1_4a", "k_lengths_1_4b")


@dataclass
class CorpusItem:
    graph: Graph
    ell: int | None = None
    source: str = ""
    _member: bool | None = None
    _member_checked: bool = False

    def member(self, budget_cap: int | None) -> bool | None:
        """Cached membership verdict for self.ell (None = unknown)."""
        if self.ell is None:
            return False
        if not self._member_checked:
            try:
                v = check_membership(self.graph, self.ell, Budget(budget_cap))
                self._member = v.member
            except BudgetExceeded:
                self._member = None
            self._member_checked = True
        return self._member


@dataclass
class SuiteReport:
    suite: str
    seed: int
    budget_cap: int | None
    instances: list[dict] = field(default_factory=list)
    wall_time_s: float = 0.0

    @property
    def counts(self) -> dict:
        out = {s: 0 for s in (CONSISTENT, VIOLATION, NOT_APPLICABLE, UNKNOWN)}
        for rec in self.instances:
            out[rec["status"]] += 1
        return out

    @property
    def violations(self) -> list[dict]:
        return [r for r in self.instances if r["status"] == VIOLATION]

    def summary(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "budget_cap": self.budget_cap,
            "counts": self.counts,
            "instances": len(self.instances),
            "wall_time_s": round(self.wall_time_s, 3),
        }


def _record(report, idx: int, item: CorpusItem, instance: dict, v: Verdict) -> None:
    rec = {
        "input_index": idx,
        "source": item.source,
        "instance": instance,
        "status": v.status,
        "detail": v.detail,
    }
    if v.status == VIOLATION:
        rec["repro"] = {"graph6": to_graph6(item.graph), "ell": item.ell}
    report.instances.append(rec)


def _member_gate(item: CorpusItem, budget_cap) -> Verdict | None:
    m = item.member(budget_cap)
    if m is True:
        return None
    if m is None:
        return unknown(reason="membership undecided within budget")
    return not_applicable(reason="not a verified member")


def _odd_holes(item: CorpusItem, budget_cap) -> list:
    spec = odd_hole_spectrum(item.graph, Budget(budget_cap))
    return [h for h in (spec.holes or []) if h.odd]


# -- per-suite drivers -------------------------------------------------


def _suite_L21(report, idx, item, budget_cap):
    g = item.graph
    res = chromatic_number(g, max_k=8, budget=Budget(budget_cap))
    if res is None or res.k < 4:
        _record(report, idx, item, {"chi": res.k if res else None},
                not_applicable(reason="chromatic number below 4"))
        return
    crit, info = is_k_vertex_critical(g, res.k, Budget(budget_cap))
    if not crit:
        _record(report, idx, item, {"chi": res.k},
                not_applicable(reason="not vertex-critical"))
        return
    cut = find_two_edge_cut(g)
    v = consistent(chi=res.k) if cut is None else violation(cut=cut.as_dict())
    _record(report, idx, item, {"chi": res.k, "k_critical": res.k}, v)


def _suite_L22(report, idx, item, budget_cap):
    g = item.graph
    gate = _member_gate(item, budget_cap)
    if gate is not None:
        _record(report, idx, item, {}, gate)
        return
    crit, _ = is_k_vertex_critical(g, 4, Budget(budget_cap))
    if not crit:
        _record(report, idx, item, {}, not_applicable(reason="not 4-vertex-critical"))
        return
    for i in (2, 3):
        cut = find_path_cut(g, i)
        v = consistent() if cut is None else violation(cut=cut.as_dict())
        _record(report, idx, item, {"cut_size": i}, v)


def _suite_L23(report, idx, item, budget_cap):
    gate = _member_gate(item, budget_cap)
    if gate is not None:
        _record(report, idx, item, {}, gate)
        return
    g, ell = item.graph, item.ell
    for h in _odd_holes(item, budget_cap):
        try:
            cps = find_chordal_paths(g, h, Budget(budget_cap))
        except BudgetExceeded:
            _record(report, idx, item, {"hole": list(h.vertices)},
                    unknown(reason="chordal path budget exceeded"))
            continue
        for cp in cps:
            v = check_easy_case(ell, cp)
            _record(report, idx, item,
                    {"hole": list(h.vertices), "path": list(cp.path.vertices)}, v)


def _suite_theta_pair(report, idx, item, budget_cap):
    gate = _member_gate(item, budget_cap)
    if gate is not None:
        _record(report, idx, item, {}, gate)
        return
    g, ell = item.graph, item.ell
    holes = _odd_holes(item, budget_cap)
    for c1, c2 in combinations(holes, 2):
        if not _is_theta_union(c1, c2):
            continue
        v = check_theta_pair(g, c1, c2, ell, Budget(budget_cap))
        _record(report, idx, item,
                {"hole1": list(c1.vertices), "hole2": list(c2.vertices)}, v)


def _suite_4ell_chords(report, idx, item, budget_cap):
    gate = _member_gate(item, budget_cap)
    if gate is not None:
        _record(report, idx, item, {}, gate)
        return
    g, ell = item.graph, item.ell
    try:
        cycles = enumerate_cycles_with_length(g, 4 * ell, Budget(budget_cap))
    except BudgetExceeded:
        _record(report, idx, item, {}, unknown(reason="cycle enumeration budget exceeded"))
        return
    for cyc in cycles:
        v = check_4ell_hole_chords(g, cyc, ell, Budget(budget_cap))
        _record(report, idx, item, {"cycle": cyc}, v)


def _suite_L31(report, idx, item, budget_cap):
    gate = _member_gate(item, budget_cap)
    if gate is not None:
        _record(report, idx, item, {}, gate)
        return
    g, ell = item.graph, item.ell
    try:
        subs = find_k4_subdivisions(g, induced_only=True, budget=Budget(budget_cap))
    except BudgetExceeded:
        _record(report, idx, item, {}, unknown(reason="subdivision search budget exceeded"))
        return
    for h in subs:
        if h.kind not in (BALANCED, BALANCED_TYPE_1_2):
            continue
        verdicts = lemma_odd_k4_check(g, ell, h, budget=Budget(budget_cap))
        for claim, v in verdicts.items():
            _record(report, idx, item, {"branch": list(h.branch), "claim": claim}, v)


def _suite_T32(report, idx, item, budget_cap):
    gate = _member_gate(item, budget_cap)
    if gate is not None or item.ell < 5:
        _record(report, idx, item, {},
                gate or not_applicable(reason="requires ell >= 5"))
        return
    g = item.graph
    crit, _ = is_k_vertex_critical(g, 4, Budget(budget_cap))
    if not crit:
        _record(report, idx, item, {}, not_applicable(reason="not 4-vertex-critical"))
        return
    try:
        found = find_k4_subdivisions(
            g, induced_only=True, budget=Budget(budget_cap),
            kinds=(BALANCED_TYPE_1_2,), first_only=True,
        )
    except BudgetExceeded:
        _record(report, idx, item, {}, unknown(reason="budget exceeded"))
        return
    v = consistent() if not found else violation(branch=list(found[0].branch))
    _record(report, idx, item, {}, v)


def _for_each_jump(item, budget_cap):
    g = item.graph
    for h in _odd_holes(item, budget_cap):
        try:
            js = find_jumps(g, h, Budget(budget_cap))
        except BudgetExceeded:
            yield h, None
            continue
        yield h, js


def _suite_L41(report, idx, item, budget_cap):
    gate = _member_gate(item, budget_cap)
    if gate is not None:
        _record(report, idx, item, {}, gate)
        return
    g, ell = item.graph, item.ell
    for h, js in _for_each_jump(item, budget_cap):
        if js is None:
            _record(report, idx, item, {"hole": list(h.vertices)},
                    unknown(reason="jump search budget exceeded"))
            continue
        for j in js:
            if j.classification not in (SHORT, LOCAL):
                continue
            v = jump_parity_check(g, ell, j)
            _record(report, idx, item,
                    {"hole": list(h.vertices), "jump": j.as_dict()}, v)


def _suite_L42(report, idx, item, budget_cap):
    gate = _member_gate(item, budget_cap)
    if gate is not None:
        _record(report, idx, item, {}, gate)
        return
    g = item.graph
    for h, js in _for_each_jump(item, budget_cap):
        if js is None:
            _record(report, idx, item, {"hole": list(h.vertices)},
                    unknown(reason="jump search budget exceeded"))
            continue
        for j in js:
            if j.classification == LOCAL:
                continue
            inst = {"hole": list(h.vertices), "jump": j.as_dict()}
            try:
                sj = extract_short_jump(g, h, j)
                flaw = validate_short_jump(g, h, sj.path)
                inside = set(sj.path) <= set(h.vertices) | set(j.path)
                if flaw is None and inside:
                    v = consistent(short_jump=list(sj.path))
                else:
                    v = violation(reason=flaw or "escaped the hole-jump union")
            except LemmaViolation as e:
                v = violation(reason=str(e), bundle=e.bundle)
            _record(report, idx, item, inst, v)


def _suite_L43(report, idx, item, budget_cap):
    gate = _member_gate(item, budget_cap)
    if gate is not None:
        _record(report, idx, item, {}, gate)
        return
    g = item.graph
    for h, js in _for_each_jump(item, budget_cap):
        if js is None:
            _record(report, idx, item, {"hole": list(h.vertices)},
                    unknown(reason="jump search budget exceeded"))
            continue
        for j in js:
            if j.classification != LOCAL:
                continue
            inst = {"hole": list(h.vertices), "jump": j.as_dict()}
            try:
                out = extract_local_one_or_short(g, h, j)
                ok = out.classification == SHORT or (
                    out.classification == LOCAL and out.across_one_vertex
                )
                inside = set(out.path) <= set(h.vertices) | set(j.path)
                if ok and inside:
                    v = consistent(result=out.as_dict())
                else:
                    v = violation(result=out.as_dict())
            except LemmaViolation as e:
                v = violation(reason=str(e), bundle=e.bundle)
            _record(report, idx, item, inst, v)


def _suite_L44(report, idx, item, budget_cap):
    gate = _member_gate(item, budget_cap)
    if gate is not None:
        _record(report, idx, item, {}, gate)
        return
    g, ell = item.graph, item.ell
    for h, js in _for_each_jump(item, budget_cap):
        if js is None:
            continue
        shorts = [j for j in js if j.classification == SHORT]
        for j1, j2 in combinations(shorts, 2):
            if not crossing(h, j1, j2).crossing:
                continue
            v = check_cross_short_jump(g, ell, j1, j2, Budget(budget_cap))
            _record(report, idx, item,
                    {"hole": list(h.vertices), "jump1": j1.as_dict(),
                     "jump2": j2.as_dict()}, v)


def _suite_L45(report, idx, item, budget_cap):
    gate = _member_gate(item, budget_cap)
    if gate is not None or item.ell < 4:
        _record(report, idx, item, {},
                gate or not_applicable(reason="requires ell >= 4"))
        return
    g, ell = item.graph, item.ell
    for h, js in _for_each_jump(item, budget_cap):
        if js is None:
            continue
        eligible = [
            j for j in js
            if j.across is not None and (
                j.classification == SHORT
                or (j.classification == LOCAL and j.across_one_vertex)
            )
        ]
        for j1, j2 in combinations(eligible, 2):
            if set(j1.ends) == set(j2.ends):
                continue
            if crossing(h, j1, j2).crossing:
                continue
            if set(j1.across) & set(j2.across):
                continue  # hypothesis wants disjoint across segments
            verdicts = check_uncrossing_jumps(g, ell, j1, j2, Budget(budget_cap))
            for claim, v in verdicts.items():
                _record(report, idx, item,
                        {"hole": list(h.vertices), "ends1": sorted(j1.ends),
                         "ends2": sorted(j2.ends), "claim": claim}, v)


def _suite_T46(report, idx, item, budget_cap):
    g, ell = item.graph, item.ell
    if ell is None or ell < 5:
        _record(report, idx, item, {}, not_applicable(reason="requires ell >= 5"))
        return
    res = decompose(g, ell, Budget(budget_cap))
    if res.status == "certificate":
        ok, why = verify_certificate(g, res.certificate)
        v = (
            consistent(outcome=res.certificate.outcome)
            if ok
            else violation(reason=f"certificate failed validation: {why}")
        )
    elif res.status == "not_member":
        v = not_applicable(reason="not a verified member")
    elif res.status == "unknown":
        v = unknown(**(res.detail or {}))
    else:
        v = violation(**(res.detail or {}))
    _record(report, idx, item, {"n": g.n}, v)


def _suite_T51(report, idx, item, budget_cap):
    gate = _member_gate(item, budget_cap)
    if gate is not None or item.ell < 5:
        _record(report, idx, item, {},
                gate or not_applicable(reason="requires ell >= 5"))
        return
    res = chromatic_number(item.graph, max_k=8, budget=Budget(budget_cap))
    v = consistent(chi=res.k) if res and res.k <= 3 else violation(chi=res.k if res else None)
    _record(report, idx, item, {}, v)


def _suite_T12(report, idx, item, budget_cap):
    gate = _member_gate(item, budget_cap)
    if gate is not None or item.ell < 5:
        _record(report, idx, item, {},
                gate or not_applicable(reason="requires ell >= 5"))
        return
    g = item.graph
    try:
        found = find_k4_subdivisions(
            g, induced_only=True, budget=Budget(budget_cap), kinds=("odd",), first_only=True
        )
    except BudgetExceeded:
        _record(report, idx, item, {}, unknown(reason="budget exceeded"))
        return
    if not found:
        _record(report, idx, item, {},
                not_applicable(reason="no all-odd-faces K4-subdivision"))
        return
    res = chromatic_number(g, max_k=8, budget=Budget(budget_cap))
    v = consistent(chi=3) if res and res.k == 3 else violation(chi=res.k if res else None)
    _record(report, idx, item, {"branch": list(found[0].branch)}, v)


_SUITES = {
    "L2.1": _suite_L21,
    "L2.2": _suite_L22,
    "L2.3": _suite_L23,
    "theta_pair": _suite_theta_pair,
    "4ell_chords": _suite_4ell_chords,
    "L3.1": _suite_L31,
    "T3.2": _suite_T32,
    "L4.1": _suite_L41,
    "L4.2": _suite_L42,
    "L4.3": _suite_L43,
    "L4.4": _suite_L44,
    "L4.5": _suite_L45,
    "T4.6": _suite_T46,
    "T5.1": _suite_T51,
    "T1.2": _suite_T12,
}


def run_suite(
    suite: str,
    corpus: list[CorpusItem],
    budget_cap: int | None = None,
    seed: int = 0,
) -> SuiteReport:
    if suite not in _SUITES:
        raise ValueError(f"unknown suite {suite!r}; known: {SUITE_IDS}")
    if not corpus:
        raise ValueError("corpus must be nonempty")
    report = SuiteReport(suite, seed, budget_cap)
    t0 = time.perf_counter()
    fn = _SUITES[suite]
    for idx, item in enumerate(corpus):
        fn(report, idx, item, budget_cap)
    report.wall_time_s = time.perf_counter() - t0
    return report


# -- conjectures -------------------------------------------------------


def _ell_of_girth(g: Graph) -> int | None:
    gv = girth(g)
    if gv == float("inf") or gv % 2 == 0 or gv < 5:
        return None
    return int((gv - 1) // 2)


def run_conjecture(
    conjecture: str,
    corpus: list[CorpusItem],
    budget_cap: int | None = None,
    seed: int = 0,
) -> SuiteReport:
    if conjecture not in CONJECTURE_IDS:
        raise ValueError(f"unknown conjecture {conjecture!r}; known: {CONJECTURE_IDS}")
    if not corpus:
        raise ValueError("corpus must be nonempty")
    report = SuiteReport(conjecture, seed, budget_cap)
    t0 = time.perf_counter()
    for idx, item in enumerate(corpus):
        g = item.graph
        try:
            if conjecture == "wu_xu_xu_1_3":
                ell = item.ell if item.ell else _ell_of_girth(g)
                if ell is None:
                    _record(report, idx, item, {},
                            not_applicable(reason="girth not of the form 2l+1, l>=2"))
                    continue
                probe = CorpusItem(g, ell, item.source)
                gate = _member_gate(probe, budget_cap)
                if gate is not None:
                    _record(report, idx, item, {"ell": ell}, gate)
                    continue
                res = chromatic_number(g, max_k=8, budget=Budget(budget_cap))
                v = consistent(chi=res.k) if res and res.k <= 3 else violation(
                    chi=res.k if res else None)
                _record(report, idx, item, {"ell": ell}, v)
            elif conjecture == "same_length_1_4a":
                gv = girth(g)
                if gv == 3:
                    _record(report, idx, item, {}, not_applicable(reason="has a triangle"))
                    continue
                spec = odd_hole_spectrum(g, Budget(budget_cap))
                lengths = sorted(spec.odd_lengths)
                if len(lengths) > 1:
                    _record(report, idx, item, {"odd_lengths": lengths},
                            not_applicable(reason="odd holes of different lengths"))
                    continue
                res = chromatic_number(g, max_k=8, budget=Budget(budget_cap))
                v = consistent(chi=res.k) if res and res.k <= 3 else violation(
                    chi=res.k if res else None)
                _record(report, idx, item, {"odd_lengths": lengths}, v)
            else:  # k_lengths_1_4b
                ell = _ell_of_girth(g)
                if ell is None:
                    _record(report, idx, item, {},
                            not_applicable(reason="girth not of the form 2l+1, l>=2"))
                    continue
                spec = odd_hole_spectrum(g, Budget(budget_cap))
                k = len(spec.odd_lengths)
                res = chromatic_number(g, max_k=8, budget=Budget(budget_cap))
                bound = k + 2
                v = consistent(chi=res.k, bound=bound) if res and res.k <= bound else violation(
                    chi=res.k if res else None, bound=bound)
                _record(report, idx, item, {"ell": ell, "k": k}, v)
        except BudgetExceeded:
            _record(report, idx, item, {}, unknown(reason="budget exceeded"))
    report.wall_time_s = time.perf_counter() - t0
    return report


# -- built-in fuzz corpus ----------------------------------------------


def default_corpus(
    ells=(2, 3, 4, 5), per_ell: int = 4, steps: int = 4, seed: int = 0
) -> list[CorpusItem]:
    """Named members plus seeded augmentations, tagged with their ell."""
    items = [CorpusItem(petersen(), 2, "petersen")]
    for ell in ells:
        base = odd_cycle(ell)
        items.append(CorpusItem(base, ell, f"C{2 * ell + 1}"))
        items.append(CorpusItem(odd_k4_member(ell), ell, f"odd_k4(ell={ell})"))
        for i in range(per_ell):
            g, _ = augment_member(base, ell, steps, seed=seed * 1000 + ell * 100 + i)
            items.append(CorpusItem(g, ell, f"aug(ell={ell},seed={seed},i={i})"))
    return items
