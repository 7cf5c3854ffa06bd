import json

import pytest

from oddholes.generators import grotzsch, odd_cycle, odd_k4_member, petersen
from oddholes.report import report_lines
from oddholes.suites import (
    CONJECTURE_IDS,
    SUITE_IDS,
    CorpusItem,
    default_corpus,
    run_conjecture,
    run_suite,
)


def _corpus():
    return [
        CorpusItem(petersen(), 2, "petersen"),
        CorpusItem(odd_cycle(5), 5, "C11"),
        CorpusItem(odd_k4_member(5), 5, "odd_k4_5"),
    ]


def test_unknown_ids_rejected():
    with pytest.raises(ValueError):
        run_suite("bogus", _corpus())
    with pytest.raises(ValueError):
        run_conjecture("bogus", _corpus())
    with pytest.raises(ValueError):
        run_suite(SUITE_IDS[0], [])


def test_all_suites_run_clean_on_members():
    for sid in SUITE_IDS:
        rep = run_suite(sid, _corpus(), budget_cap=500_000, seed=1)
        assert rep.counts["violation"] == 0, (sid, rep.violations)
        assert sum(rep.counts.values()) == len(rep.instances)


def test_chordal_path_suite_counts_on_petersen():
    rep = run_suite("L2.3", [CorpusItem(petersen(), 2, "petersen")], budget_cap=500_000)
    assert rep.counts["consistent"] == 60  # 12 five-holes x 5 chordal paths
    assert rep.counts["violation"] == 0


def test_non_member_marked_not_applicable():
    rep = run_suite("L2.3", [CorpusItem(grotzsch(), 2, "grotzsch")], budget_cap=500_000)
    assert rep.counts["not_applicable"] == 1


def test_budget_exhaustion_reports_unknown():
    rep = run_suite("L2.3", [CorpusItem(petersen(), 2, "petersen")], budget_cap=10)
    assert rep.counts["unknown"] >= 1
    assert rep.counts["violation"] == 0


def test_decompose_suite_on_members():
    rep = run_suite("T4.6", _corpus(), budget_cap=1_000_000)
    assert rep.counts["violation"] == 0
    assert rep.counts["consistent"] == 2  # the two ell=5 members


def test_violation_carries_repro_bundle():
    # the all-length-5 triangle-free chi=4 counterexample to uniform-length
    rep = run_conjecture("same_length_1_4a", [CorpusItem(grotzsch(), None, "grotzsch")])
    assert rep.counts["violation"] == 1
    bad = rep.violations[0]
    assert "repro" in bad and bad["repro"]["graph6"]
    from oddholes.graphs import from_graph6

    assert from_graph6(bad["repro"]["graph6"]) == grotzsch()


def test_conjectures_on_members():
    corpus = [CorpusItem(petersen()), CorpusItem(odd_cycle(3))]
    for cid in CONJECTURE_IDS:
        rep = run_conjecture(cid, corpus, budget_cap=500_000)
        assert rep.counts["violation"] == 0, (cid, rep.violations)


def test_reports_are_deterministic():
    for sid in ("L2.3", "L4.1", "T4.6"):
        a = run_suite(sid, _corpus(), budget_cap=500_000, seed=3)
        b = run_suite(sid, _corpus(), budget_cap=500_000, seed=3)
        la = [l for l in report_lines(a) if "wall_time" not in l]
        lb = [l for l in report_lines(b) if "wall_time" not in l]
        assert la == lb


def test_report_lines_shape():
    rep = run_suite("L2.3", [CorpusItem(petersen(), 2, "petersen")], budget_cap=500_000)
    lines = report_lines(rep)
    for line in lines:
        json.loads(line)
    summary = json.loads(lines[-1])["summary"]
    assert summary["suite"] == "L2.3"
    assert summary["counts"]["consistent"] == 60


def test_default_corpus_members():
    corpus = default_corpus(ells=(2, 5), per_ell=1, steps=2, seed=0)
    assert any(it.source == "petersen" for it in corpus)
    assert all(it.graph.n >= 5 for it in corpus)
