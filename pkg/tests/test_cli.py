import json
import os

from click.testing import CliRunner

from oddholes.cli import main
from oddholes.generators import odd_cycle, petersen
from oddholes.graphs import to_graph6


def _run(args, input=None):
    return CliRunner().invoke(main, args, input=input, catch_exceptions=False)


P6 = to_graph6(petersen())
C11 = to_graph6(odd_cycle(5))


def test_membership_stdin():
    r = _run(["membership", "--ell", "2"], input=P6 + "\n")
    assert r.exit_code == 0
    rec = json.loads(r.output.strip())
    assert rec["member"] is True and rec["girth"] == 5


def test_holes_with_figures(tmp_path):
    figs = str(tmp_path / "figs")
    r = _run(["holes", "--figures", figs, "-"], input=P6 + "\n")
    assert r.exit_code == 0
    rec = json.loads(r.output.strip())
    assert rec["odd_lengths"] == {"5": 12}
    assert os.path.exists(rec["figure"])


def test_color_and_critical():
    r = _run(["color"], input=P6 + "\n")
    assert json.loads(r.output.strip())["chi"] == 3
    r = _run(["critical", "--k", "3"], input=P6 + "\n")
    assert json.loads(r.output.strip())["critical"] is False


def test_decompose_cli():
    r = _run(["decompose", "--ell", "5"], input=C11 + "\n")
    rec = json.loads(r.output.strip())
    assert rec["status"] == "certificate" and rec["verified"] is True
    r = _run(["decompose", "--ell", "2"], input=P6 + "\n")
    assert r.exit_code != 0


def test_structures_and_jumps():
    r = _run(["structures", "--find", "chordal"], input=P6 + "\n")
    assert len(json.loads(r.output.strip())["chordal_paths"]) == 60
    r = _run(["jumps"], input=P6 + "\n")
    assert len(json.loads(r.output.strip())["jumps"]) == 60


def test_generate_round_trips():
    r = _run(["generate", "--kind", "odd_cycle", "--ell", "4"])
    assert r.output.strip() == to_graph6(odd_cycle(4))
    r = _run(["generate", "--kind", "augmented_member", "--ell", "2",
              "--count", "2", "--seed", "5"])
    assert len(r.output.strip().splitlines()) == 2


def test_suite_cli_and_figures(tmp_path):
    figs = str(tmp_path / "figs")
    r = _run(["suite", "--id", "L2.3", "--ell", "2", "--budget", "200000",
              "--figures", figs, "-"], input=P6 + "\n")
    assert r.exit_code == 0
    summary = json.loads(r.output.strip().splitlines()[-1])["summary"]
    assert summary["counts"]["violation"] == 0
    assert os.listdir(figs)


def test_conjecture_cli_counterexample_exit_code():
    from oddholes.generators import grotzsch
    from oddholes.graphs import to_graph6 as g6

    r = _run(["conjecture", "--id", "same_length_1_4a", "-"], input=g6(grotzsch()) + "\n")
    assert r.exit_code == 3  # counterexample found


def test_cli_determinism():
    args = ["suite", "--id", "L4.1", "--ell", "2", "--seed", "7", "--budget", "200000", "-"]
    a = _run(args, input=P6 + "\n").output
    b = _run(args, input=P6 + "\n").output
    strip = lambda out: [l for l in out.splitlines() if "wall_time" not in l]
    assert strip(a) == strip(b)


def test_out_file(tmp_path):
    path = str(tmp_path / "out.jsonl")
    r = _run(["membership", "--ell", "5", "--out", path], input=C11 + "\n")
    assert r.exit_code == 0 and r.output == ""
    with open(path) as f:
        assert json.loads(f.read().strip())["member"] is True


def test_budget_env_default(monkeypatch):
    monkeypatch.setenv("ODDHOLES_BUDGET", "10")
    r = _run(["membership", "--ell", "2"], input=P6 + "\n")
    rec = json.loads(r.output.strip())
    assert rec["member"] is None  # tiny env budget forces unknown
