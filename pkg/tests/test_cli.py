import json

import pytest

from main import main
from models.errors import EXIT_CLAIM_DEVIATION, EXIT_OK, EXIT_USAGE
from models.schemas import ConvergenceReport, DecisionReport, ExamplesReport, GroupReport, VerificationReport
from tests.helpers import Q8_TABLE


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_header_and_no_header(capsys):
    code, out, _ = run(capsys, "group", "cyclic:6")
    assert code == EXIT_OK
    assert out.splitlines()[0] == "# groupcover 0.1.0"
    _, out, _ = run(capsys, "--no-header", "group", "cyclic:6")
    assert out.splitlines()[0] == "group: cyclic:6"
    assert "order: 6" in out
    assert "identity: 0" in out


def test_group_with_table(capsys):
    code, out, _ = run(capsys, "--no-header", "group", f"table:{Q8_TABLE}", "--table")
    assert code == EXIT_OK
    assert "order 8" in out.splitlines()
    assert "labels e -e i -i j -j k -k" in out.splitlines()


def test_group_json(capsys):
    _, out, _ = run(capsys, "--format", "json", "group", "dihedral:4")
    report = GroupReport.model_validate_json(out)
    assert report.order == 8
    assert report.identity == "e"
    assert report.table is None


def test_product(capsys):
    code, out, _ = run(capsys, "--no-header", "product", "cyclic:4", "0,2", "1,3")
    assert code == EXIT_OK
    assert "product: {0,2} · {1,3} = {1,3}" in out
    assert "equals G: no" in out
    _, out, _ = run(capsys, "--no-header", "product", "ea:2,2", "e,a", "e,b")
    assert "equals G: yes" in out


def test_stabilize(capsys):
    _, out, _ = run(capsys, "--no-header", "stabilize", "cyclic:6", "1,2")
    assert "stabilizes: yes, A^k = G from k = 5" in out
    assert "sizes: 2 3 4 5 6" in out
    _, out, _ = run(capsys, "--no-header", "stabilize", "cyclic:4", "{1,3}")
    assert "stabilizes: no, powers cycle from k = 1 with period 2" in out


def test_stabilize_inconclusive(capsys):
    code, _, err = run(capsys, "stabilize", "cyclic:6", "1,2", "--max-steps", "2")
    assert code == EXIT_USAGE
    assert json.loads(err.strip().splitlines()[-1])["error"] == "INCONCLUSIVE"


def test_counting_identity_command(capsys):
    code, out, _ = run(capsys, "--no-header", "theorem2", "cyclic:6", "0,1", "0,1", "--counts")
    assert code == EXIT_OK
    assert "d(B) = -2" in out
    assert "0 1 3" in out.splitlines()
    assert out.splitlines()[-1] == "cyclic:6 n=2 |A_i|=[2, 2] d=-2 PASS"


def test_counting_identity_json_round_trip(capsys):
    _, out, _ = run(capsys, "--format", "json", "theorem2", "sym:3", "0,1", "comp:0", "all", "--backend", "fixed")
    report = VerificationReport.model_validate_json(out)
    assert report.passed
    assert report.n == 3
    assert report.cardinalities == [2, 5, 6]
    assert VerificationReport.model_validate_json(report.model_dump_json()) == report


def test_decide(capsys):
    code, out, _ = run(capsys, "--no-header", "decide", "cyclic:6", "0,1", "0,1", "--check")
    assert code == EXIT_OK
    assert "pairwise cardinalities: ComplementProductIsG" in out
    assert "sign of d(B): ComplementProductIsG" in out
    assert "decisions consistent: yes" in out

    _, out, _ = run(capsys, "--format", "json", "decide", "cyclic:4", "0,2", "0,2", "0,2")
    report = DecisionReport.model_validate_json(out)
    assert report.theorem3.value == "Indeterminate"
    assert report.truth is None


def test_walk(capsys, tmp_path):
    path = tmp_path / "tv.csv"
    code, out, _ = run(capsys, "--no-header", "walk", "cyclic:4", "1,3", "--max-n", "5", "--csv", str(path))
    assert code == EXIT_OK
    assert "converged: no within n = 5" in out
    assert "last tv: 1/2" in out
    assert path.read_text().splitlines() == ["n,tv", "1,1/2", "2,1/2", "3,1/2", "4,1/2", "5,1/2"]


def test_walk_csv_and_json(capsys):
    _, out, _ = run(capsys, "--format", "csv", "walk", "cyclic:6", "1,2", "--max-n", "2")
    assert out.splitlines() == ["n,tv", "1,2/3", "2,1/2"]
    _, out, _ = run(capsys, "--format", "json", "walk", "cyclic:6", "1,2")
    report = ConvergenceReport.model_validate_json(out)
    assert report.converged
    assert report.stabilization.k == 5


def test_examples(capsys):
    code, out, _ = run(capsys, "--no-header", "examples", "all")
    assert code == EXIT_OK
    assert "DEVIATES" not in out
    _, out, _ = run(capsys, "--format", "json", "examples", "ex3")
    assert ExamplesReport.model_validate_json(out).all_hold


def test_examples_deviation_exit_code(capsys, monkeypatch):
    import services.scenarios as scenarios

    monkeypatch.setattr(scenarios, "product", lambda a, b: a)
    code, out, err = run(capsys, "--no-header", "examples", "ex1")
    assert code == EXIT_CLAIM_DEVIATION
    assert "ex1: DEVIATES" in out
    payload = json.loads(err.strip().splitlines()[-1])
    assert payload["error"] == "CLAIM_DEVIATION"
    assert payload["details"] == {"scenarios": ["ex1"]}


def test_counting_identity_deviation_exit_code(capsys, monkeypatch):
    import services.group_algebra as group_algebra

    monkeypatch.setattr(group_algebra, "_d_numerator", lambda family: -12)
    code, out, err = run(capsys, "--no-header", "theorem2", "cyclic:4", "0", "0")
    assert code == EXIT_CLAIM_DEVIATION
    assert out.splitlines()[-1].endswith("FAIL (witness g=0)")
    payload = json.loads(err.strip().splitlines()[-1])
    assert payload["error"] == "CLAIM_DEVIATION"
    assert payload["exit_code"] == EXIT_CLAIM_DEVIATION
    assert "identity" in payload["details"]["failed_checks"]


def test_spec_help_states_symmetric_limit(capsys):
    code, out, _ = run(capsys, "group", "--help")
    assert code == EXIT_OK
    assert "sym:M (M <= 7 with TABLE_ORDER_CAP=5040)" in " ".join(out.split())
    code, _, err = run(capsys, "group", "sym:8")
    assert code == EXIT_USAGE
    assert json.loads(err.strip().splitlines()[-1])["error"] == "CLOSURE_TOO_LARGE"


def test_sweep_command(capsys):
    code, out, _ = run(capsys, "--no-header", "sweep", "--groups", "cyclic:3", "ea:2,2", "--families", "5")
    assert code == EXIT_OK
    assert "passed: 30 of 30" in out


def test_output_is_deterministic(capsys):
    argv = ["theorem2", "q8", "0,1,2", "3,4", "--counts"]
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second


@pytest.mark.parametrize(
    "argv, error",
    [
        (["product", "cyclic:4", "0,,2"], "PARSE_ERROR"),
        (["group", "cyclic:"], "PARSE_ERROR"),
        (["group", "sym:9"], "INVALID_SPEC"),
        (["theorem2", "cyclic:4", "empty", "0"], "EMPTY_SUBSET"),
        (["--format", "csv", "product", "cyclic:4", "0"], "INVALID_SPEC"),
        (["group", "table:/nonexistent/q.txt"], "INVALID_SPEC"),
    ],
)
def test_errors_exit_with_usage_code(capsys, argv, error):
    code, out, err = run(capsys, *argv)
    assert code == EXIT_USAGE
    assert out == ""
    payload = json.loads(err.strip().splitlines()[-1])
    assert payload["error"] == error
    assert payload["exit_code"] == EXIT_USAGE
    assert len(payload["error_id"]) == 8


def test_parse_error_location(capsys):
    _, _, err = run(capsys, "product", "cyclic:4", "0,1", "0,,2")
    payload = json.loads(err.strip().splitlines()[-1])
    assert payload["details"] == {"line": 1, "column": 16}


def test_argparse_usage_errors(capsys):
    assert main(["product"]) == EXIT_USAGE
    assert main(["frobnicate"]) == EXIT_USAGE
    assert main(["examples", "ex9"]) == EXIT_USAGE
