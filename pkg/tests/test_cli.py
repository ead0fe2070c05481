"""CLI round-trips, determinism and exit codes."""

from __future__ import annotations

import json

import pytest

from superbrauer.cli import EXIT_BUDGET, EXIT_PARSE, EXIT_VERIFY, main


@pytest.fixture()
def zz_file(tmp_path):
    spec = {"kind": "permutations", "generators": [[1, 0, 2, 3], [0, 1, 3, 2]], "u": "g0"}
    path = tmp_path / "zz.json"
    path.write_text(json.dumps(spec))
    return str(path)


def _run(args, capsys):
    code = main(args)
    out = capsys.readouterr().out
    return code, out


def test_h2_on_group_file(zz_file, capsys):
    code, out = _run(["h2", "--group", zz_file, "--format", "json"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["result"]["invariants"] == [2]  # H^2(Z2 x Z2, C*)


def test_h2_real_descriptor(zz_file, capsys):
    code, out = _run(["h2", "--group", zz_file, "--field", "real", "--format", "json"], capsys)
    assert code == 0
    assert json.loads(out)["result"]["invariants"] == [2, 2, 2]


def test_bm_b3_report(capsys):
    code, out = _run(["bm", "--type", "B3", "--field", "closed", "--format", "json"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["result"]["invariants"] == [2, 2, 2]
    assert doc["result"]["linear_dim"] == 1
    assert doc["result"]["split"] is True


def test_verify_e2_triangular_identity(capsys):
    code, out = _run(["verify", "--algebra", "E2", "--check", "triangular", "--A", "identity"], capsys)
    assert code == 0
    assert "passed: True" in out


def test_verify_failure_exit_code(capsys):
    code, out = _run(
        ["verify", "--type", "B2", "--check", "lambda-cocycle", "--sigma", "identity"],
        capsys,
    )
    # Sigma = I is not invariant for B2 in the root basis: rejected as a parse error
    assert code == EXIT_PARSE
    code, out = _run(
        ["verify", "--type", "B2", "--check", "lambda-cocycle", "--sigma", "identity", "--skip-invariance"],
        capsys,
    )
    assert code == EXIT_VERIFY


def test_parse_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _ = _run(["h2", "--group", str(bad)], capsys)
    assert code == EXIT_PARSE


def test_budget_exit_code(capsys):
    code, _ = _run(["h2", "--type", "B3", "--budget-h2", "10"], capsys)
    assert code == EXIT_BUDGET
    code, _ = _run(["weyl-table", "--types", "E8", "--budget-cap", "100"], capsys)
    assert code == 0  # E8 row falls back to literature mode, no build attempted


def test_machine_output_deterministic(zz_file, capsys):
    args = ["h2sharp", "--group", zz_file, "--field", "real", "--format", "json"]
    _, out1 = _run(args, capsys)
    _, out2 = _run(args, capsys)
    assert out1 == out2
    doc = json.loads(out1)
    assert doc["result"]["invariants"] == [4, 2]
    assert doc["budgets"] and "seed" in doc


def test_weyl_table_output(capsys):
    code, out = _run(["weyl-table", "--types", "A1,B2,E8", "--format", "json"], capsys)
    assert code == 0
    rows = json.loads(out)["result"]["rows"]
    assert rows[0]["type"] == "A1" and rows[0]["mode"] == "computed"
    assert rows[2]["type"] == "E8" and rows[2]["mode"] == "literature"
    assert rows[2]["BM"]["invariants"] == [2]


def test_lazy_and_invforms_via_type(capsys):
    code, out = _run(["lazy", "--type", "B2", "--format", "json"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["result"]["linear_dim"] == 1
    assert doc["result"]["group_part_invariants"] == [2]
    code, out = _run(["invforms", "--type", "B2", "--format", "json"], capsys)
    assert code == 0
    assert json.loads(out)["result"]["dim"] == 1


def test_group_report_roundtrip(zz_file, capsys):
    """Serialized groups and cocycles re-parse to equal values."""
    from superbrauer import cochain_from_sparse, h2_real_closed, load_group_file, parse_group_spec, serialize_group

    g, u = load_group_file(zz_file)
    doc = serialize_group(g)
    doc2 = json.loads(json.dumps(doc, sort_keys=True))
    g2, _ = parse_group_spec(doc2)
    assert serialize_group(g2) == doc
    H = h2_real_closed(g)
    for rep in H.reps:
        sp = json.loads(json.dumps(rep.to_sparse(), sort_keys=True))
        assert cochain_from_sparse(g, sp).equals(rep)


def test_out_file(tmp_path, zz_file, capsys):
    out = tmp_path / "report.json"
    code, _ = _run(["h2", "--group", zz_file, "--format", "json", "--out", str(out)], capsys)
    assert code == 0
    assert json.loads(out.read_text())["schema"] == "superbrauer-report/1"
