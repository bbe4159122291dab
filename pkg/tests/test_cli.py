import json

import numpy as np

from tetrainner.cli import main

SQ2 = np.sqrt(2.0)

WORKED_SPEC = {
    "alpha1": [],
    "alpha2": [[0.5, 0.0]],
    "sigma": [[0.0, 0.0]],
    "t_plus": 1.75,
    "t": [SQ2, 0.0],
    "omega": [1.0, 0.0],
}

ROYAL_VARIETY_FUNCTION = {
    "n": 1,
    "E1": [[1.0, 0.0]],
    "E2": [[0.0, 0.0], [1.0, 0.0]],
    "D": [[1.0, 0.0]],
}


def _write(tmp_path, name, payload):
    path = tmp_path / name
    path.write_text(json.dumps(payload), encoding="utf-8")
    return str(path)


def _run(capsys, argv):
    code = main(argv)
    return code, capsys.readouterr().out


def test_classify_interior_point(tmp_path, capsys):
    path = _write(tmp_path, "pt.json", {"x1": [0, 0], "x2": [0, 0], "x3": [0, 0]})
    code, out = _run(capsys, ["classify", path])
    assert code == 0
    assert json.loads(out)["region"] == "Interior"


def test_classify_distinguished_point(tmp_path, capsys):
    path = _write(tmp_path, "pt.json", {"x1": [0, 1], "x2": [1, 0], "x3": [0, 1]})
    code, out = _run(capsys, ["classify", path])
    assert code == 0
    assert json.loads(out)["region"] == "DistinguishedBoundary"


def test_classify_gamma_point(tmp_path, capsys):
    path = _write(tmp_path, "pt.json", {"s": [2, 0], "p": [1, 0]})
    code, out = _run(capsys, ["classify", path])
    assert code == 0
    assert json.loads(out)["region"] == "GammaDistinguished"


def test_classify_malformed_json_exits_2(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{not json", encoding="utf-8")
    code, _ = _run(capsys, ["classify", str(path)])
    assert code == 2


def test_construct_worked_example(tmp_path, capsys):
    path = _write(tmp_path, "spec.json", WORKED_SPEC)
    code, out = _run(capsys, ["construct", path])
    assert code == 0
    payload = json.loads(out)
    d = payload["function"]["D"]
    assert abs(d[0][0] - 2.0) < 1e-8 and abs(d[1][0] + 0.5) < 1e-8
    assert payload["analysis"]["degree"] == 1
    assert payload["analysis"]["type"] == [1, 0]


def test_construct_degenerate_constant(tmp_path, capsys):
    path = _write(tmp_path, "spec.json",
                  {"alpha1": [], "alpha2": [], "sigma": [], "t_plus": 1.0, "t": [1, 0]})
    code, out = _run(capsys, ["construct", path])
    assert code == 0
    payload = json.loads(out)
    assert payload["analysis"]["degree"] == 0
    assert payload["analysis"]["type"] == [0, 0]
    assert payload["analysis"]["royal_nodes"] == []


def test_construct_collision_exits_3(tmp_path, capsys):
    path = _write(tmp_path, "spec.json",
                  {"alpha1": [[1.0, 0.0]], "alpha2": [], "sigma": [[1.0, 0.0]],
                   "t_plus": 1.0, "t": [1, 0]})
    code, _ = _run(capsys, ["construct", path])
    assert code == 3


def test_verify_worked_function(tmp_path, capsys):
    spec_path = _write(tmp_path, "spec.json", WORKED_SPEC)
    code, out = _run(capsys, ["construct", spec_path])
    func = json.loads(out)["function"]
    func_path = _write(tmp_path, "func.json", func)
    code, out = _run(capsys, ["verify", func_path])
    assert code == 0
    report = json.loads(out)
    assert report["valid"]
    assert len(report["conditions"]) == 7
    assert all(c["passed"] for c in report["conditions"])
    assert report["invariants"]["winding_number"] == 1


def test_verify_invalid_function_reports(tmp_path, capsys):
    path = _write(tmp_path, "bad.json",
                  {"n": 1, "E1": [[3.0, 0.0]], "E2": [[0.0, 0.0], [1.0, 0.0]],
                   "D": [[1.0, 0.0]]})
    code, out = _run(capsys, ["verify", path])
    assert code == 0
    report = json.loads(out)
    assert not report["valid"]


def test_analyze_royal_variety(tmp_path, capsys):
    path = _write(tmp_path, "func.json", ROYAL_VARIETY_FUNCTION)
    code, out = _run(capsys, ["analyze", path])
    assert code == 0
    assert json.loads(out)["type"] == "royal-variety"


def test_trace_row_count_and_defect(tmp_path, capsys):
    path = _write(tmp_path, "func.json", ROYAL_VARIETY_FUNCTION)
    code, out = _run(capsys, ["trace", path, "--samples", "256"])
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "theta,x1_re,x1_im,x2_re,x2_im,x3_re,x3_im,defect"
    assert len(lines) == 257
    assert max(float(row.split(",")[-1]) for row in lines[1:]) < 1e-10


def test_perturb_scaling_route(tmp_path, capsys):
    spec_path = _write(tmp_path, "spec.json", WORKED_SPEC)
    _, out = _run(capsys, ["construct", spec_path])
    func_path = _write(tmp_path, "func.json", json.loads(out)["function"])
    code, out = _run(capsys, ["perturb", func_path])
    assert code == 0
    payload = json.loads(out)
    assert payload["method"] == "EpsilonScaling"
    assert payload["t"] > 0
    assert payload["midpoint_max_coeff_error"] < 1e-12


def test_reads_stdin_when_no_file(capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(
        {"x1": [0, 0], "x2": [0, 0], "x3": [0, 0]})))
    code, out = _run(capsys, ["classify"])
    assert code == 0
    assert json.loads(out)["region"] == "Interior"


def test_output_file_flag(tmp_path, capsys):
    in_path = _write(tmp_path, "pt.json", {"x1": [0, 0], "x2": [0, 0], "x3": [0, 0]})
    out_path = tmp_path / "result.json"
    code, out = _run(capsys, ["classify", in_path, "--out", str(out_path)])
    assert code == 0 and out == ""
    assert json.loads(out_path.read_text())["region"] == "Interior"


def test_deterministic_output(tmp_path, capsys):
    path = _write(tmp_path, "spec.json", WORKED_SPEC)
    _, first = _run(capsys, ["construct", path, "--seed", "7"])
    _, second = _run(capsys, ["construct", path, "--seed", "7"])
    assert first == second


def test_unknown_command_exits_2(capsys):
    assert main(["frobnicate"]) == 2


def test_classify_csv_format(tmp_path, capsys):
    path = _write(tmp_path, "pt.json", {"x1": [0, 0], "x2": [0, 0], "x3": [0, 0]})
    code, out = _run(capsys, ["classify", path, "--format", "csv"])
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "region,defect"
    assert lines[1].startswith("Interior,")


def test_trace_json_format(tmp_path, capsys):
    path = _write(tmp_path, "func.json", ROYAL_VARIETY_FUNCTION)
    code, out = _run(capsys, ["trace", path, "--samples", "16", "--format", "json"])
    assert code == 0
    rows = json.loads(out)
    assert len(rows) == 16
    assert rows[0]["theta"] == 0.0


def test_csv_rejected_for_nested_commands(tmp_path, capsys):
    path = _write(tmp_path, "func.json", ROYAL_VARIETY_FUNCTION)
    code, _ = _run(capsys, ["analyze", path, "--format", "csv"])
    assert code == 2


def test_trace_pole_exits_4(tmp_path, capsys):
    # lenient function with a circle zero of D; the trace hits the pole
    func = {"n": 1, "E1": [], "E2": [], "D": [[-1.0, 0.0], [1.0, 0.0]]}
    path = _write(tmp_path, "func.json", func)
    code, _ = _run(capsys, ["trace", path, "--lenient", "--samples", "256"])
    assert code == 4
