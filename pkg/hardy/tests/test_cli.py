import json

import pytest

from wco_verifier.cli import build_parser, main


def test_matrix_csv_file(tmp_path):
    out = tmp_path / "matrix.csv"
    assert main(["matrix", "--phi", "z^2", "--psi", "1", "--trunc", "3", "--csv", str(out)]) == 0
    lines = out.read_text(encoding="utf-8").splitlines()
    header = [line for line in lines if not line.startswith("#")]
    assert header[0] == "row,col,re,im"
    assert "2,1,1,0" in header
    assert "\r" not in out.read_bytes().decode("utf-8")


def test_matrix_output_is_deterministic(tmp_path):
    paths = [tmp_path / "a.csv", tmp_path / "b.csv"]
    for p in paths:
        main(["matrix", "--a0", "0.3+0.1i", "--a1", "0.35", "--b", "1.5-0.5i", "--kappa", "2", "--trunc", "12", "--csv", str(p)])
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_check_json_report(tmp_path):
    out = tmp_path / "report.json"
    assert main(["check", "--a0", "0.5i", "--a1", "0.75", "--trunc", "16", "--json", str(out)]) == 0
    data = json.loads(out.read_text(encoding="utf-8"))
    assert data["schema"] == "wco-report/1"
    assert data["classification"]["verdicts"]["normal"] is True
    assert data["symbols"]["a0"] == [0.0, 0.5]


def test_check_to_stdout(capsys):
    assert main(["check", "--phi", "z^2", "--trunc", "8"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["classification"]["verdicts"]["complex_symmetric_standard_J"] is False


def test_spectrum_ladder_column(capsys):
    assert main(["spectrum", "--a0", "0.3", "--a1", "0.4", "--trunc", "32", "--ladder"]) == 0
    out = capsys.readouterr().out
    header = [line for line in out.splitlines() if not line.startswith("#")][0]
    assert header == "index,re,im,modulus,ladder_distance"


def test_koenigs_report(capsys):
    assert main(["koenigs", "--phi", "0.5*z", "--trunc", "8"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["koenigs"]["iterations"] == 1
    assert data["obstruction"] == 0


def test_usage_error_exit_code(capsys):
    assert main(["matrix", "--a1", "1.5", "--trunc", "4"]) == 2
    assert "wco matrix:" in capsys.readouterr().err


def test_expression_error_exit_code(capsys):
    assert main(["check", "--phi", "sin(z)"]) == 2
    assert "unsupported" in capsys.readouterr().err


def test_numerical_failure_exit_code(capsys):
    assert main(["koenigs", "--a0", "0.5", "--a1", "-0.75", "--trunc", "8"]) == 1
    assert "not below 1" in capsys.readouterr().err


def test_verify_filter(tmp_path):
    out = tmp_path / "verify.json"
    assert main(["verify", "--filter", "maps.involution", "--seed", "0x7", "--json", str(out)]) == 0
    data = json.loads(out.read_text(encoding="utf-8"))
    assert data["seed"] == 7
    assert data["failed"] == 0
    assert {r["test_id"] for r in data["records"]} == {"maps.involution_example", "maps.involution_self_inverse"}


def test_verify_unknown_filter():
    assert main(["verify", "--filter", "nothing-matches"]) == 2


def test_unknown_command_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["plot"])
    assert exc.value.code == 2


def test_parser_defaults():
    args = build_parser().parse_args(["spectrum", "--a1", "0.4"])
    assert args.kappa == 1.0
    assert args.trunc is None
    assert args.ladder is False
