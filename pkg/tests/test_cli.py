"""Command-line interface: output formats, exit codes, report files."""

import csv
import json

from conicert.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_decide_json_and_exit_codes(capsys):
    code, out, _ = run(capsys, "decide", "--a", "2", "--b", "7", "--c", "1", "--d", "1")
    assert code == 0
    payload = json.loads(out)
    assert payload["verdict"] == "rational"
    code, out, _ = run(capsys, "decide", "--a", "2", "--b", "3", "--c", "1", "--d", "1")
    assert code == 1
    assert json.loads(out)["verdict"] == "not_rational"


def test_decide_text_format(capsys):
    code, out, _ = run(
        capsys, "--format", "text", "decide", "--a", "2", "--b", "3", "--c", "1", "--d", "1"
    )
    assert code == 1
    assert "verdict: not_rational" in out
    assert "failed condition: norm-form-b" in out


def test_decide_accepts_fraction_arguments(capsys):
    code, out, _ = run(
        capsys, "decide", "--a", "1/2", "--b", "7/9", "--c", "0", "--d", "1"
    )
    assert code in (0, 1)
    assert json.loads(out)["spec"]["a"] == "1/2"


def test_invalid_spec_exits_2(capsys):
    code, _, err = run(capsys, "decide", "--a", "4", "--b", "1", "--c", "1", "--d", "1")
    assert code == 2
    assert err.startswith("error:")


def test_certify_attaches_parametrization(capsys):
    code, out, _ = run(capsys, "certify", "--a", "2", "--b", "7", "--c", "1", "--d", "6")
    assert code == 0
    payload = json.loads(out)
    maps = payload["certificate"]["parametrization"]["maps"]
    assert set(maps) == {"t1", "t2", "t3", "t4"}


def test_hilbert_over_q(capsys):
    code, out, _ = run(capsys, "hilbert", "--a", "2", "--b", "3")
    assert code == 0
    payload = json.loads(out)
    assert payload["symbol"] == "nonzero"
    assert payload["ramified_places"] == ["2", "3"]


def test_hilbert_with_base_change(capsys):
    code, out, _ = run(capsys, "hilbert", "--a", "3", "--b", "5", "--ext", "7")
    assert code == 0
    payload = json.loads(out)
    assert payload["value"] == "nonzero"
    assert payload["witness_place"] == "3"
    assert payload["field"] == "Q(sqrt(7))"


def test_hilbert_rejects_zero(capsys):
    code, _, err = run(capsys, "hilbert", "--a", "0", "--b", "3")
    assert code == 2
    assert "nonzero" in err


def test_scan_custom_json(capsys):
    code, out, _ = run(
        capsys, "scan", "--a", "2", "--b", "1", "--c", "1:5", "--d", "c"
    )
    assert code == 0
    payload = json.loads(out)
    assert len(payload["entries"]) == 5
    assert set(payload) >= {"rational", "not_rational", "entries", "family"}


def test_scan_comma_list_and_text(capsys):
    code, out, _ = run(
        capsys, "--format", "text", "scan", "--a", "2", "--b", "1", "--c", "1,13", "--d", "c"
    )
    assert code == 0
    lines = out.splitlines()
    assert any(line.startswith("1\t") for line in lines)
    assert any(line.startswith("13\tnot_rational") for line in lines)


def test_scan_report_writes_csv_and_figure(capsys, tmp_path):
    out_dir = tmp_path / "report"
    code, out, _ = run(
        capsys,
        "scan", "--a", "2", "--b", "1", "--c", "1:8", "--d", "c",
        "--report", str(out_dir),
    )
    assert code == 0
    payload = json.loads(out)
    csv_path = out_dir / "scan-custom.csv"
    png_path = out_dir / "scan-custom.png"
    assert payload["report"] == {"csv": str(csv_path), "figure": str(png_path)}
    with csv_path.open() as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["c", "status", "detail"]
    assert len(rows) == 9
    assert png_path.stat().st_size > 0
    assert png_path.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_verify_passes_and_exit_zero(capsys):
    code, out, _ = run(capsys, "verify", "--a", "2", "--b", "7", "--c", "1", "--d", "5")
    assert code == 0
    payload = json.loads(out)
    assert payload["all_passed"] is True


def test_verify_with_explicit_solution(capsys):
    code, out, _ = run(
        capsys,
        "verify", "--a", "2", "--b", "7", "--c", "1", "--d", "5",
        "--alpha", "3", "--beta", "1",
    )
    assert code == 0
    payload = json.loads(out)
    checks = {c["check"] for c in payload["checks"]}
    assert "collapsed fiber relation" in checks
    assert all(c["status"] == "pass" for c in payload["checks"])


def test_verify_square_b_includes_chain(capsys):
    code, out, _ = run(capsys, "verify", "--a", "2", "--b", "9", "--c", "1", "--d", "5")
    assert code == 0
    checks = {c["check"] for c in json.loads(out)["checks"]}
    assert "round trip recovers x" in checks


def test_verify_guards_bad_solution(capsys):
    code, _, err = run(
        capsys,
        "verify", "--a", "2", "--b", "7", "--c", "1", "--d", "5",
        "--alpha", "1", "--beta", "1",
    )
    assert code == 2
    assert "error:" in err
