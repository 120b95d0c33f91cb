import json
import subprocess
import sys

import pytest

from evensos.cli import run


def _run(argv, capsys):
    code = run(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def d4_file(tmp_path, capsys):
    path = tmp_path / "D4.json"
    assert run(["build", "--id", "D", "--m", "2", "--out", str(path)]) == 0
    capsys.readouterr()
    return path


def test_build_stdout(capsys):
    code, out, _ = _run(["build", "--id", "D", "--m", "2"], capsys)
    assert code == 0 and json.loads(out)["degree"] == 8


def test_build_range_error(capsys):
    code, _, err = _run(["build", "--id", "L", "--m", "1"], capsys)
    assert code == 1 and "m >= 2" in err


def test_unknown_flag(capsys):
    code, _, err = _run(["build", "--id", "D", "--bogus"], capsys)
    assert code == 1 and "unrecognized" in err


def test_eval(d4_file, capsys):
    code, out, _ = _run(["eval", "--in", str(d4_file), "--point", "1,0,0,0"], capsys)
    assert code == 0 and json.loads(out)["value"] == "8"


def test_refute_and_verify(d4_file, tmp_path, capsys):
    cert = tmp_path / "cert.json"
    code, _, err = _run(["refute", "--in", str(d4_file), "--builtin", "D", "--out", str(cert), "--trace"], capsys)
    assert code == 0 and "columns:" in err
    code, out, _ = _run(["verify-cert", "--form", str(d4_file), "--cert", str(cert)], capsys)
    assert code == 0 and json.loads(out)["valid"]


def test_refute_inconclusive(tmp_path, capsys):
    q4 = tmp_path / "Q4.json"
    run(["build", "--id", "Q", "--n", "4", "--out", str(q4)])
    capsys.readouterr()
    code, out, _ = _run(["refute", "--in", str(q4), "--builtin", "Q"], capsys)
    assert code == 2 and json.loads(out)["inconclusive"]


def test_verify_cert_wrong_form(d4_file, tmp_path, capsys):
    cert = tmp_path / "cert.json"
    run(["refute", "--in", str(d4_file), "--builtin", "D", "--out", str(cert)])
    d6 = tmp_path / "D6.json"
    run(["build", "--id", "D", "--m", "3", "--out", str(d6)])
    capsys.readouterr()
    code, out, _ = _run(["verify-cert", "--form", str(d6), "--cert", str(cert)], capsys)
    assert code == 1 and not json.loads(out)["valid"]


def test_malformed_json(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = _run(["eval", "--in", str(bad), "--point", "1"], capsys)
    assert code == 1 and "malformed" in err


def test_psd_variants(tmp_path, capsys):
    code, out, _ = _run(["psd", "--msextic", "1", "-4", "3", "4"], capsys)
    assert code == 0 and json.loads(out)["value"] == "-2"
    l5 = tmp_path / "L5.json"
    run(["build", "--id", "L", "--m", "2", "--out", str(l5)])
    capsys.readouterr()
    code, out, _ = _run(["psd", "--in", str(l5), "--quartic-symmetric"], capsys)
    assert json.loads(out)["status"] == "proved-psd"
    code, out, _ = _run(["psd", "--in", str(l5), "--search", "--budget", "50"], capsys)
    assert json.loads(out)["status"] == "unknown"


def test_identities(capsys):
    code, out, _ = _run(["verify-identities"], capsys)
    assert code == 0 and json.loads(out)["all_passed"]


def test_classify_and_chart(capsys):
    code, out, _ = _run(["classify", "--n", "4", "--deg", "8"], capsys)
    assert json.loads(out)["witness"]["recipe"] == "D4"
    code, out, _ = _run(["chart", "--format", "json", "--n-max", "3", "--deg-max", "6"], capsys)
    assert code == 0 and len(json.loads(out)) == 3


def test_jump_from_files(d4_file, tmp_path, capsys):
    cert = tmp_path / "cert.json"
    run(["refute", "--in", str(d4_file), "--builtin", "D", "--out", str(cert)])
    capsys.readouterr()
    code, out, _ = _run(["jump", "--in", str(d4_file), "--cert", str(cert), "--allvars"], capsys)
    payload = json.loads(out)
    assert code == 0 and payload["form"]["degree"] == 16 and payload["sos"]["kind"] == "proved-not-sos"


def test_roundtrip_byte_identical(d4_file, tmp_path, capsys):
    text = d4_file.read_text()
    code, out, _ = _run(["build", "--id", "D", "--m", "2"], capsys)
    assert out == text


def test_entry_point_subprocess(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "evensos.cli", "classify", "--n", "3", "--deg", "8"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["answer"] == "equal"
    proc = subprocess.run([sys.executable, "-m", "evensos.cli", "nope"], capture_output=True, text=True)
    assert proc.returncode == 1
