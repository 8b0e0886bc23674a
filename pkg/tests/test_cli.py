import io
import json
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from casoratia import cli
from casoratia import verify as V
from casoratia.exact import GaussianRational
from casoratia.families import FAMILY_NAMES, ParamPoint, sample_params
from casoratia.verify import Verdict, VerificationReport, run_check


@pytest.fixture(autouse=True)
def serial(monkeypatch):
    monkeypatch.setenv("CASORATIA_THREADS", "1")


def run_cli(argv):
    buf = io.BytesIO()
    try:
        code = cli.run(cli.config_from_args(argv), buf)
    except cli.ConfigError:
        code = 1
    return code, buf.getvalue()


def test_list_families():
    code, out = run_cli(["list-families"])
    assert code == 0
    names = [line.split("\t")[0] for line in out.decode().splitlines()]
    assert names == list(FAMILY_NAMES)


def test_show_poly():
    code, out = run_cli(["show-poly", "--family", "W", "--n", "2", "--seed", "3"])
    rec = json.loads(out)
    assert code == 0 and rec["family"] == "W" and len(rec["coeffs"]) == 3
    code, out = run_cli(["show-poly", "--family", "cqH", "--n", "2", "--pseudo"])
    assert code == 0 and json.loads(out)["pseudo"] is True


def test_verify_is_byte_identical():
    argv = ["verify", "--family", "W,cqL", "--dset", "1,2", "--N", "3", "--seed", "7", "--nmax", "3", "--vmax", "3"]
    code1, out1 = run_cli(argv)
    code2, out2 = run_cli(argv + ["--stable-order"])
    code3, out3 = run_cli(argv + ["--stable-order"])
    assert code1 == code2 == 0
    assert out2 == out3
    assert sorted(out1.splitlines()) == sorted(out2.splitlines())
    for line in out2.splitlines():
        rec = json.loads(line)
        assert rec["verdict"] == "Pass" and rec["elapsed_ms"] is None


def test_timing_flag_records_elapsed():
    _, out = run_cli(["verify", "--family", "W", "--dset", "1", "--N", "1", "--nmax", "1", "--vmax", "1", "--timing"])
    assert all(json.loads(line)["elapsed_ms"] is not None for line in out.splitlines())


def test_tsv_output_and_file(tmp_path):
    target = tmp_path / "out.tsv"
    code, out = run_cli(["verify", "--family", "cH", "--dset", "1", "--N", "auto", "--nmax", "1", "--vmax", "1",
                         "--format", "tsv", "--out", str(target)])
    assert code == 0 and out == b""
    lines = target.read_bytes().splitlines(keepends=True)
    assert lines[0] == cli.tsv_header()
    for row in lines[1:]:
        r = cli.parse_report(row, "tsv")
        assert r.verdict is Verdict.PASS and r.family == "cH"


def test_fuzz_runs():
    code, out = run_cli(["fuzz", "--family", "AW", "--draws", "2", "--max-d", "3", "--max-m", "2", "--seed", "4"])
    assert code == 0 and len(out.splitlines()) == 6


@pytest.mark.parametrize("argv", [
    ["verify", "--family", "W", "--dset", "1,3", "--N", "2"],
    ["verify", "--family", "nope"],
    ["verify", "--family", "W", "--draws", "0"],
    ["verify", "--family", "W", "--sbase", "3/2"],
    ["verify", "--dset", "1,1"],
    ["verify", "--N", "x"],
    ["frobnicate"],
    ["show-poly", "--family", "W,AW"],
])
def test_bad_config_exits_one(argv, capsys):
    try:
        code = cli.main(argv)
    except SystemExit as exc:  # argparse rejects before main returns
        code = exc.code
    assert code == 1
    assert "error" in capsys.readouterr().err


def test_degenerate_exit_code(monkeypatch):
    p0 = sample_params("cqJ", 1)
    bad = ParamPoint("cqJ", (GaussianRational.parse("3"), GaussianRational.parse("1")), p0.qbase)
    monkeypatch.setattr(V, "sample_params", lambda spec, seed, sbase=None: bad)
    code, out = run_cli(["fuzz", "--family", "cqJ", "--draws", "1", "--max-d", "3", "--max-m", "1", "--seed", "0"])
    recs = [json.loads(line) for line in out.splitlines()]
    assert any(r["verdict"] == "Degenerate" for r in recs)
    deg = next(r for r in recs if r["verdict"] == "Degenerate")
    assert "expected_degree" in deg and deg["attempts"] == V.MAX_ATTEMPTS
    assert code == 2


def test_fail_exit_code(monkeypatch):
    broken = V.mutated_family("W", "alpha")
    real = V._spec
    monkeypatch.setattr(V, "_spec", lambda s: broken if s == "W" else real(s))
    code, out = run_cli(["verify", "--family", "W", "--dset", "1", "--N", "1", "--nmax", "1", "--vmax", "1"])
    assert code == 1
    assert any(json.loads(line)["verdict"] == "Fail" for line in out.splitlines())


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "casoratia", "list-families"], capture_output=True)
    assert proc.returncode == 0 and b"AW" in proc.stdout
    proc = subprocess.run([sys.executable, "-m", "casoratia", "verify", "--N", "-3"], capture_output=True)
    assert proc.returncode == 1


_CHECK_ARGS = [
    ("main_identity", {"D": (1, 2), "N": 2}),
    ("poldual", {"D": (1,), "N": 2, "n_max": 1}),
    ("twist_relations", {"v_max": 2}),
    ("awqi", {"n_max": 2}),
]


@given(st.sampled_from(FAMILY_NAMES), st.integers(min_value=0, max_value=500), st.sampled_from(_CHECK_ARGS),
       st.sampled_from(["json", "tsv"]))
@settings(max_examples=30)
def test_round_trip(name, seed, check, fmt):
    check_id, kw = check
    if check_id == "awqi" and name not in ("AW", "cqJ"):
        name = "AW"
    r = run_check(check_id, name, seed, **kw)
    line = cli.serialize_report(r, fmt)
    back = cli.parse_report(line, fmt)
    assert back == r
    assert cli.serialize_report(back, fmt) == line


def test_round_trip_keeps_witness():
    broken = V.mutated_family("AW", "alpha")
    r = V.verify_twist_relations(broken, sample_params("AW", 3), v_max=2)
    r.elapsed_ms = 1.5
    for fmt in ("json", "tsv"):
        back = cli.parse_report(cli.serialize_report(r, fmt), fmt)
        assert isinstance(back, VerificationReport) and back == r
