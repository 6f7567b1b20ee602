"""The command-line surface: flags, exit codes, JSON schema, golden files."""

import json
import pathlib

import pytest

from cherednik import GenericParameters, jack_by_solve, PolyRep, poly_from_json
from cherednik.cli import main

GOLDEN = pathlib.Path(__file__).parent / "golden"


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_jack_text_output(capsys):
    code, out, _ = run_cli(capsys, "jack", "--group", "2,1,2", "--mu", "1,0",
                           "--check-both")
    assert code == 0
    assert "f_(1,0) = x1" in out
    assert "constructions agree" in out


def test_jack_trivial_composition(capsys):
    code, out, _ = run_cli(capsys, "jack", "--group", "2,1,2", "--mu", "0,0")
    assert code == 0
    assert "f_(0,0) = 1" in out


def test_jack_json_schema_roundtrip(capsys):
    code, out, _ = run_cli(capsys, "jack", "--group", "3,1,2", "--mu", "2,1",
                           "--json")
    assert code == 0
    data = json.loads(out)
    assert data["group"] == [3, 1, 2] and data["mode"] == "generic"
    entry = data["eigenvectors"][0]
    par = GenericParameters(3, 1)
    poly = poly_from_json({"n": 2, "terms": entry["terms"]}, par)
    rep = PolyRep(3, 1, 2, par)
    assert poly == jack_by_solve(rep, (2, 1)).poly


def test_jack_requires_mu(capsys):
    code, _, err = run_cli(capsys, "jack", "--group", "2,1,2")
    assert code == 2 and "--mu" in err


def test_jack_non_generic_point_exits_two(capsys):
    code, _, err = run_cli(capsys, "jack", "--group", "2,1,2",
                           "--mu", "2,0", "--c0", "1")
    assert code == 2
    assert "non-generic" in err


def test_verify_pass_and_exit_codes(capsys):
    code, out, _ = run_cli(capsys, "verify", "--group", "3,1,2",
                           "--max-deg", "4")
    assert code == 0 and "PASS" in out
    code, out, _ = run_cli(capsys, "verify", "--group", "2,2,2",
                           "--suite", "pbw")
    assert code == 0 and "pbw: pass" in out


def test_verify_fault_injection_prints_witness(capsys):
    code, out, _ = run_cli(capsys, "verify", "--group", "2,1,2",
                           "--max-deg", "2", "--suite", "relations",
                           "--inject-fault", "dunkl-sign")
    assert code == 1
    assert "witness" in out and "FAIL" in out
    code, out, _ = run_cli(capsys, "verify", "--group", "2,1,2",
                           "--max-deg", "2", "--suite", "intertwiners",
                           "--inject-fault", "pi-sign")
    assert code == 1


def test_gordon_main_case(capsys):
    code, out, _ = run_cli(capsys, "gordon", "--group", "2,1,2")
    assert code == 0
    assert "h = 4" in out and "k = h+1 = 5" in out
    assert "dim L(1) = 25" in out
    assert "value 6 at t=1" in out
    assert "PASS" in out


def test_gordon_rank_three(capsys):
    code, out, _ = run_cli(capsys, "gordon", "--group", "3,3,3")
    assert code == 0
    assert "h = 6" in out and "dim L(1) = 343" in out and "PASS" in out


def test_gordon_not_well_generated(capsys):
    # the quotient theorem holds for G(4,2,2); the Catalan identity is not
    # asserted there and must not fail the pipeline
    code, out, _ = run_cli(capsys, "gordon", "--group", "4,2,2")
    assert code == 0
    assert "dim L(1) = 49" in out
    assert "not asserted" in out and "PASS" in out


def test_jack_at_gordon_point(capsys):
    code, out, _ = run_cli(capsys, "jack", "--group", "2,1,2",
                           "--mu", "0,5", "--gordon-point", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["mode"] == "specialized"
    entry = data["eigenvectors"][0]
    assert entry["mu"] == [0, 5]
    # z-eigenvalues at the specialized point are plain rationals
    assert all("/" in v or v.lstrip("-").isdigit()
               for v in entry["weight"]["z"])


def test_gordon_caveat_222(capsys):
    code, out, _ = run_cli(capsys, "gordon", "--group", "2,2,2")
    assert code == 2
    assert "p = r = 2" in out


def test_gordon_r_one_unsupported(capsys):
    code, _, _ = run_cli(capsys, "gordon", "--group", "1,1,2")
    assert code == 2


def test_bad_group_rejected(capsys):
    code, _, err = run_cli(capsys, "verify", "--group", "4,3,2")
    assert code == 2 and "error" in err


def test_config_file_with_flag_override(tmp_path, capsys):
    cfg = tmp_path / "job.cfg"
    cfg.write_text("group=2,1,2\nmu=1,0\nmax_deg=2\n")
    code, out, _ = run_cli(capsys, "jack", "--config", str(cfg))
    assert code == 0 and "f_(1,0)" in out
    # flags win over the file
    code, out, _ = run_cli(capsys, "jack", "--config", str(cfg),
                           "--mu", "0,1")
    assert code == 0 and "f_(0,1)" in out and "f_(1,0)" not in out


def test_threads_flag(capsys):
    code, out, _ = run_cli(capsys, "verify", "--group", "2,1,2",
                           "--max-deg", "2", "--suite", "relations",
                           "--threads", "4")
    assert code == 0 and "PASS" in out


@pytest.mark.parametrize("name,argv", [
    ("jack_212_mu10.json",
     ["jack", "--group", "2,1,2", "--mu", "1,0", "--json"]),
    ("gordon_332.json",
     ["gordon", "--group", "3,3,2", "--json"]),
])
def test_golden_files(capsys, name, argv):
    code, out, _ = run_cli(capsys, *argv)
    assert code == 0
    expected = (GOLDEN / name).read_text()
    assert out == expected
