"""Command-line interface: outputs and the exit-code contract."""

import json
import subprocess
import sys

import pytest

from skewpbw.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    return code, json.loads(out)


@pytest.fixture
def z4_ring(tmp_path):
    p = tmp_path / "z4.json"
    p.write_text('{"family": "zmod", "n": 4}')
    return str(p)


def test_ring_inspect(capsys, z4_ring):
    code, rep = run_json(capsys, "ring", "inspect", "--spec", z4_ring)
    assert code == 0
    assert rep["N"] == ["0", "2"] and rep["U"] == ["1", "3"] and rep["Idem"] == ["0", "1"]
    assert rep["flags"]["local"] is True


def test_ring_inspect_ut2(capsys):
    code, rep = run_json(capsys, "ring", "inspect", "--fixture", "ut2")
    assert rep["flags"]["abelian"] is False and rep["flags"]["NI"] is True


def test_malformed_json(capsys, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"family": "zmod",\n "n": }')
    code, _, err = run(capsys, "ring", "inspect", "--spec", str(p))
    assert code == 3
    assert "line 2 column 7" in err


def test_ext_validate(capsys, tmp_path):
    code, rep = run_json(capsys, "ext", "validate", "--fixture", "ut2")
    assert code == 0
    assert rep["profile"]["weak_compatible"] and not rep["compatibility"]["sigma_compatible"]
    assert rep["warnings"]
    bad = tmp_path / "ext.json"
    bad.write_text(json.dumps({"ring": {"family": "zmod", "n": 4},
                               "sigmas": [{"name": "identity"}] * 2, "d": {"1,2": 2}}))
    code, _, _ = run(capsys, "ext", "validate", "--spec", str(bad))
    assert code == 3


def test_elem_nf_round_trip(capsys):
    code, rep = run_json(capsys, "elem", "nf", "--fixture", "ut2",
                         "--expr", "x1*[[1,1],[0,1]]", "--expr", "(1 + x1)^3")
    assert code == 0
    from skewpbw.fixtures import fixture
    spec = fixture("ut2")
    for e in rep["elements"]:
        assert spec.parse(e["normal_form"]) == spec.parse(e["expr"])


@pytest.mark.parametrize("fix, expr, prop, code", [
    ("zmod4", "1 + 2*x1", "unit", 0),
    ("zmod4", "x1", "unit", 1),
    ("ut2", "x1", "vnr", 2),
    ("zmod4", "1 + 2*x1", "clean", 0),
    ("s2", "x1", "idempotent", 1),
])
def test_classify_exit_codes(capsys, fix, expr, prop, code):
    got, out, _ = run(capsys, "elem", "classify", "--fixture", fix, "--expr", expr,
                      "--property", prop)
    assert got == code


def test_classify_reports_inverse(capsys):
    code, rep = run_json(capsys, "elem", "classify", "--fixture", "zmod4",
                         "--expr", "1 + 2*x1", "--property", "unit")
    assert rep["results"][0]["oracle"]["witness"] == "1 + 2*x1"


def test_parse_error_exit(capsys):
    code, rep = run_json(capsys, "elem", "nf", "--fixture", "zmod4", "--expr", "x1 + * 2")
    assert code == 3 and rep["offset"] == 5


def test_verify(capsys):
    code, rep = run_json(capsys, "verify", "units", "--fixture", "zmod4")
    assert code == 0 and rep["swept"] == 16 and rep["agreements"] == 16
    code, rep = run_json(capsys, "verify", "units", "--fixture", "zmod4", "--inject-fault")
    assert code == 1 and rep["counterexamples"]
    code, _ = run_json(capsys, "verify", "clean", "--fixture", "ut2")
    assert code == 2


def test_verify_resource_bound(capsys):
    code, _ = run_json(capsys, "verify", "units", "--fixture", "s2", "--max-degree", "2",
                       "--max-candidates", "100")
    assert code == 4


def test_spectra(capsys):
    code, out, _ = run(capsys, "spectra", "--fixture", "s2")
    assert code == 0 and "A/J(A) not Gelfand" in out
    code, rep = run_json(capsys, "spectra", "--fixture", "ut2")
    assert rep["extension"]["a_mod_j_gelfand_verdict"] == "undetermined"


def test_order_bound_env(capsys, monkeypatch, z4_ring):
    monkeypatch.setenv("SKEWPBW_MAX_ORDER", "2")
    code, _, _ = run(capsys, "ring", "inspect", "--spec", z4_ring)
    assert code == 4


def test_usage_error_is_invalid_input(capsys):
    with pytest.raises(SystemExit) as err:
        main(["bogus"])
    assert err.value.code == 3


def test_json_key_sorted(capsys):
    _, out, _ = run(capsys, "verify", "units", "--fixture", "zmod4", "--format", "json")
    assert out == json.dumps(json.loads(out), sort_keys=True, indent=2) + "\n"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "skewpbw", "elem", "nf", "--fixture", "zmod4",
                           "--expr", "(1 + 2*x1)^2"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "1"
