"""Command-line interface: output bytes, exit codes, caching, determinism."""

from __future__ import annotations

import json

import pytest

from weightcalc import __version__
from weightcalc.cli import main, run
from weightcalc.errors import DomainError


def _call(capsys, argv):
    rc = main(argv)
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


# -- text outputs ---------------------------------------------------------------


def test_powersum_text(capsys):
    rc, out, err = _call(capsys, ["powersum", "--type", "A2", "--weight", "1,1", "--k", "2"])
    assert rc == 0 and err == ""
    assert out == "12*y1^2 - 12*y1*y2 + 12*y2^2\n"


def test_elementary_text(capsys):
    rc, out, _ = _call(capsys, ["elementary", "--type", "A1", "--weight", "2", "--k", "2"])
    assert rc == 0
    assert out == "-4*y1^2\n"


def test_fk_text(capsys):
    rc, out, _ = _call(capsys, ["fk", "--type", "A1", "--k", "1"])
    assert rc == 0
    lines = out.splitlines()
    assert lines[0].startswith("F_1 = ")
    assert lines[1].startswith("F_1 / (d * d-dual) = ")


def test_orthotype_text(capsys):
    rc, out, _ = _call(capsys, ["orthotype", "--type", "C3", "--weight", "0,0,1"])
    assert (rc, out) == (0, "symplectic\n")
    rc, out, _ = _call(capsys, ["orthotype", "--group", "GL2", "--weight", "2,-2"])
    assert (rc, out) == (0, "orthogonal\n")


def test_swc_total_text(capsys):
    rc, out, _ = _call(capsys, ["swc-total", "--group", "SO5", "--weight", "1,0"])
    assert rc == 0
    lines = out.splitlines()
    assert lines[0] == "m = m_1=2, m_2=0"
    assert "w_2 = v1^2 + v2^2" in lines


def test_spinorial_text(capsys):
    rc, out, _ = _call(capsys, ["spinorial", "--group", "Spin7", "--weight", "0,0,1"])
    assert rc == 0
    lines = out.splitlines()
    assert lines[0] == "spinorial: yes"
    assert any(line.startswith("j = 2") for line in lines)


def test_info_text(capsys):
    rc, out, _ = _call(capsys, ["info", "--type", "G2"])
    assert rc == 0
    assert "root system G2: dim g = 14, 6 positive roots" in out
    assert "Weyl group order 12" in out


def test_oracle_weights_text(capsys):
    rc, out, _ = _call(capsys, ["oracle", "weights", "--type", "A2", "--weight", "1,1"])
    assert rc == 0
    lines = out.splitlines()
    assert lines[0] == "dimension 8"
    assert lines[1] == "mu = 1,1  m = 1"  # descending by (coordinate sum, weight)
    assert lines[-1] == "mu = -1,-1  m = 1"
    assert "mu = 0,0  m = 2" in lines
    assert len(lines) == 1 + 7  # seven distinct weights in the adjoint


# -- JSON envelope ------------------------------------------------------------------


def test_json_envelope_shape(capsys):
    argv = ["powersum", "--type", "A2", "--weight", "1,1", "--k", "2", "--format", "json"]
    rc, out, _ = _call(capsys, argv)
    assert rc == 0
    doc = json.loads(out)
    assert doc["schema"] == 1
    assert doc["input"] == {"kind": "A", "rank": 2, "weight": [1, 1], "k": 2}
    assert set(doc["result"]) == {"k", "weight", "p"}
    # canonical serialization: sorted keys, two-space indent, trailing newline
    assert out == json.dumps(doc, sort_keys=True, indent=2) + "\n"
    rc2, out2, _ = _call(capsys, argv)
    assert out2 == out


def test_chern_json(capsys):
    rc, out, _ = _call(
        capsys, ["chern", "--group", "GL2", "--weight", "1,0", "--k", "2", "--format", "json"]
    )
    assert rc == 0
    doc = json.loads(out)
    assert doc["input"] == {"group": "GL2", "kmax": 2, "weight": [1, 0]}
    assert doc["result"]["degree"] == 2
    assert doc["result"]["c"][2] == {"terms": [{"c": "1", "m": {"e1": 1, "e2": 1}}]}


def test_spinorial_json(capsys):
    rc, out, _ = _call(capsys, ["spinorial", "--group", "PGL2", "--weight", "4", "--format", "json"])
    assert rc == 0
    res = json.loads(out)["result"]
    assert res == {
        "spinorial": False,
        "j": 2,
        "secondary_integral": False,
        "c2": {"terms": [{"c": "-5", "m": {"eb": 2}}]},
    }


def test_swc_total_json(capsys):
    rc, out, _ = _call(capsys, ["swc-total", "--group", "SO5", "--weight", "1,0", "--format", "json"])
    assert rc == 0
    res = json.loads(out)["result"]
    assert res["m"] == [2, 0]
    assert res["agrees_with_restriction"] is True
    assert res["w"][2] == {"terms": [{"v1": 2}, {"v2": 2}]}


def test_info_json(capsys):
    rc, out, _ = _call(capsys, ["info", "--group", "PGL2", "--format", "json"])
    res = json.loads(out)["result"]
    assert res["group"] == "PGL2" and res["family"] == "PGL"
    assert res["generators"] == ["eb"] and res["torsion_generators"] == ["vb"]
    assert res["basis"] == [[2]]
    assert res["weyl_order"] == 2 and res["dim_g"] == 3
    rc, out, _ = _call(capsys, ["info", "--type", "B3", "--format", "json"])
    res = json.loads(out)["result"]
    assert res["weyl_order"] == 48 and res["positive_roots"] == 9


def test_orthotype_json(capsys):
    rc, out, _ = _call(capsys, ["orthotype", "--type", "C3", "--weight", "0,0,1", "--format", "json"])
    assert json.loads(out)["result"] == {"type": "symplectic"}


# -- verify -----------------------------------------------------------------------


def test_verify_passes(capsys):
    rc, out, _ = _call(capsys, ["verify"])
    assert rc == 0
    lines = out.splitlines()
    assert lines[-1] == "31/31 checks passed"
    assert all(line.startswith("PASS ") for line in lines[:-1])
    assert len(lines) == 32


def test_verify_deterministic_across_jobs(capsys):
    rc1, out1, _ = _call(capsys, ["verify", "--format", "json", "--jobs", "1"])
    rc2, out2, _ = _call(capsys, ["verify", "--format", "json", "--jobs", "4"])
    assert rc1 == rc2 == 0
    assert out1 == out2
    doc = json.loads(out1)
    assert doc["result"]["ok"] is True
    assert len(doc["result"]["checks"]) == 31


# -- caching --------------------------------------------------------------------------


def test_fk_cache_lifecycle(capsys, tmp_path):
    argv = ["fk", "--type", "A2", "--k", "3", "--cache-dir", str(tmp_path)]
    rc, out1, _ = _call(capsys, argv)
    assert rc == 0
    path = tmp_path / "fk_A2.json"
    assert path.exists()
    stored = json.loads(path.read_text())
    assert stored["schema"] == 1
    assert stored["fingerprint"] == f"weightcalc-{__version__}"
    assert stored["kind"] == "A" and stored["rank"] == 2
    assert stored["kmax"] >= 3

    rc, out2, _ = _call(capsys, argv)  # warm read
    assert out2 == out1

    path.write_text("this is not json {")  # corrupt: must recompute and heal
    rc, out3, _ = _call(capsys, argv)
    assert rc == 0 and out3 == out1
    assert json.loads(path.read_text())["kind"] == "A"


def test_weights_cache_lifecycle(capsys, tmp_path):
    argv = ["oracle", "weights", "--type", "A2", "--weight", "1,1", "--cache-dir", str(tmp_path)]
    rc, out1, _ = _call(capsys, argv)
    assert rc == 0
    path = tmp_path / "wm_A2.json"
    assert json.loads(path.read_text())["entries"].keys() == {"1,1"}

    rc, out2, _ = _call(capsys, argv)
    assert out2 == out1

    rc, _, _ = _call(
        capsys,
        ["oracle", "weights", "--type", "A2", "--weight", "2,0", "--cache-dir", str(tmp_path)],
    )
    assert rc == 0
    assert json.loads(path.read_text())["entries"].keys() == {"1,1", "2,0"}

    path.write_text(json.dumps({"schema": 999}))  # wrong schema: ignored, rebuilt
    rc, out3, _ = _call(capsys, argv)
    assert rc == 0 and out3 == out1


def test_cache_is_observationally_invisible(capsys, tmp_path):
    plain = ["powersum", "--type", "A2", "--weight", "2,1", "--k", "3", "--format", "json"]
    rc, cold, _ = _call(capsys, plain)
    cached = plain + ["--cache-dir", str(tmp_path)]
    rc, first, _ = _call(capsys, cached)
    rc, second, _ = _call(capsys, cached)
    assert cold == first == second


def test_cache_env_variable(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("WEIGHTCALC_CACHE", str(tmp_path))
    rc, _, _ = _call(capsys, ["fk", "--type", "A1", "--k", "2"])
    assert rc == 0
    assert (tmp_path / "fk_A1.json").exists()


# -- errors and exit codes --------------------------------------------------------------


def test_domain_errors_exit_2(capsys):
    rc, out, err = _call(capsys, ["chern", "--group", "PGL2", "--weight", "3"])
    assert rc == 2 and out == ""
    assert err == "error: weight not in character lattice\n"

    rc, _, err = _call(capsys, ["powersum", "--type", "A2", "--weight", "1,1"])
    assert rc == 2 and err == "error: this command needs --k\n"

    rc, _, err = _call(capsys, ["powersum", "--type", "H4", "--weight", "1", "--k", "2"])
    assert rc == 2 and err.startswith("error: ")

    rc, _, err = _call(capsys, ["fk", "--type", "A", "--k", "2"])
    assert rc == 2 and "missing rank" in err

    rc, _, err = _call(capsys, ["fk", "--type", "A3", "--rank", "2", "--k", "2"])
    assert rc == 2 and "contradicts" in err

    rc, _, err = _call(capsys, ["oracle", "weights", "--type", "A2", "--weight", "3,3", "--max-dim", "10"])
    assert rc == 2 and "exceeds the guard" in err

    rc, _, err = _call(capsys, ["verify", "--jobs", "0"])
    assert rc == 2 and "--jobs must be at least 1" in err

    rc, _, err = _call(capsys, ["powersum", "--type", "A2", "--weight", "1,x", "--k", "2"])
    assert rc == 2 and "comma-separated integers" in err


def test_run_propagates_domain_error():
    with pytest.raises(DomainError):
        run(["chern", "--group", "PGL2", "--weight", "3"])


def test_argparse_failures_raise_system_exit(capsys):
    with pytest.raises(SystemExit):
        main(["no-such-command"])
    with pytest.raises(SystemExit):
        main([])
    capsys.readouterr()


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
    assert capsys.readouterr().out.strip() == f"weightcalc-{__version__}"


def test_installed_entry_point():
    import subprocess

    proc = subprocess.run(
        ["weightcalc", "powersum", "--type", "A2", "--weight", "1,1", "--k", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "12*y1^2 - 12*y1*y2 + 12*y2^2\n"
