import json
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from circodes.cli import main

B1_INLINE = "0,1,2,8,10,12,16,18,22,24,26,32,33,34"


@pytest.fixture(scope="module")
def schema():
    text = resources.files("circodes.schemas").joinpath("report.schema.json").read_text()
    return json.loads(text)


def validate(path, schema):
    payload = json.loads(path.read_text())
    jsonschema.validate(payload, schema)
    return payload


def test_verify_pass(tmp_path, schema, capsys):
    out = tmp_path / "report.json"
    code = main(["verify", "--n", "40", "--gens", "1,4", "--kind", "id",
                 "--inline", B1_INLINE, "--out", str(out)])
    assert code == 0
    assert "PASS" in capsys.readouterr().out
    payload = validate(out, schema)
    assert payload["report"]["pass"] is True


def test_verify_fail_with_witness(tmp_path, schema, capsys):
    out = tmp_path / "report.json"
    code = main(["verify", "--n", "40", "--gens", "1,4", "--kind", "sid",
                 "--inline", "0", "--out", str(out)])
    assert code == 1
    stdout = capsys.readouterr().out
    assert "FAIL" in stdout and "vertex 2" in stdout
    payload = validate(out, schema)
    assert payload["report"]["witness"] == {"type": "uncovered", "vertex": 2}


def test_exact_prints_value(capsys):
    assert main(["exact", "--n", "17", "--gens", "1,3"]) == 0
    assert capsys.readouterr().out.strip() == "11"


def test_exact_unknown_is_applicability_error(capsys):
    assert main(["exact", "--n", "20", "--gens", "1,7"]) == 2


def test_usage_errors_exit_2(capsys, tmp_path):
    assert main(["verify", "--n", "40", "--gens", "1,4", "--kind", "id"]) == 2
    assert main(["verify", "--n", "40", "--gens", "1,4", "--kind", "id",
                 "--inline", "0", "--code", "x.json"]) == 2
    assert main(["verify", "--n", "40", "--gens", "x", "--kind", "id",
                 "--inline", "0"]) == 2
    assert main(["construct", "--family", "ld_tri_mod57", "--n", "57", "--d", "9"]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["verify", "--n", "40", "--gens", "1,4", "--kind", "id",
                 "--code", str(bad)]) == 2


def test_argparse_usage_exit_code():
    with pytest.raises(SystemExit) as err:
        main(["verify", "--n", "40"])  # missing required flags
    assert err.value.code == 2


@pytest.mark.parametrize(
    "family,flags,kind",
    [
        ("id_square_mod40", ["--n", "40", "--d", "4"], "id"),
        ("ld_tri_mod57", ["--n", "57", "--d", "8"], "ld"),
        ("sid_c13_optimal", ["--n", "14"], "sid"),
        ("sid_antipodal", ["--k", "15"], "sid"),
        ("id_king_appendix", ["--d", "15"], "id"),
    ],
)
def test_construct_verify_roundtrip(tmp_path, schema, family, flags, kind):
    out = tmp_path / "code.json"
    assert main(["construct", "--family", family, *flags, "--out", str(out)]) == 0
    payload = validate(out, schema)
    assert main([
        "verify", "--n", str(payload["n"]),
        "--gens", ",".join(map(str, payload["gens"])),
        "--kind", kind, "--code", str(out),
    ]) == 0


def test_verify_accepts_residue_form(tmp_path):
    payload = {"n": 80, "gens": [1, 44], "period": 40,
               "residues": [0, 1, 2, 8, 10, 12, 16, 18, 22, 24, 26, 32, 33, 34]}
    path = tmp_path / "residue.json"
    path.write_text(json.dumps(payload))
    assert main(["verify", "--n", "80", "--gens", "1,44", "--kind", "id",
                 "--code", str(path)]) == 0


def test_verify_rejects_inconsistent_file(tmp_path):
    path = tmp_path / "code.json"
    path.write_text(json.dumps({"n": 40, "gens": [1, 5], "code": [0, 1]}))
    assert main(["verify", "--n", "40", "--gens", "1,4", "--kind", "dom",
                 "--code", str(path)]) == 2
    assert main(["verify", "--n", "41", "--gens", "1,5", "--kind", "dom",
                 "--code", str(path)]) == 2


def test_shape_shorthand(capsys):
    assert main(["bound", "--n", "40", "--shape", "square", "--d", "4",
                 "--kind", "id"]) == 0
    assert "14" in capsys.readouterr().out
    assert main(["bound", "--n", "40", "--shape", "king", "--d", "8",
                 "--kind", "ld"]) == 0
    assert main(["bound", "--n", "40", "--shape", "square", "--gens", "1,4",
                 "--d", "4", "--kind", "id"]) == 2


def test_bound_report(tmp_path, schema, capsys):
    out = tmp_path / "bound.json"
    assert main(["bound", "--n", "12", "--gens", "1,3,4", "--kind", "id",
                 "--out", str(out)]) == 0
    payload = validate(out, schema)
    assert payload["report"]["value"] == 4
    assert payload["report"]["provenance"] == "strict-nonattainment"


def test_solve_optimal_and_budget(tmp_path, schema):
    out = tmp_path / "solve.json"
    assert main(["solve", "--n", "17", "--gens", "1,4", "--kind", "sid",
                 "--deterministic", "--out", str(out)]) == 0
    payload = validate(out, schema)
    assert payload["report"]["size"] == 10
    assert main(["solve", "--n", "17", "--gens", "1,3", "--kind", "sid",
                 "--max-size", "9", "--out", str(out)]) == 3
    payload = validate(out, schema)
    assert payload["report"]["status"] == "budget_exceeded"
    assert main(["solve", "--n", "4", "--gens", "1,2", "--kind", "id",
                 "--out", str(out)]) == 1
    assert validate(out, schema)["report"]["status"] == "infeasible"


def test_lift_full_flow(tmp_path, schema, capsys):
    code_file = tmp_path / "b1.json"
    assert main(["construct", "--family", "id_square_mod40", "--n", "40",
                 "--d", "4", "--out", str(code_file)]) == 0
    out = tmp_path / "lift.json"
    domain = tmp_path / "domain.csv"
    assert main(["lift", "--n", "40", "--d", "4", "--grid", "square",
                 "--code", str(code_file), "--verify", "id",
                 "--dump-domain", str(domain), "--out", str(out)]) == 0
    payload = validate(out, schema)
    assert payload["density"] == [7, 20]
    assert payload["report"]["pass"] is True
    assert domain.read_text().splitlines()[0] == "x,y,codeword"
    # failing grid verification exits 1
    assert main(["lift", "--n", "12", "--d", "3", "--grid", "square",
                 "--inline", "1,3,4,5,7,8", "--verify", "id"]) == 1


def test_lift_shape_mismatch_is_usage_error():
    assert main(["lift", "--n", "12", "--d", "7", "--grid", "square",
                 "--inline", "0"]) == 2


def test_module_entrypoint_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "circodes", "exact", "--n", "17", "--gens", "1,3"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "11"


def test_sweep_requires_known_suite(tmp_path):
    assert main(["sweep", "--suite", "nope", "--out", str(tmp_path / "x.json")]) == 2


def test_sweep_full_suite_via_cli(tmp_path, schema, capsys):
    out = tmp_path / "sweep.json"
    assert main(["sweep", "--suite", "paper-acceptance", "--out", str(out),
                 "--jobs", "2"]) == 0
    stdout = capsys.readouterr().out
    assert "criterion 8" in stdout and "FAIL" not in stdout
    payload = validate(out, schema)
    assert payload["pass"] is True
    assert len(payload["criteria"]) == 8
