import json
import subprocess
import sys

import pytest

from weldedcalc.cli import main

Z12 = "n=2 / 1: O a + / 2: U a +"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_invariants_json(capsys):
    code, out, _ = run(capsys, "invariants", "--text", Z12, "--degree", "1")
    assert code == 0
    assert json.loads(out) == {"LINK:1,2": 1, "LINK:2,1": 0}


def test_invariants_derived_and_file(capsys, tmp_path):
    f = tmp_path / "d.gauss"
    f.write_text("n=3\n1:\n2:\n3:\n")
    code, out, _ = run(capsys, "invariants", str(f), "--derived")
    assert code == 0
    data = json.loads(out)
    assert "MU123F" in data and not any(data.values())


def test_word_and_wtree_inputs(capsys):
    code, out, _ = run(capsys, "normal-form", "--format", "word", "--text", "C[2,1]^1", "--degree", "2")
    assert code == 0 and out.strip() == "A[1,2]^-1"
    code, out, _ = run(capsys, "normal-form", "--format", "wtree",
                       "--text", "strands 2 ; [2@1/2 (1@1/3)]", "--degree", "1")
    assert code == 0 and out.strip() == "Z[1,2]^1"


def test_normal_form_verify_json(capsys):
    code, out, _ = run(capsys, "normal-form", "--format", "word", "--text", "F[1]^1 A[1,2]^2",
                       "--degree", "3", "--verify", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["match"] and data["conjecture_dependent"]


def test_closure(capsys):
    code, out, _ = run(capsys, "closure", "--format", "word", "--text", "Z[1,2]^1 Z[2,1]^1",
                       "--list", "1,2", "--json")
    assert code == 0
    assert json.loads(out)["alpha"]["2"] == 1
    code, _, err = run(capsys, "closure", "--text", Z12, "--list", "1,3")
    assert code == 1 and "does not fit" in err


def test_ft_check_exit_codes(capsys):
    code, out, _ = run(capsys, "ft-check", "--text", Z12, "--invariant", "LINK:1,2", "--degree", "0")
    assert code == 3 and json.loads(out)["max_violation"] == 1
    code, _, _ = run(capsys, "ft-check", "--format", "word", "--text", "A[1,2]^1",
                     "--invariant", "LINK:1,2", "--degree", "1")
    assert code == 0
    code, _, _ = run(capsys, "ft-check", "--text", Z12, "--invariant", "NOPE", "--degree", "1")
    assert code == 1


def test_relations_and_conjecture(capsys):
    code, out, _ = run(capsys, "relations")
    assert code == 0 and out.strip().endswith("35/35 relations hold")
    code, out, _ = run(capsys, "conjecture")
    assert code == 0 and "coincide" in json.loads(out)


def test_tables_against_custom_fixtures(capsys, tmp_path):
    toy = {"tables": [{"name": "toy", "n": 2, "rows": ["LINK:1,2"], "cols": ["Z[1,2]^1"],
                       "values": [[1]]}]}
    (tmp_path / "t.json").write_text(json.dumps(toy))
    code, out, _ = run(capsys, "tables", "--fixtures", str(tmp_path))
    assert code == 0 and "0 mismatching cells" in out
    code, _, _ = run(capsys, "tables", "--fixtures", str(tmp_path / "missing"))
    assert code == 1


@pytest.mark.parametrize("argv,code", [
    (["invariants", "--text", "garbage"], 2),
    (["invariants", "--format", "word", "--text", "Q[1]^1"], 2),
    (["invariants", "--format", "wtree", "--text", "strands 1 ; [2@1/2 (1@1/3)]"], 2),
    (["invariants"], 1),
    (["invariants", "nofile.txt"], 1),
    (["invariants", "--text", Z12, "--degree", "3"], 0),
    (["invariants", "--text", "n=3 / 1: / 2: / 3:", "--degree", "3"], 1),
    (["bogus"], 1),
])
def test_exit_codes(capsys, argv, code):
    if code == 1 and argv[0] == "bogus":
        with pytest.raises(SystemExit) as exc:
            main(argv)
        assert exc.value.code == 1
        return
    assert run(capsys, *argv)[0] == code


def test_out_option(capsys, tmp_path):
    target = tmp_path / "o.json"
    code, out, _ = run(capsys, "--out", str(target), "invariants", "--text", Z12, "--degree", "1")
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["LINK:1,2"] == 1


def test_stdin_and_console_script():
    proc = subprocess.run([sys.executable, "-m", "weldedcalc.cli", "invariants", "-", "--degree", "1"],
                          input=Z12.replace(" / ", "\n"), capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["LINK:1,2"] == 1
