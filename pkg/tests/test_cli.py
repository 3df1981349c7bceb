import json
import subprocess
import sys

import pytest

from omegaenv import algfile
from omegaenv.cli import main, run

from conftest import MUTATED, VALID


def call(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out), out


def test_check_weyl(capsys):
    code, rep, _ = call(capsys, "check", "weyl")
    assert code == 0 and rep["violations"] == [] and rep["ok"]
    assert len(rep["input"]["sha256"]) == 64


def test_nf_example(capsys):
    code, rep, _ = call(capsys, "nf", "weyl", "--word", "p q")
    assert code == 0
    assert rep["results"]["normal_form"] == {"q.p": "1", "": "-1"}


def test_broken_jacobi_site(capsys):
    code, rep, _ = call(capsys, "check", "broken_jacobi")
    assert code == 1
    assert [(v["kind"], v["at"]) for v in rep["violations"]] == [("jacobi", ["x", "y", "z"])]


def test_nf_untrusted(capsys):
    code, rep, _ = call(capsys, "nf", "broken_jacobi", "--word", "z y x")
    assert code == 1 and rep["violations"][0]["kind"] == "overlap"
    code, rep, _ = call(capsys, "nf", "broken_jacobi", "--word", "y x", "--force")
    assert code == 0 and rep["results"]["trusted"] is False


def test_mul(capsys):
    code, rep, _ = call(capsys, "mul", "clifford2", "--left", "e1 e2", "--right", "e1 e2")
    assert code == 0 and rep["results"]["product"] == {"": "-1"}


def test_cohomologous_exit_codes(capsys):
    code, rep, _ = call(capsys, "cohomologous", "sl2", "--w1", "w_ef")
    assert code == 0 and rep["results"]["lambda"]["h"] == "-1"
    code, rep, _ = call(capsys, "cohomologous", "weyl")
    assert code == 1 and rep["results"]["cohomologous"] is False


def test_cohomology_tables(capsys):
    code, rep, _ = call(capsys, "cohomology", "heisenberg", "--n-max", "3")
    assert code == 0
    assert rep["results"]["table"] == {"H0@e": 1, "H1@e": 2, "H2@e": 2, "H3@e": 1}
    code, rep, _ = call(capsys, "cohomology", "clifford2", "--module", "pauli", "--n-max", "2")
    assert code == 1 and rep["violations"][-1]["kind"] == "not-a-complex"
    code, rep, _ = call(capsys, "cohomology", "clifford2", "--module", "adjoint:2", "--degree", "all")
    assert code == 0 and set(rep["results"]["details"]) == {"e", "(1)"}


def test_hochschild(capsys):
    code, rep, _ = call(capsys, "hochschild", "weyl", "--truncations", "1,2,3,4")
    assert rep["results"]["table"] == {"H0@e": {"1": 1, "2": 1, "3": 1, "4": 1}}


def test_hopf_check(capsys):
    code, rep, _ = call(capsys, "hopf-check", "sl2", "--max-degree", "3")
    assert code == 0 and rep["results"]["axioms"]["ok"]
    code, rep, _ = call(capsys, "hopf-check", "weyl")
    assert code == 1
    assert rep["results"]["obstructions"] == [{"i": "q", "j": "p", "counit": "-1", "coproduct_residue": "1"}]


def test_input_errors(capsys, tmp_path):
    code, rep, _ = call(capsys, "check", str(tmp_path / "missing.json"))
    assert code == 2 and "error" in rep
    bad = tmp_path / "bad.json"
    data = json.loads(algfile.fixture_path("sl2").read_text())
    data["brackets"][1]["coeffs"] = {"f": "2 +* z"}
    bad.write_text(json.dumps(data))
    code, rep, _ = call(capsys, "check", str(bad))
    assert code == 2 and rep["error"]["pointer"] == "/brackets/1/coeffs/f"
    data["brackets"][1]["coeffs"] = {"w": "1"}
    bad.write_text(json.dumps(data))
    code, rep, _ = call(capsys, "check", str(bad))
    assert code == 2 and rep["error"]["pointer"] == "/brackets/1/coeffs/w"
    code, rep, _ = call(capsys, "nf", "weyl", "--word", "q r")
    assert code == 2
    code, rep, _ = call(capsys, "cohomologous", "weyl", "--w1", "nope")
    assert code == 2
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate", "weyl"])
    assert exc.value.code == 2


def test_verbose_goes_to_stderr(capsys):
    main(["check", "broken_cocycle", "--verbose"])
    captured = capsys.readouterr()
    json.loads(captured.out)
    assert "cocycle-identity" in captured.err


@pytest.mark.parametrize("name", VALID + MUTATED)
def test_round_trip(name):
    A = algfile.load(name)
    text = algfile.dumps(A)
    B = algfile.loads(text)
    assert algfile.dumps(B) == text
    assert B.L.names == A.L.names and B.L.degrees == A.L.degrees
    assert B.L.table == A.L.table and B.omega == A.omega
    assert [M.name for M in B.modules] == [M.name for M in A.modules]
    for M, N in zip(A.modules, B.modules):
        assert all(M.action(i) == N.action(i) for i in range(A.L.dim))


@pytest.mark.parametrize("name", VALID)
def test_deterministic(name):
    for argv in (["check", name], ["dims", name, "--max-degree", "4"], ["hopf-check", name, "--max-degree", "3"]):
        a, code_a = run(argv)
        b, code_b = run(argv)
        assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True) and code_a == code_b


def test_module_entry_point():
    cmd = [sys.executable, "-m", "omegaenv", "nf", "weyl", "--word", "p q"]
    first = subprocess.run(cmd, capture_output=True, text=True)
    second = subprocess.run(cmd, capture_output=True, text=True)
    assert first.returncode == 0
    assert first.stdout == second.stdout
    assert json.loads(first.stdout)["results"]["normal_form"] == {"": "-1", "q.p": "1"}
