import json
import subprocess
import sys

import pytest

from f2invol.cli import EXIT_INPUT, EXIT_MATH, EXIT_OK, main
from f2invol.gf2 import BitMatrix, format_matrix, parse_matrices
from f2invol.reference import INTRO_A, TO6_DD_CODES


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_classify_intro(capsys, write):
    code, out, _ = run(capsys, "classify", write("a.txt", format_matrix(INTRO_A)))
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["DD"] == [3, 1, 3, 1] and data["family"] == "C" and data["k"] == 1
    assert data["DD_code"] == "3131"


def test_classify_identity(capsys, write):
    code, out, _ = run(capsys, "classify", write("i.txt", format_matrix(BitMatrix.identity(6))))
    assert code == EXIT_OK and json.loads(out)["DD"] == [0, 1, 1, 0]


def test_classify_with_gram(capsys, write):
    j = "01\n10\n"
    code, out, _ = run(capsys, "classify", write("s.txt", j), "--gram", write("g.txt", j))
    assert code == EXIT_OK and json.loads(out)["space"] == "symp"


def test_errors(capsys, write, tmp_path):
    code, _, err = run(capsys, "classify", write("z.txt", format_matrix(BitMatrix.zeros(6, 6))))
    assert code == EXIT_MATH and "not an isometry" in err
    assert run(capsys, "classify", write("r.txt", "101\n10\n"))[0] == EXIT_INPUT
    assert run(capsys, "classify", str(tmp_path / "missing.txt"))[0] == EXIT_INPUT
    assert run(capsys, "representatives", "--space", "evo", "--dim", "5")[0] == EXIT_INPUT
    assert run(capsys, "enumerate", "--space", "evo", "--dim", "8", "--count")[0] == EXIT_INPUT
    assert run(capsys, "verify", "nope")[0] == EXIT_INPUT
    assert run(capsys, "bogus")[0] == EXIT_INPUT


@pytest.mark.parametrize("stype,dim,count", [("evo", 6, 11), ("symp", 4, 4), ("evo", 8, 16)])
def test_representatives(capsys, stype, dim, count):
    code, out, _ = run(capsys, "representatives", "--space", stype, "--dim", str(dim))
    assert code == EXIT_OK
    assert len(parse_matrices(out)) == count


def test_representatives_json(capsys):
    code, out, _ = run(capsys, "representatives", "--space", "evo", "--dim", "6", "--format", "json")
    assert {r["DD_code"] for r in json.loads(out)} == set(TO6_DD_CODES)


def test_enumerate_counts(capsys):
    assert run(capsys, "enumerate", "--space", "evo", "--dim", "4", "--count")[1].strip() == "48"
    code, out, _ = run(capsys, "enumerate", "--space", "evo", "--dim", "6", "--count", "--involutions", "--jobs", "2")
    assert code == EXIT_OK and out.strip() == "752"
    mats = parse_matrices(run(capsys, "enumerate", "--space", "symp", "--dim", "2")[1])
    assert len(mats) == 6


def test_order(capsys):
    assert run(capsys, "order", "--space", "evo", "--dim", "6")[1].strip() == "23040"


def test_dsum(capsys, write):
    a = write("a.txt", "10\n01\n")
    b = write("b.txt", "01\n10\n")
    code, out, _ = run(capsys, "dsum", a, b)
    data = json.loads(out)
    assert code == EXIT_OK and data["predicted"] == [1, 1, 2, 1] and data["computed"] == [1, 1, 2, 1]


def test_semidirect_embed(capsys, write):
    code, out, _ = run(capsys, "semidirect", "embed", write("j.txt", "01\n10\n"), "--v", "10", "--lambda", "1", "--standard")
    (m,) = parse_matrices(out)
    assert code == EXIT_OK and (m.T @ m).is_identity()


def test_verify_suite(capsys):
    code, out, _ = run(capsys, "verify", "to8-table")
    assert code == EXIT_OK
    assert out.strip().splitlines()[-1] == "16/16 rows matched: PASS"


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "f2invol.cli", "order", "--space", "symp", "--dim", "4"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "720"
