import pytest

from hyperideal import cli, mutants
from hyperideal.cli import main
from importlib.resources import files

PAPER = str(files("hyperideal") / "data" / "paper_examples.hyp")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_validate(capsys):
    code, out, _ = run(capsys, "validate", PAPER)
    assert code == 0
    assert out.splitlines()[0] == ("ring=madar n=4 identities={1,3} strongly_distributive=false "
                                   "hyperfield=false hyperdomain=false")
    assert out.splitlines()[-1] == "status=ok"


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", PAPER, "weak_zero", "weak_S")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "ring=weak ideal={0} mcs={1,5}"
    assert "class=quasi holds=false witness=- counterexample=(2,3)" in lines
    assert "class=weakly_quasi holds=true witness=1 counterexample=-" in lines


def test_radical_and_ideals(capsys):
    code, out, _ = run(capsys, "radical", PAPER, "weak_A2")
    assert code == 0 and "modes_agree=true" in out
    code, out, _ = run(capsys, "ideals", PAPER, "haji")
    assert out.splitlines()[-1] == "jacobson={0} local=true count=2"


def test_machine_format(capsys):
    _, out, _ = run(capsys, "ideals", PAPER, "haji", "--machine")
    lines = out.splitlines()
    assert "ideal.{0}.prime=true" in lines
    assert lines[-3:] == ["jacobson={0}", "local=true", "count=2"]
    assert all("=" in l and " " not in l for l in lines)


def test_machine_lines_grammar():
    got = cli.machine_lines(["ring=r n=2", "skip check=T1 hypothesis=h count=3", "a=1 b=2", "status=ok"])
    assert got == ["ring.r.n=2", "skip.check.T1.hypothesis.h.count=3", "a=1", "b=2", "status=ok"]


@pytest.mark.parametrize("argv, code, needle", [
    ([], 1, "E_USAGE"),
    (["bogus"], 1, "E_USAGE"),
    (["validate"], 1, "E_USAGE"),
    (["classify", PAPER, "madar_A", "weak_S"], 2, "E_REF"),
    (["classify", PAPER, "nope", "weak_S"], 2, "E_REF"),
    (["validate", "/nonexistent.hyp"], 1, "E_USAGE"),
])
def test_exit_codes(capsys, argv, code, needle):
    with pytest.raises(SystemExit) as exc:
        raise SystemExit(main(argv))
    assert exc.value.code == code
    assert needle in capsys.readouterr().err


def test_invalid_table_is_exit_2(tmp_path, capsys):
    p = tmp_path / "bad.hyp"
    p.write_text("ring r {\n kind = tables\n add = [[0,1],[1,1]]\n hyp = [[{0},{0}],[{0},{1}]]\n}\n")
    code, _, err = run(capsys, "validate", str(p))
    assert code == 2 and "E_VALIDATION" in err


def test_mutant_gives_exit_3(capsys):
    code, out, _ = run(capsys, "conformance", "--mutant", "quasi-ignores-t-left",
                       "--check", "T11", "--max-product", "12")
    assert code == 3
    assert "fail check=T11" in out
    assert mutants.active() == ""


def test_conformance_file(tmp_path, capsys):
    code, out, _ = run(capsys, "conformance", "--file", PAPER, "--check", "T11")
    assert code == 0
    assert out.splitlines()[-1].startswith("total pass=")


def test_seeded_run_is_reproducible(capsys):
    argv = ["conformance", "--seed", "3", "--count", "12"]
    a = run(capsys, *argv)
    b = run(capsys, *argv)
    c = run(capsys, *argv, "--workers", "2")
    assert a == b and a[1] == c[1] and a[0] == 0


def test_budget_warning(capsys):
    code, out, err = run(capsys, "conformance", "--seed", "1", "--count", "4", "--budget", "0")
    assert code == 0
    assert "budget_exhausted=true" in out and err


def test_paper_examples(capsys):
    code, out, _ = run(capsys, "paper-examples")
    lines = out.splitlines()
    assert code == 0 and lines[-1] == "mismatches=0"
    assert sum(l.startswith("OUT-OF-SCOPE") for l in lines) == 2
    assert all("match=yes" in l for l in lines if l.startswith("example="))
