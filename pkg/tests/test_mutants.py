import pytest

from hyperideal import conformance as cf
from hyperideal import mutants


@pytest.mark.parametrize("name", sorted(mutants.MUTANTS))
def test_mutant_is_killed(name):
    m = mutants.MUTANTS[name]
    assert mutants.failing_checks(name) == set(m.targets)
    assert mutants.active() == ""


def test_every_check_kills_some_mutant():
    covered = set().union(*(m.targets for m in mutants.MUTANTS.values()))
    assert covered == set(cf.CATALOG)


def test_activation_rules():
    with pytest.raises(ValueError):
        mutants.activate("no-such-mutant")
    with mutants.applied("weak-always"):
        mutants.activate("weak-always")
        with pytest.raises(RuntimeError):
            mutants.activate("radical-is-ideal")
    assert mutants.active() == ""
