import pytest
from hypothesis import given, settings, strategies as hs

import oracles
from hyperideal import core
from hyperideal import ideals as idl
from hyperideal import structures as st
from hyperideal.core import fmt_set, mask


def sets(ms):
    return [fmt_set(m) for m in ms]


def test_enumeration_frozen(madar, weak, haji):
    assert sets(idl.enumerate_hyperideals(madar)) == ["{0}", "{0,2}", "{0,1,2,3}"]
    assert sets(idl.enumerate_hyperideals(weak)) == ["{0}", "{0,3}", "{0,2,4}", "{0,1,2,3,4,5}"]
    assert sets(idl.enumerate_hyperideals(haji)) == ["{0}", "{0,1,2,3,4}"]


def test_primes_and_maximals(madar, weak, haji):
    assert sets(idl.prime_hyperideals(madar)) == ["{0,2}"]
    assert sets(idl.prime_hyperideals(weak)) == ["{0,3}", "{0,2,4}"]
    assert sets(idl.maximal_hyperideals(weak)) == ["{0,3}", "{0,2,4}"]
    assert sets(idl.prime_hyperideals(haji)) == ["{0}"]


def test_prime_needs_proper(madar):
    with pytest.raises(ValueError):
        idl.is_prime(madar, madar.full)


def test_radicals(madar, weak):
    assert fmt_set(idl.radical(madar, 1)) == "{0,2}"
    assert fmt_set(idl.radical(madar, 1, "powers")) == "{0,2}"
    assert fmt_set(idl.radical(weak, 1)) == "{0}"
    with pytest.raises(ValueError):
        idl.radical(weak, 1, "bogus")


def test_c_flags(madar, weak, haji):
    assert [idl.is_c_hyperideal(madar, A) for A in idl.enumerate_hyperideals(madar)] == [True] * 3
    # 3∘1 = {0,3} meets {0,2,4} in 0 without lying inside it
    assert idl.c_violation(weak, mask([0, 2, 4])) == mask([0, 3])
    assert not idl.is_c_hyperideal(weak, 1)
    assert idl.is_c_hyperideal(haji, 1)


def test_strong_c(madar, haji):
    assert not idl.is_strong_c_hyperideal(madar, 1)
    assert idl.is_strong_c_hyperideal(madar, mask([0, 2]))
    assert not idl.is_strong_c_hyperideal(haji, 1)


def test_hyperideal_violation(weak):
    assert idl.hyperideal_violation(weak, mask([0, 1]))[0] == "subtraction"
    with pytest.raises(ValueError):
        idl.hyperideal_violation(weak, 0)


def test_generation(weak):
    assert fmt_set(idl.generate_hyperideal(weak, mask([2]))) == "{0,2,4}"
    assert fmt_set(idl.additive_closure(weak, mask([4]))) == "{0,2,4}"
    assert fmt_set(idl.zero_ideal(weak)) == "{0}"
    with pytest.raises(ValueError):
        idl.generate_hyperideal(weak, 0)


def test_colon_product_jacobson(madar, weak):
    assert fmt_set(idl.colon(weak, 1, mask([2]))) == "{0,3}"
    assert idl.ideal_product(weak, mask([0, 3]), mask([0, 2, 4])) == 1
    assert fmt_set(idl.jacobson(madar)) == "{0,2}" and idl.is_local(madar)
    assert not idl.is_local(weak)


def test_primary(madar, weak):
    assert idl.is_primary(madar, 1)
    assert not idl.is_primary(weak, 1)


def test_hyperideal_record(madar):
    h = idl.Hyperideal(madar, mask([0, 2]))
    assert h.is_prime and h.is_c and h.is_maximal and not h.is_pure
    with pytest.raises(ValueError):
        idl.Hyperideal(madar, mask([0, 1]))


def test_enumeration_matches_brute_force(small_rings):
    for G in small_rings:
        assert idl.enumerate_hyperideals(G) == oracles.brute_hyperideals(G), G.name


def test_c_matches_naive(small_rings):
    for G in small_rings[:60]:
        for A in idl.enumerate_hyperideals(G):
            assert idl.is_c_hyperideal(G, A) == oracles.naive_is_c(G, A), (G.name, A)


def test_radical_matches_naive(small_rings):
    for G in small_rings:
        for A in idl.enumerate_hyperideals(G):
            assert idl.radical(G, A) == oracles.naive_radical(G, A)


POOL = st.zphi_rings(6, 2)


@settings(max_examples=150, deadline=None)
@given(hs.sampled_from(POOL), hs.data())
def test_generate_is_closure(G, data):
    X = data.draw(hs.integers(1, G.full))
    Y = data.draw(hs.integers(1, G.full))
    gX = idl.generate_hyperideal(G, X)
    assert core.is_subset(X, gX) and idl.is_hyperideal(G, gX)
    assert idl.generate_hyperideal(G, gX) == gX
    assert core.is_subset(gX, idl.generate_hyperideal(G, X | Y))


@settings(max_examples=150, deadline=None)
@given(hs.sampled_from(POOL), hs.data())
def test_radical_contains_ideal(G, data):
    A = data.draw(hs.sampled_from(idl.enumerate_hyperideals(G)))
    r = idl.radical(G, A)
    assert core.is_subset(A, r)
    assert core.is_subset(idl.radical(G, A, "powers"), r)
