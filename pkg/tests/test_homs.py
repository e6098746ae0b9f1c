import pytest

from hyperideal import core, homs
from hyperideal import structures as st
from hyperideal.core import fmt_set, mask


def test_identity_hom(madar):
    h = homs.identity_hom(madar)
    assert h.surjective and h.kernel == 1
    assert h.image(mask([1, 3])) == mask([1, 3])


def test_quotient_projection(weak):
    Q, pi = core.quotient_ring(weak, mask([0, 2, 4]))
    assert Q.n == 2 and pi.map == (0, 1, 0, 1, 0, 1)
    assert pi.preimage(1) == mask([0, 2, 4])


def test_projection_hom(madar, haji):
    P = core.direct_product(madar, haji)
    left = homs.projection_hom(madar, haji, P, 0)
    right = homs.projection_hom(madar, haji, P, 1)
    A = core.product_mask(madar, haji, mask([0, 2]), haji.full)
    assert left.image(A) == mask([0, 2]) and right.image(A) == haji.full
    assert left.kernel == core.product_mask(madar, haji, 1, haji.full)


@pytest.mark.parametrize("images,condition", [
    ([0, 1, 2], "total"),
    ([0, 1, 1, 1], "additive"),
    ([0, 3, 2, 1, 0], "total"),
])
def test_violations(madar, images, condition):
    with pytest.raises(homs.HomViolation) as e:
        homs.validate_hom(madar, madar, images)
    assert e.value.condition == condition


def test_multiplicative_violation():
    Z4 = core.build_zphi(4, [1])
    with pytest.raises(homs.HomViolation) as e:
        homs.validate_hom(Z4, st.madar(), range(4))
    assert e.value.condition == "multiplicative"


def test_identity_modes(madar):
    # the zero map is additive and multiplicative into the trivial ring
    Z = core.trivial_ring()
    h = homs.validate_hom(madar, Z, [0, 0, 0, 0])
    assert h.kernel == madar.full
    # Z_phi(4,{1,3}) -> Z_phi(2,{1}) by reduction mod 2
    Z2 = core.build_zphi(2, [1])
    g = homs.validate_hom(madar, Z2, [0, 1, 0, 1])
    assert g.surjective
    with pytest.raises(ValueError):
        homs.validate_hom(madar, Z2, [0, 1, 0, 1], mode="bogus")


def test_literal_mode_skips_identity(madar):
    Z2 = core.build_zphi(2, [1])
    with pytest.raises(homs.HomViolation) as e:
        homs.validate_hom(madar, Z2, [0, 0, 0, 0])
    assert e.value.condition == "identity"
    h = homs.validate_hom(madar, Z2, [0, 0, 0, 0], mode="literal")
    assert not h.surjective and h.kernel == madar.full


def test_preimage_and_image(weak):
    Q, pi = core.quotient_ring(weak, mask([0, 3]))
    assert fmt_set(homs.preimage_ideal(pi, 1)) == "{0,3}"
    assert fmt_set(homs.image_ideal(pi, mask([0, 3]))) == "{0}"
    with pytest.raises(homs.HomPreconditionError):
        homs.image_ideal(pi, 1)
    with pytest.raises(ValueError):
        homs.preimage_ideal(pi, mask([0, 1]))


def test_image_mcs(weak):
    Q, pi = core.quotient_ring(weak, mask([0, 3]))
    assert fmt_set(homs.image_mcs(pi, mask([1, 5]))) == "{1,2}"
    with pytest.raises(homs.HomPreconditionError):
        homs.image_mcs(pi, mask([1, 3]))
