"""Good homomorphisms between finite multiplicative hyperrings."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import Hyperring, fmt_set, is_subset, mask, members

# identity-condition modes: "corrected" requires eta(1) to be an identity of
# the target; "literal" reads the source's eta(1_G1) = eta(1_G2), which does
# not typecheck across rings and so imposes nothing.
IDENTITY_MODES = ("corrected", "literal")


class HomViolation(ValueError):
    def __init__(self, condition: str, witness: tuple):
        self.condition = condition
        self.witness = tuple(witness)
        super().__init__(f"homomorphism condition {condition!r} fails at {self.witness}")


class HomPreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class GoodHom:
    src: Hyperring
    dst: Hyperring
    map: tuple[int, ...]
    surjective: bool
    kernel: int

    def image(self, m: int) -> int:
        return mask(self.map[x] for x in members(m))

    def preimage(self, m: int) -> int:
        return mask(x for x in range(self.src.n) if m >> self.map[x] & 1)


def validate_hom(src: Hyperring, dst: Hyperring, images: Sequence[int], *,
                 mode: str = "corrected") -> GoodHom:
    if mode not in IDENTITY_MODES:
        raise ValueError(f"unknown identity mode {mode!r}")
    images = tuple(int(y) for y in images)
    if len(images) != src.n or any(not 0 <= y < dst.n for y in images):
        raise HomViolation("total", (len(images),))
    for a in range(src.n):
        for b in range(src.n):
            if images[src.add[a][b]] != dst.add[images[a]][images[b]]:
                raise HomViolation("additive", (a, b))
    for a in range(src.n):
        for b in range(a, src.n):
            img = mask(images[x] for x in members(src.hyp[a][b]))
            if img != dst.hyp[images[a]][images[b]]:
                raise HomViolation("multiplicative", (a, b))
    if mode == "corrected":
        if not any(dst.identities >> images[e] & 1 for e in members(src.identities)):
            raise HomViolation("identity", tuple(members(src.identities)))
    kernel = mask(x for x in range(src.n) if images[x] == 0)
    surjective = len(set(images)) == dst.n
    return GoodHom(src, dst, images, surjective, kernel)


def identity_hom(G: Hyperring) -> GoodHom:
    return validate_hom(G, G, range(G.n))


def projection_hom(L: Hyperring, R: Hyperring, P: Hyperring, side: int = 0) -> GoodHom:
    """Coordinate projection ``P = L × R -> L`` (side 0) or ``-> R`` (side 1)."""
    if side == 0:
        return validate_hom(P, L, [k // R.n for k in range(P.n)])
    return validate_hom(P, R, [k % R.n for k in range(P.n)])


def preimage_ideal(h: GoodHom, a2: int) -> int:
    from .ideals import is_hyperideal

    if not is_hyperideal(h.dst, a2):
        raise ValueError(f"{fmt_set(a2)} is not a hyperideal of the target")
    pre = h.preimage(a2)
    # preimages of hyperideals are hyperideals; a failure here is an engine bug
    assert is_hyperideal(h.src, pre), "preimage of a hyperideal is not a hyperideal"
    return pre


def image_ideal(h: GoodHom, a1: int) -> int:
    from .ideals import is_hyperideal

    if not h.surjective:
        raise HomPreconditionError("image_ideal needs a surjective homomorphism")
    if not is_subset(h.kernel, a1):
        raise HomPreconditionError(
            f"kernel {fmt_set(h.kernel)} is not contained in {fmt_set(a1)}")
    img = h.image(a1)
    if not is_hyperideal(h.dst, img):
        raise AssertionError(f"image {fmt_set(img)} of a hyperideal is not a hyperideal")
    return img


def image_mcs(h: GoodHom, s: int) -> int:
    from .classify import mcs_violation

    img = h.image(s)
    if img & 1:
        raise HomPreconditionError("0 of the target lies in the image of S")
    bad = mcs_violation(h.dst, img)
    if bad is not None:
        raise HomPreconditionError(f"image {fmt_set(img)} is not an MCS: {bad}")
    return img
