"""Named engine mutations for checking that the conformance suite has teeth.

Each mutant swaps one engine function for a subtly wrong version. Running
the corpus under a mutant should turn at least one outcome into a Fail for
the check ids listed in ``targets``.
"""

from __future__ import annotations

from contextlib import contextmanager
from dataclasses import dataclass
from typing import Callable
from unittest import mock

from . import classify as cl
from . import conformance as cf
from . import core, homs
from . import ideals as idl
from .core import members

_orig_side_tests = cl._side_tests
_orig_class_result = cl.class_result
_orig_radical = idl.radical
_orig_colon = idl.colon
_orig_preimage = homs.GoodHom.preimage
_orig_image = homs.GoodHom.image
_orig_subset_product = core.subset_product
_orig_avoidance = cl.avoidance_witness


@dataclass(frozen=True)
class Mutant:
    name: str
    description: str
    targets: tuple   # check ids observed to Fail on the mutation corpus
    patches: Callable[[], list]


def _quasi_ignores_t_left(G, kind, t, A, rad):
    left, right = _orig_side_tests(G, kind, t, A, rad)
    if kind == "quasi":
        left = [bool(rad >> u & 1) for u in range(G.n)]
    return left, right


def _s_prime_uses_radical(G, kind, t, A, rad):
    if kind == "s_prime":
        r = cl._inside(G, t, rad)
        return r, r
    return _orig_side_tests(G, kind, t, A, rad)


def _quasi_is_s_prime(G, kind, t, A, rad):
    if kind == "quasi":
        r = cl._inside(G, t, A)
        return r, r
    return _orig_side_tests(G, kind, t, A, rad)


def _weak_always(G, A, S, kind, rad=None):
    if kind == "weakly_quasi" and not A & S:
        return cl.ClassResult(True, witness=members(S)[0])
    return _orig_class_result(G, A, S, kind, rad)


def _weak_keeps_zero(G, A, S, kind, rad=None):
    if kind == "weakly_quasi":
        kind = "quasi"
    return _orig_class_result(G, A, S, kind, rad)


def _first_witness_only(G, A, S, kind, rad=None):
    if S & (S - 1):
        S = S & -S
    return _orig_class_result(G, A, S, kind, rad)


def _radical_is_ideal(G, A, mode="primes"):
    return A


def _radical_is_carrier(G, A, mode="primes"):
    return G.full


def _radical_is_nil(G, A, mode="primes"):
    return _orig_radical(G, idl.zero_ideal(G))


def _subgroups_as_ideals(G):
    return list(idl.additive_subgroups(G))


def _colon_drops_zero(G, A, D):
    out = _orig_colon(G, A, D)
    return out & ~1 if out != 1 else out


def _preimage_drops_kernel(self, m):
    return _orig_preimage(self, m) & ~(self.kernel & ~1)


def _image_drops_top(self, m):
    out = _orig_image(self, m)
    top = 1 << (out.bit_length() - 1)
    return out & ~top if out != top else out


def _square_product(G, A, B):
    return _orig_subset_product(G, A, A)


def _avoidance_first_cover(G, A, covers, S):
    got = _orig_avoidance(G, A, covers, S)
    if got is None or got[1] == 0:
        return got
    # insist on the first cover only
    for t in members(S):
        if core.is_subset(G.elem_product(t, A), idl.radical(G, covers[0])):
            return t, 0
    return None


def _prime_ignores_square(G, A):
    idl._require_proper(G, A)
    n = G.n
    for x in range(n):
        for y in range(x + 1, n):
            if not (A >> x & 1 or A >> y & 1) and not G.hyp[x][y] & ~A:
                return False
    return True


def _zero_is_carrier(G):
    return G.full


def _c_everything(G, A):
    return None


def _r_condition_always(G, A, S):
    return True


MUTANTS = {m.name: m for m in [
    Mutant("quasi-ignores-t-left", "quasi test checks u ∈ rad(A) on the left, ignoring t",
           ("T11", "T12", "P_PROD", "T_EQ3", "P13", "T_CART", "T24", "T_PURE", "T41"),
           lambda: [mock.patch.object(cl, "_side_tests", _quasi_ignores_t_left)]),
    Mutant("quasi-is-s-prime", "quasi test compares against A instead of rad(A)",
           ("T11", "T12", "P13", "T24", "T_PURE", "T41"),
           lambda: [mock.patch.object(cl, "_side_tests", _quasi_is_s_prime)]),
    Mutant("s-prime-uses-radical", "S-prime compares against rad(A) instead of A",
           ("T_EQ3",),
           lambda: [mock.patch.object(cl, "_side_tests", _s_prime_uses_radical)]),
    Mutant("weak-keeps-zero", "weakly quasi forgets the 0 ∉ u∘v hypothesis",
           ("T23",),
           lambda: [mock.patch.object(cl, "class_result", _weak_keeps_zero)]),
    Mutant("weak-always", "every disjoint pair is weakly quasi",
           ("T23", "T24", "T_PURE"),
           lambda: [mock.patch.object(cl, "class_result", _weak_always)]),
    Mutant("first-witness-only", "class witnesses are searched in min(S) only",
           ("T12", "P_PROD", "P_S1S2", "P13", "T_CART", "T23", "T42", "T_CART_SQ"),
           lambda: [mock.patch.object(cl, "class_result", _first_witness_only)]),
    Mutant("radical-is-ideal", "radical returns A itself",
           ("T41",),
           lambda: [mock.patch.object(idl, "radical", _radical_is_ideal)]),
    Mutant("radical-is-carrier", "radical returns the whole carrier",
           ("T11", "T_EQ3", "P13", "T14", "T_CART", "T21", "T42", "T_CART_SQ"),
           lambda: [mock.patch.object(idl, "radical", _radical_is_carrier)]),
    Mutant("radical-is-nil", "every radical is rad(⟨0⟩)",
           ("T_EQ3", "T14", "T_HOMO", "T_CART", "T42", "T_HOMO2", "T_CART_SQ"),
           lambda: [mock.patch.object(idl, "radical", _radical_is_nil)]),
    Mutant("colon-drops-zero", "colon ideals lose the element 0",
           ("P13", "T42"),
           lambda: [mock.patch.object(idl, "colon", _colon_drops_zero)]),
    Mutant("preimage-drops-kernel", "hom preimages keep only 0 from the kernel",
           ("T_HOMO", "T_HOMO2"),
           lambda: [mock.patch.object(homs.GoodHom, "preimage", _preimage_drops_kernel)]),
    Mutant("image-drops-top", "hom images lose their largest element",
           ("T_HOMO", "T_QUOT", "T_HOMO2"),
           lambda: [mock.patch.object(homs.GoodHom, "image", _image_drops_top)]),
    Mutant("product-squares-left", "subset product multiplies the left operand by itself",
           ("T12", "T23", "T42"),
           lambda: [mock.patch.object(core, "subset_product", _square_product)]),
    Mutant("subgroups-as-ideals", "hyperideal enumeration returns every additive subgroup",
           ("P_PROD", "P_INT", "T_QUOT"),
           lambda: [mock.patch.object(idl, "enumerate_hyperideals", _subgroups_as_ideals)]),
    Mutant("avoidance-first-cover", "avoidance only looks at the first cover",
           ("T14",),
           lambda: [mock.patch.object(cl, "avoidance_witness", _avoidance_first_cover)]),
    Mutant("prime-ignores-square", "prime test skips pairs u∘u",
           ("T14",),
           lambda: [mock.patch.object(idl, "is_prime", _prime_ignores_square)]),
    Mutant("zero-ideal-is-carrier", "⟨0⟩ is computed as the whole carrier",
           ("T23", "T24", "T_PURE"),
           lambda: [mock.patch.object(idl, "zero_ideal", _zero_is_carrier)]),
    Mutant("c-everything", "every hyperideal passes the C test",
           ("T23", "T24", "T_PURE"),
           lambda: [mock.patch.object(idl, "c_violation", _c_everything)]),
    Mutant("r-condition-always", "the r∘a² side condition always holds",
           ("T_EQ3",),
           lambda: [mock.patch.object(cf, "_r_condition", _r_condition_always)]),
]}

_active: list = []
_active_name: list = []


def active() -> str:
    return _active_name[0] if _active_name else ""


def activate(name: str) -> None:
    """Apply a mutant for the rest of the process. Re-activating is a no-op."""
    if active() == name:
        return
    if _active:
        raise RuntimeError(f"mutant {active()!r} already active")
    try:
        mutant = MUTANTS[name]
    except KeyError:
        raise ValueError(f"unknown mutant {name!r}") from None
    for p in mutant.patches():
        p.start()
        _active.append(p)
    _active_name.append(name)


def deactivate() -> None:
    while _active:
        _active.pop().stop()
    _active_name.clear()


@contextmanager
def applied(name: str):
    activate(name)
    try:
        yield MUTANTS[name]
    finally:
        deactivate()


def failing_checks(name: str, checks=None) -> set:
    """Check ids with at least one Fail on the mutation corpus under mutant ``name``."""
    checks = checks or MUTANTS[name].targets
    with applied(name):
        summary = cf.run_all(cf.mutation_corpus(), checks=checks)
    return {c for c in summary.checks if summary.counts[c]["fail"]}
