"""Multiplicative closed subsets and the S-relative hyperideal classes.

Each class asks for one witness ``t ∈ S`` that handles every pair ``(u, v)``
satisfying the class hypothesis. Witnesses are tried in ascending index
order and the first one that works is reported.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from .core import Hyperring, fmt_set, is_subset, mask, members
from . import ideals

CLASSES = ("s_prime", "s_primary", "quasi", "weakly_quasi", "strongly_quasi")


# -- MCS -------------------------------------------------------------------

def mcs_violation(G: Hyperring, S: int):
    """``None`` for an MCS, else ``("identity", ())`` or ``("closure", (s1, s2))``."""
    G.check_mask(S)
    if not S:
        raise ValueError("an MCS is nonempty")
    if not S & G.identities:
        return "identity", ()
    elems = members(S)
    for i, s1 in enumerate(elems):
        for s2 in elems[i:]:
            if not G.hyp[s1][s2] & S:
                return "closure", (s1, s2)
    return None


def is_mcs(G: Hyperring, S: int) -> bool:
    return mcs_violation(G, S) is None


def enumerate_mcs(G: Hyperring, max_size: int = 4) -> list[int]:
    """All MCSs with at most ``max_size`` elements, ordered by (size, mask)."""
    def compute():
        found = set()
        ids = members(G.identities)
        for e in ids:
            rest = [x for x in range(G.n) if x != e]
            for k in range(max_size):
                for extra in combinations(rest, k):
                    S = mask(extra) | 1 << e
                    if S not in found and mcs_violation(G, S) is None:
                        found.add(S)
        return tuple(sorted(found, key=lambda m: (bin(m).count("1"), m)))
    return list(ideals._cached(G, ("mcs", max_size), compute))


def saturate(G: Hyperring, S: int) -> int:
    """``{a : (a∘b) ∩ S ≠ ∅ for some b}``."""
    return mask(a for a in range(G.n) if any(G.hyp[a][b] & S for b in range(G.n)))


# -- class predicates ------------------------------------------------------

@dataclass(frozen=True)
class ClassResult:
    holds: bool
    witness: Optional[int] = None
    counterexample: Optional[tuple[int, int]] = None


def hypothesis_pairs(G: Hyperring, A: int, weak: bool = False) -> list[tuple[int, int]]:
    """Ordered pairs with ``u∘v ⊆ A`` (and ``0 ∉ u∘v`` when ``weak``)."""
    def compute():
        out = []
        for u in range(G.n):
            row = G.hyp[u]
            for v in range(G.n):
                p = row[v]
                if not p & ~A and not (weak and p & 1):
                    out.append((u, v))
        return tuple(out)
    return ideals._cached(G, ("pairs", A, weak), compute)


def _inside(G: Hyperring, t: int, target: int) -> list[bool]:
    """``[t∘u ⊆ target for u in carrier]``."""
    row = G.hyp[t]
    return [not row[u] & ~target for u in range(G.n)]


def _square_inside(G: Hyperring, t: int, target: int) -> list[bool]:
    """``[t∘u² ⊆ target for u in carrier]``."""
    return [not G.elem_product(t, G.hyp[u][u]) & ~target for u in range(G.n)]


def _side_tests(G, kind, t, A, rad):
    """Per-element tables (left, right) so that a pair passes iff left[u] or right[v]."""
    if kind == "s_prime":
        a = _inside(G, t, A)
        return a, a
    if kind == "s_primary":
        return _inside(G, t, A), _inside(G, t, rad)
    if kind in ("quasi", "weakly_quasi"):
        r = _inside(G, t, rad)
        return r, r
    if kind == "strongly_quasi":
        return _square_inside(G, t, A), _inside(G, t, rad)
    raise ValueError(f"unknown class {kind!r}")


def class_result(G: Hyperring, A: int, S: int, kind: str, rad: Optional[int] = None) -> ClassResult:
    """Decide one class for a hyperideal ``A`` and MCS ``S``.

    Non-disjoint ``(A, S)`` never belongs to a class.
    """
    if A & S:
        return ClassResult(False)
    if rad is None:
        rad = ideals.radical(G, A)
    pairs = hypothesis_pairs(G, A, weak=(kind == "weakly_quasi"))
    first_cex = None
    for t in members(S):
        left, right = _side_tests(G, kind, t, A, rad)
        cex = next(((u, v) for u, v in pairs if not (left[u] or right[v])), None)
        if cex is None:
            return ClassResult(True, witness=t)
        if first_cex is None:
            first_cex = cex
    return ClassResult(False, counterexample=first_cex)


def is_s_prime(G, A, S) -> bool:
    return class_result(G, A, S, "s_prime").holds


def is_s_primary(G, A, S) -> bool:
    return class_result(G, A, S, "s_primary").holds


def is_quasi(G, A, S) -> bool:
    return class_result(G, A, S, "quasi").holds


def is_weakly_quasi(G, A, S) -> bool:
    return class_result(G, A, S, "weakly_quasi").holds


def is_strongly_quasi(G, A, S) -> bool:
    return class_result(G, A, S, "strongly_quasi").holds


# -- reports ---------------------------------------------------------------

@dataclass(frozen=True)
class ClassificationReport:
    ring: str
    ideal: int
    mcs: int
    disjoint: bool
    radical: int
    is_c: bool
    is_strong_c: Optional[bool]
    classes: dict = field(default_factory=dict)

    def lines(self) -> list[str]:
        out = []
        for kind in CLASSES:
            r = self.classes.get(kind)
            if r is None:
                out.append(f"class={kind} holds=skip witness=- counterexample=-")
                continue
            w = "-" if r.witness is None else str(r.witness)
            c = "-" if r.counterexample is None else f"({r.counterexample[0]},{r.counterexample[1]})"
            out.append(f"class={kind} holds={str(r.holds).lower()} witness={w} counterexample={c}")
        sc = "unknown" if self.is_strong_c is None else str(self.is_strong_c).lower()
        out += [
            f"radical={fmt_set(self.radical)}",
            f"c_hyperideal={str(self.is_c).lower()}",
            f"strong_c={sc}",
            f"disjoint={str(self.disjoint).lower()}",
        ]
        return out

    def text(self) -> str:
        return "\n".join(self.lines()) + "\n"


def classify(G: Hyperring, A: int, S: int, *, strong_c: bool = True) -> ClassificationReport:
    bad = ideals.hyperideal_violation(G, A)
    if bad is not None:
        raise ValueError(f"{fmt_set(A)} is not a hyperideal: {bad}")
    bad = mcs_violation(G, S)
    if bad is not None:
        raise ValueError(f"{fmt_set(S)} is not an MCS: {bad}")
    rad = ideals.radical(G, A)
    is_c = ideals.is_c_hyperideal(G, A)
    sc = None
    if strong_c:
        try:
            sc = ideals.is_strong_c_hyperideal(G, A)
        except ideals.CapacityError:
            sc = None
    disjoint = not A & S
    classes = {}
    if disjoint:
        classes = {k: class_result(G, A, S, k, rad) for k in CLASSES}
    return ClassificationReport(G.name, A, S, disjoint, rad, is_c, sc, classes)


# -- avoidance -------------------------------------------------------------

class Skip(Exception):
    """A theorem hypothesis does not hold on the given instance."""

    def __init__(self, hypothesis: str):
        self.hypothesis = hypothesis
        super().__init__(hypothesis)


def avoidance_witness(G: Hyperring, A: int, covers: list[int], S: int):
    """Search ``t ∈ S`` and cover index ``j`` with ``t∘A ⊆ rad(A_j)``.

    Raises :class:`Skip` if the covers are not quasi S-primary C-hyperideals
    or do not cover ``A``; returns ``None`` when no pair exists.
    """
    union = 0
    for Aj in covers:
        if not ideals.is_c_hyperideal(G, Aj):
            raise Skip("cover-not-c")
        if not is_quasi(G, Aj, S):
            raise Skip("cover-not-quasi")
        union |= Aj
    if not is_subset(A, union):
        raise Skip("not-covered")
    for t in members(S):
        tA = G.elem_product(t, A)
        for j, Aj in enumerate(covers):
            if is_subset(tA, ideals.radical(G, Aj)):
                return t, j
    return None
