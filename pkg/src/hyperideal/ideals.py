"""Hyperideals: predicates, generation, enumeration, radicals and colon sets.

Sets are bit masks over the carrier of a validated :class:`Hyperring`.
Everything ring-wide (the hyperideal list, the prime list, product families)
is memoised in the ring's private cache; rings are immutable so the cache
never needs invalidating.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .core import (
    Hyperring,
    CapacityError,
    fmt_set,
    is_subset,
    mask,
    members,
    popcount,
    power_sequence,
    subset_product,
)

MAX_SUBGROUPS = 200_000
MAX_FAMILY = 1 << 16


def _cached(G: Hyperring, key, compute):
    try:
        return G._cache[key]
    except KeyError:
        val = G._cache[key] = compute()
        return val


def hyperideal_violation(G: Hyperring, A: int):
    """Return ``None`` for a hyperideal, else ``(rule, witness)``."""
    G.check_mask(A)
    if not A:
        raise ValueError("hyperideals are nonempty")
    elems = members(A)
    for x in elems:
        for y in elems:
            if not A >> G.add[x][G.neg[y]] & 1:
                return "subtraction", (x, y)
    for x in elems:
        for r in range(G.n):
            if G.hyp[r][x] & ~A:
                return "absorption", (r, x)
    return None


def is_hyperideal(G: Hyperring, A: int) -> bool:
    return hyperideal_violation(G, A) is None


def additive_closure(G: Hyperring, X: int) -> int:
    """Smallest additive subgroup containing ``X``."""
    H = 1
    add = G.add
    for g in members(X):
        if H >> g & 1:
            continue
        # <H, g> is the union of the cosets k·g + H
        block = members(H)
        shift = g
        while not H >> shift & 1:
            row = add[shift]
            for h in block:
                H |= 1 << row[h]
            shift = row[g]
    return H


def generate_hyperideal(G: Hyperring, X: int) -> int:
    """Least hyperideal containing the nonempty set ``X``."""
    G.check_mask(X)
    if not X:
        raise ValueError("cannot generate from the empty set")
    cur = X
    while True:
        nxt = additive_closure(G, cur)
        for x in members(nxt):
            for r in range(G.n):
                nxt |= G.hyp[r][x]
        if nxt == cur:
            return cur
        cur = nxt


def zero_ideal(G: Hyperring) -> int:
    """``⟨0⟩``: the hyperideal generated by the additive zero."""
    return _cached(G, "zero", lambda: generate_hyperideal(G, 1))


def additive_subgroups(G: Hyperring, limit: int = MAX_SUBGROUPS) -> list[int]:
    seen = {1}
    frontier = [1]
    while frontier:
        new = []
        for H in frontier:
            for g in range(G.n):
                if H >> g & 1:
                    continue
                K = additive_closure(G, H | 1 << g)
                if K not in seen:
                    seen.add(K)
                    new.append(K)
                    if len(seen) > limit:
                        raise CapacityError(f"more than {limit} additive subgroups")
        frontier = new
    return sorted(seen, key=lambda m: (popcount(m), m))


def enumerate_hyperideals(G: Hyperring) -> list[int]:
    """All hyperideals, ordered by (size, mask)."""
    def compute():
        out = []
        for H in additive_subgroups(G):
            if all(not G.hyp[r][x] & ~H for x in members(H) for r in range(G.n)):
                out.append(H)
        return tuple(out)
    return list(_cached(G, "ideals", compute))


def _require_proper(G: Hyperring, A: int):
    if A == G.full:
        raise ValueError("expected a proper hyperideal")


def _is_prime(G: Hyperring, A: int) -> bool:
    n = G.n
    for x in range(n):
        if A >> x & 1:
            continue
        row = G.hyp[x]
        for y in range(n):
            if not A >> y & 1 and not row[y] & ~A:
                return False
    return True


def is_prime(G: Hyperring, A: int) -> bool:
    _require_proper(G, A)
    return _is_prime(G, A)


def prime_hyperideals(G: Hyperring) -> list[int]:
    return list(_cached(G, "primes", lambda: tuple(
        P for P in enumerate_hyperideals(G) if P != G.full and _is_prime(G, P))))


def maximal_hyperideals(G: Hyperring) -> list[int]:
    def compute():
        proper = [A for A in enumerate_hyperideals(G) if A != G.full]
        return tuple(A for A in proper
                     if not any(B != A and is_subset(A, B) for B in proper))
    return list(_cached(G, "maximals", compute))


def is_maximal(G: Hyperring, A: int) -> bool:
    _require_proper(G, A)
    return A in maximal_hyperideals(G)


def radical_primes(G: Hyperring, A: int) -> int:
    def compute():
        out = G.full
        for P in prime_hyperideals(G):
            if is_subset(A, P):
                out &= P
        return out
    return _cached(G, ("rad", A), compute)


def radical_powers(G: Hyperring, A: int) -> int:
    def compute():
        out = 0
        for a in range(G.n):
            if any(is_subset(p, A) for p in power_sequence(G, 1 << a)):
                out |= 1 << a
        return out
    return _cached(G, ("radpow", A), compute)


def radical(G: Hyperring, A: int, mode: str = "primes") -> int:
    if mode == "primes":
        return radical_primes(G, A)
    if mode == "powers":
        return radical_powers(G, A)
    raise ValueError(f"unknown radical mode {mode!r}")


def is_primary(G: Hyperring, A: int) -> bool:
    _require_proper(G, A)
    rad = radical(G, A)
    for x in range(G.n):
        if A >> x & 1:
            continue
        for y in range(G.n):
            if not G.hyp[x][y] & ~A and not rad >> y & 1:
                return False
    return True


# -- C-hyperideals -----------------------------------------------------------

def product_family(G: Hyperring) -> frozenset[int]:
    """Every set of the form a1∘a2∘...∘ak with k >= 2."""
    def compute():
        fam = {G.hyp[a][b] for a in range(G.n) for b in range(a, G.n)}
        frontier = list(fam)
        while frontier:
            new = []
            for T in frontier:
                for c in range(G.n):
                    U = G.elem_product(c, T)
                    if U not in fam:
                        fam.add(U)
                        new.append(U)
            if len(fam) > MAX_FAMILY:
                raise CapacityError("product family exceeds bound")
            frontier = new
        return frozenset(fam)
    return _cached(G, "pfam", compute)


def sum_family(G: Hyperring) -> frozenset[int]:
    """Every finite sum of products of length >= 1 (singletons included)."""
    def compute():
        terms = sorted(set(product_family(G)) | {1 << x for x in range(G.n)})
        fam = set(terms)
        frontier = list(fam)
        while frontier:
            new = []
            for T in frontier:
                for P in terms:
                    U = _ssum(G, T, P)
                    if U not in fam:
                        fam.add(U)
                        new.append(U)
            if len(fam) > MAX_FAMILY:
                raise CapacityError("sum family exceeds bound")
            frontier = new
        return frozenset(fam)
    return _cached(G, "sfam", compute)


def _ssum(G, a, b):
    out = 0
    bs = members(b)
    for x in members(a):
        row = G.add[x]
        for y in bs:
            out |= 1 << row[y]
    return out


def _first_leak(family, A):
    for T in sorted(family):
        if T & A and T & ~A:
            return T
    return None


def c_violation(G: Hyperring, A: int):
    """``None`` when ``A`` is a C-hyperideal, else a product set meeting but leaving ``A``."""
    return _cached(G, ("cvio", A), lambda: _first_leak(product_family(G), A))


def is_c_hyperideal(G: Hyperring, A: int) -> bool:
    return c_violation(G, A) is None


def strong_c_violation(G: Hyperring, A: int):
    return _cached(G, ("scvio", A), lambda: _first_leak(sum_family(G), A))


def is_strong_c_hyperideal(G: Hyperring, A: int) -> bool:
    return strong_c_violation(G, A) is None


# -- derived sets ----------------------------------------------------------

def colon(G: Hyperring, A: int, D: int) -> int:
    """``(A : D) = {x : x ∘ D ⊆ A}``."""
    if not A or not D:
        raise ValueError("colon needs nonempty sets")
    return mask(x for x in range(G.n) if is_subset(G.elem_product(x, D), A))


def raw_product(G: Hyperring, B: int, A: int) -> int:
    return subset_product(G, B, A)


def ideal_product(G: Hyperring, B: int, A: int) -> int:
    """The hyperideal generated by ``∪ b∘a`` over ``b ∈ B, a ∈ A``."""
    return generate_hyperideal(G, subset_product(G, B, A))


def pure_part(G: Hyperring, A: int) -> int:
    return mask(x for x in members(A) if G.elem_product(x, A) >> x & 1)


def is_pure(G: Hyperring, A: int) -> bool:
    return pure_part(G, A) == A


def jacobson(G: Hyperring) -> int:
    maxs = maximal_hyperideals(G)
    if not maxs:
        return G.full
    out = G.full
    for M in maxs:
        out &= M
    return out


def is_local(G: Hyperring) -> bool:
    return len(maximal_hyperideals(G)) == 1


@dataclass(frozen=True, eq=False)
class Hyperideal:
    """A validated hyperideal with lazily computed flags."""

    ring: Hyperring
    mask: int

    def __post_init__(self):
        bad = hyperideal_violation(self.ring, self.mask)
        if bad is not None:
            raise ValueError(f"{fmt_set(self.mask)} is not a hyperideal: {bad}")

    def __eq__(self, other):
        return isinstance(other, Hyperideal) and (self.ring, self.mask) == (other.ring, other.mask)

    def __hash__(self):
        return hash((self.ring, self.mask))

    @property
    def proper(self) -> bool:
        return self.mask != self.ring.full

    @cached_property
    def is_c(self) -> bool:
        return is_c_hyperideal(self.ring, self.mask)

    @cached_property
    def is_strong_c(self) -> bool:
        return is_strong_c_hyperideal(self.ring, self.mask)

    @cached_property
    def is_prime(self) -> bool:
        return self.proper and is_prime(self.ring, self.mask)

    @cached_property
    def is_primary(self) -> bool:
        return self.proper and is_primary(self.ring, self.mask)

    @cached_property
    def is_maximal(self) -> bool:
        return self.proper and is_maximal(self.ring, self.mask)

    @cached_property
    def is_pure(self) -> bool:
        return is_pure(self.ring, self.mask)

    @cached_property
    def radical(self) -> int:
        return radical(self.ring, self.mask)
