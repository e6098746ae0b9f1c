"""Finite commutative multiplicative hyperrings.

Elements are dense indices ``0..n-1`` with ``0`` the additive zero. Subsets of
the carrier are plain Python ints used as bit masks (bit ``i`` set means
element ``i`` is present); every operation takes the ring explicitly, so the
ring itself acts as the owner of a mask.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product as _cartesian
from typing import Iterable, Sequence

DEFAULT_CAPACITY = 64

AXIOM_ORDER = ("range", "I", "nonempty", "V", "III", "II", "IV", "no-identity")


class AxiomViolation(ValueError):
    """Raised when raw tables fail one of the hyperring axioms."""

    def __init__(self, axiom: str, witness: tuple, message: str = ""):
        self.axiom = axiom
        self.witness = tuple(witness)
        super().__init__(message or f"axiom {axiom} violated at {self.witness}")


class CapacityError(ValueError):
    pass


# -- mask helpers ----------------------------------------------------------

def mask(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        m |= 1 << e
    return m


@lru_cache(maxsize=1 << 18)
def members(m: int) -> tuple[int, ...]:
    out = []
    while m:
        low = m & -m
        out.append(low.bit_length() - 1)
        m ^= low
    return tuple(out)


def popcount(m: int) -> int:
    return bin(m).count("1")


def fmt_set(m: int) -> str:
    return "{" + ",".join(str(e) for e in members(m)) + "}"


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


# -- the structure ---------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Hyperring:
    """A validated finite commutative multiplicative hyperring.

    Build instances through :func:`validate` (or the constructors below);
    the raw constructor does no checking.
    """

    n: int
    add: tuple[tuple[int, ...], ...]
    hyp: tuple[tuple[int, ...], ...]
    neg: tuple[int, ...]
    identities: int
    strongly_distributive: bool
    name: str = ""
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def check_mask(self, m: int) -> int:
        if m < 0 or m >> self.n:
            raise ValueError(f"set {m:#x} has elements outside carrier of size {self.n}")
        return m

    def key(self) -> tuple:
        return (self.n, self.add, self.hyp)

    def __eq__(self, other):
        return isinstance(other, Hyperring) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __getstate__(self):
        # drop caches when shipping to worker processes
        state = dict(self.__dict__)
        state["_cache"] = {}
        return state

    def __setstate__(self, state):
        for k, v in state.items():
            object.__setattr__(self, k, v)

    def elem_product(self, x: int, b: int) -> int:
        """``{x} ∘ B`` for a mask ``B``."""
        row = self.hyp[x]
        out = 0
        for y in members(b):
            out |= row[y]
        return out

    def neg_set(self, m: int) -> int:
        out = 0
        for e in members(m):
            out |= 1 << self.neg[e]
        return out


# -- subset algebra --------------------------------------------------------

def subset_product(G: Hyperring, a: int, b: int) -> int:
    G.check_mask(a)
    G.check_mask(b)
    if not a or not b:
        raise ValueError("subset_product needs nonempty operands")
    out = 0
    for x in members(a):
        out |= G.elem_product(x, b)
    return out


def subset_sum(G: Hyperring, a: int, b: int) -> int:
    G.check_mask(a)
    G.check_mask(b)
    out = 0
    bs = members(b)
    for x in members(a):
        row = G.add[x]
        for y in bs:
            out |= 1 << row[y]
    return out


def subset_power(G: Hyperring, a: int, k: int) -> int:
    if k < 1:
        raise ValueError("subset_power needs k >= 1")
    out = a
    for _ in range(k - 1):
        out = subset_product(G, out, a)
    return out


def power_sequence(G: Hyperring, a: int):
    """Yield ``a, a^2, a^3, ...`` until the sequence of sets starts to repeat.

    The next power depends only on the current one, so once a set recurs the
    tail is periodic; every set in the orbit is yielded exactly once.
    """
    seen = set()
    cur = a
    while cur not in seen:
        seen.add(cur)
        yield cur
        cur = subset_product(G, cur, a)


# -- validation ------------------------------------------------------------

def _scan(n: int, add: Sequence[Sequence[int]], hyp: Sequence[Sequence[int]]):
    """Return ``(axiom, witness)`` for the first violation, or ``None``."""
    full = (1 << n) - 1
    if len(add) != n or len(hyp) != n:
        return "range", (len(add), len(hyp))
    for x in range(n):
        if len(add[x]) != n or len(hyp[x]) != n:
            return "range", (x,)
        for y in range(n):
            if not 0 <= add[x][y] < n:
                return "range", (x, y)
            if hyp[x][y] < 0 or hyp[x][y] & ~full:
                return "range", (x, y)

    # I: abelian group with neutral element 0
    for x in range(n):
        if add[0][x] != x or add[x][0] != x:
            return "I", (0, x)
    for x in range(n):
        for y in range(n):
            if add[x][y] != add[y][x]:
                return "I", (x, y)
    for x in range(n):
        if 0 not in add[x]:
            return "I", (x,)
    for x, y, z in _cartesian(range(n), repeat=3):
        if add[add[x][y]][z] != add[x][add[y][z]]:
            return "I", (x, y, z)

    for x in range(n):
        for y in range(n):
            if not hyp[x][y]:
                return "nonempty", (x, y)

    for x in range(n):
        for y in range(x + 1, n):
            if hyp[x][y] != hyp[y][x]:
                return "V", (x, y)

    neg = [add[x].index(0) for x in range(n)]

    def negate(m):
        return mask(neg[e] for e in members(m))

    for x in range(n):
        for y in range(n):
            if hyp[neg[x]][y] != negate(hyp[x][y]):
                return "III", (x, y)

    memo = {}

    def prod(a, b):
        key = ("p", a, b)
        if key in memo:
            return memo[key]
        out = 0
        bs = members(b)
        for u in members(a):
            for v in bs:
                out |= hyp[u][v]
        memo[key] = out
        return out

    def ssum(a, b):
        key = ("s", a, b)
        if key in memo:
            return memo[key]
        out = 0
        bs = members(b)
        for u in members(a):
            for v in bs:
                out |= 1 << add[u][v]
        memo[key] = out
        return out

    for x, y, z in _cartesian(range(n), repeat=3):
        if prod(hyp[x][y], 1 << z) != prod(1 << x, hyp[y][z]):
            return "II", (x, y, z)

    for x, y, z in _cartesian(range(n), repeat=3):
        lhs = hyp[add[y][z]][x]
        if lhs & ~ssum(hyp[y][x], hyp[z][x]):
            return "IV", (x, y, z)

    if not any(all(hyp[e][a] >> a & 1 for a in range(n)) for e in range(n)):
        return "no-identity", ()
    return None


def validate(add, hyp, *, name: str = "", capacity: int = DEFAULT_CAPACITY) -> Hyperring:
    """Check raw tables exhaustively and return the validated hyperring.

    ``add`` is an n×n table of element indices; ``hyp`` is an n×n table whose
    entries are either bit masks or iterables of element indices.
    """
    n = len(add)
    if n < 1:
        raise AxiomViolation("range", (0,), "carrier must be nonempty")
    if n > capacity:
        raise CapacityError(f"carrier size {n} exceeds capacity {capacity}")
    add = tuple(tuple(int(v) for v in row) for row in add)
    hyp = tuple(tuple(c if isinstance(c, int) else mask(c) for c in row) for row in hyp)
    bad = _scan(n, add, hyp)
    if bad is not None:
        axiom, witness = bad
        raise AxiomViolation(axiom, witness)
    neg = tuple(add[x].index(0) for x in range(n))
    identities = mask(e for e in range(n) if all(hyp[e][a] >> a & 1 for a in range(n)))
    G = Hyperring(n, add, hyp, neg, identities, False, name)
    sums = {}

    def ssum(a, b):
        key = (a, b) if a <= b else (b, a)
        if key not in sums:
            sums[key] = subset_sum(G, a, b)
        return sums[key]

    strong = all(
        G.hyp[G.add[y][z]][x] == ssum(G.hyp[y][x], G.hyp[z][x])
        for x, y, z in _cartesian(range(n), repeat=3)
    )
    object.__setattr__(G, "strongly_distributive", strong)
    return G


def build_zphi(n: int, phi: Iterable[int], *, name: str = "", capacity: int = DEFAULT_CAPACITY) -> Hyperring:
    """``Z_n`` with ``x ∘ y = {x·a·y mod n : a ∈ phi}``."""
    phi = sorted(set(phi))
    if n < 1 or not phi or any(not 0 <= a < n for a in phi):
        raise ValueError(f"bad Z_phi parameters n={n} phi={phi}")
    add = [[(x + y) % n for y in range(n)] for x in range(n)]
    hyp = [[mask(x * a * y % n for a in phi) for y in range(n)] for x in range(n)]
    return validate(add, hyp, name=name or f"Z{n}[{','.join(map(str, phi))}]", capacity=capacity)


def trivial_ring() -> Hyperring:
    return validate([[0]], [[1]], name="Z1")


def pair_index(R: Hyperring, u: int, v: int) -> int:
    return u * R.n + v


def unpair(R: Hyperring, k: int) -> tuple[int, int]:
    return divmod(k, R.n)


def product_mask(L: Hyperring, R: Hyperring, a: int, b: int) -> int:
    """Encode ``A × B`` in the carrier of ``direct_product(L, R)``."""
    out = 0
    bs = members(b)
    for u in members(a):
        for v in bs:
            out |= 1 << (u * R.n + v)
    return out


def project_mask(L: Hyperring, R: Hyperring, m: int) -> tuple[int, int]:
    a = b = 0
    for k in members(m):
        u, v = divmod(k, R.n)
        a |= 1 << u
        b |= 1 << v
    return a, b


def direct_product(L: Hyperring, R: Hyperring, *, capacity: int = DEFAULT_CAPACITY) -> Hyperring:
    n = L.n * R.n
    if n > capacity:
        raise CapacityError(f"product carrier {n} exceeds capacity {capacity}")
    pairs = [divmod(k, R.n) for k in range(n)]
    add = [[L.add[u1][u2] * R.n + R.add[v1][v2] for (u2, v2) in pairs] for (u1, v1) in pairs]
    hyp = [[product_mask(L, R, L.hyp[u1][u2], R.hyp[v1][v2]) for (u2, v2) in pairs]
           for (u1, v1) in pairs]
    return validate(add, hyp, name=f"({L.name}x{R.name})", capacity=capacity)


def cosets(G: Hyperring, B: int) -> list[int]:
    """Additive cosets of ``B`` ordered by smallest member; the zero coset is first."""
    out = []
    covered = 0
    for x in range(G.n):
        if covered >> x & 1:
            continue
        c = mask(G.add[x][b] for b in members(B))
        out.append(c)
        covered |= c
    return out


def quotient_ring(G: Hyperring, B: int):
    """Return ``(G/B, projection)`` where projection is a validated GoodHom."""
    from . import homs
    from .ideals import hyperideal_violation

    bad = hyperideal_violation(G, B)
    if bad is not None:
        raise ValueError(f"{fmt_set(B)} is not a hyperideal: {bad}")
    cs = cosets(G, B)
    proj = [0] * G.n
    for i, c in enumerate(cs):
        for x in members(c):
            proj[x] = i
    reps = [members(c)[0] for c in cs]
    k = len(cs)
    add = [[proj[G.add[reps[i]][reps[j]]] for j in range(k)] for i in range(k)]
    hyp = [[mask(proj[a] for a in members(G.hyp[reps[i]][reps[j]])) for j in range(k)]
           for i in range(k)]
    Q = validate(add, hyp, name=f"{G.name}/{fmt_set(B)}")
    return Q, homs.validate_hom(G, Q, proj)


def units(G: Hyperring) -> int:
    out = 0
    for x in range(G.n):
        if any(G.hyp[x][y] & G.identities for y in range(G.n)):
            out |= 1 << x
    return out


@dataclass(frozen=True)
class StructureFlags:
    is_hyperfield: bool
    is_hyperdomain: bool
    is_strongly_distributive: bool


def structure_flags(G: Hyperring) -> StructureFlags:
    nonzero = G.full & ~1
    field_ = is_subset(nonzero, units(G))
    domain = all(
        not G.hyp[x][y] & 1
        for x in range(1, G.n) for y in range(1, G.n)
    )
    return StructureFlags(field_, domain, G.strongly_distributive)
