"""Concrete hyperrings: reference examples, Z_phi families and random tables."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, product
from math import gcd

from .core import (
    AxiomViolation,
    Hyperring,
    build_zphi,
    fmt_set,
    mask,
    members,
    validate,
)

# the 4-element example printed with its full tables
MADAR_ADD = [[(x + y) % 4 for y in range(4)] for x in range(4)]
MADAR_HYP = [
    [{0}, {0}, {0}, {0}],
    [{0}, {1, 3}, {2}, {1, 3}],
    [{0}, {2}, {0}, {2}],
    [{0}, {1, 3}, {2}, {1, 3}],
]


def madar() -> Hyperring:
    return validate(MADAR_ADD, MADAR_HYP, name="madar")


def weak_ring() -> Hyperring:
    return build_zphi(6, [1, 2, 3, 4, 5], name="weak")


def haji() -> Hyperring:
    return build_zphi(5, [1, 2, 3], name="haji")


def paper_rings() -> list[Hyperring]:
    return [madar(), weak_ring(), haji()]


def _canonical_phi(n, phi):
    units = [c for c in range(1, n) if gcd(c, n) == 1] or [1]
    return min(tuple(sorted({c * a % n for a in phi})) for c in units)


def zphi_rings(max_n: int = 8, max_phi: int = 3, *, up_to_iso: bool = False) -> list[Hyperring]:
    """Every Z_phi(n, phi) with n <= max_n, |phi| <= max_phi that validates.

    Rings with identical tables are listed once. With ``up_to_iso`` the
    family is further reduced by the isomorphism ``x -> c·x`` (c a unit),
    which carries Z_phi onto Z_{c⁻¹·phi}.
    """
    out = {}
    seen_iso = set()
    for n in range(1, max_n + 1):
        for k in range(1, max_phi + 1):
            for phi in combinations(range(n), k):
                if up_to_iso:
                    key = (n, _canonical_phi(n, phi))
                    if key in seen_iso:
                        continue
                try:
                    G = build_zphi(n, phi)
                except AxiomViolation:
                    continue
                if up_to_iso:
                    seen_iso.add(key)
                out.setdefault(G.key(), G)
    return list(out.values())


# -- small commutative rings used as seeds for random structures -----------

@dataclass(frozen=True)
class CyclicProduct:
    """The ring Z_{m1} × ... × Z_{mk} with elements in mixed-radix order."""

    moduli: tuple[int, ...]

    @property
    def n(self) -> int:
        out = 1
        for m in self.moduli:
            out *= m
        return out

    def coords(self, x):
        out = []
        for m in reversed(self.moduli):
            x, r = divmod(x, m)
            out.append(r)
        return tuple(reversed(out))

    def index(self, cs):
        x = 0
        for c, m in zip(cs, self.moduli):
            x = x * m + c % m
        return x

    @property
    def one(self) -> int:
        return self.index(1 for _ in self.moduli)

    def add(self, x, y):
        return self.index(a + b for a, b in zip(self.coords(x), self.coords(y)))

    def mul(self, x, y):
        return self.index(a * b for a, b in zip(self.coords(x), self.coords(y)))

    def ideals(self) -> list[int]:
        """Ring ideals (additive subgroups closed under multiplication)."""
        per = []
        for m in self.moduli:
            per.append([d for d in range(1, m + 1) if m % d == 0])
        out = []
        for ds in product(*per):
            # product of the principal ideals d_i Z_{m_i}
            out.append(mask(x for x in range(self.n)
                            if all(c % d == 0 for c, d in zip(self.coords(x), ds))))
        return sorted(set(out))


SEED_RINGS = [CyclicProduct(m) for m in
              [(2,), (3,), (4,), (5,), (6,), (7,), (8,), (2, 2), (2, 3), (2, 4), (3, 3), (2, 2, 2)]]


def twisted_ring(base: CyclicProduct, phi, ideal: int = 1, name: str = "") -> Hyperring:
    """``x ∘ y = {x·a·y : a ∈ phi} + I`` on a commutative ring.

    ``ideal = 1`` (just ``{0}``) gives the plain phi-twist; ``phi = [base.one]``
    gives the coset hyperring ``x ∘ y = xy + I``.
    """
    n = base.n
    add = [[base.add(x, y) for y in range(n)] for x in range(n)]
    I = members(ideal)
    hyp = []
    for x in range(n):
        row = []
        for y in range(n):
            row.append(mask(base.add(base.mul(base.mul(x, a), y), i) for a in phi for i in I))
        hyp.append(row)
    return validate(add, hyp, name=name or ("tw" + "x".join(map(str, base.moduli)) + "[" + ",".join(map(str, sorted(phi)))
                                    + "]+" + fmt_set(ideal)))


def random_structure(rng: random.Random, stats: dict | None = None, max_n: int = 8):
    """Draw random hyperoperation tables until one validates; return it.

    Discarded attempts are tallied in ``stats["discarded"]``.
    """
    stats = stats if stats is not None else {}
    seeds = [b for b in SEED_RINGS if b.n <= max_n]
    while True:
        base = rng.choice(seeds)
        n = base.n
        kind = rng.choice(("twist", "coset", "mixed", "raw"))
        stats["attempts"] = stats.get("attempts", 0) + 1
        try:
            if kind == "raw":
                G = _raw_table(rng, base)
            else:
                phi = [base.one] if kind == "coset" else rng.sample(range(n), rng.randint(1, min(3, n)))
                I = 1 if kind == "twist" else rng.choice(base.ideals())
                G = twisted_ring(base, phi, I)
        except AxiomViolation:
            stats["discarded"] = stats.get("discarded", 0) + 1
            continue
        object.__setattr__(G, "name", f"rand-{kind}-{stats['attempts']}")
        return G


def _raw_table(rng, base):
    n = base.n
    add = [[base.add(x, y) for y in range(n)] for x in range(n)]
    hyp = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(x, n):
            m = 0
            while not m:
                m = rng.getrandbits(n)
            hyp[x][y] = hyp[y][x] = m
    return validate(add, hyp)
