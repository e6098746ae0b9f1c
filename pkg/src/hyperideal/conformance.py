"""Executable theorem catalog plus structure generation for fuzzing.

Every check takes an :class:`Instance` and returns an :class:`Outcome`:
``skip`` names the first unmet hypothesis, ``fail`` carries a deterministic
counterexample description, ``pass`` means the conclusion held on every
sub-case the check enumerates.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement
from typing import Callable, Optional

from . import classify as cl
from . import core
from . import homs
from . import ideals as idl
from .core import Hyperring, fmt_set, is_subset, mask, members

CATALOG = (
    "T11", "T12", "P_PROD", "P_S1S2", "P_INT", "T_EQ3", "P13", "T14",
    "T_HOMO", "T_QUOT", "T_CART", "T21", "T23", "T24", "T_PURE", "T41",
    "T42", "T_HOMO2", "T_CART_SQ",
)


@dataclass(frozen=True)
class Instance:
    ring: Hyperring
    ideal: int
    mcs: int
    label: str = ""
    # (G1, A1, S1, G2, A2, S2) when ring = G1 × G2, ideal = A1 × A2, mcs = S1 × S2
    factors: Optional[tuple] = None
    hom: Optional[homs.GoodHom] = None


@dataclass(frozen=True)
class Outcome:
    status: str
    detail: str = ""

    def __str__(self):
        return self.status if not self.detail else f"{self.status}({self.detail})"


PASS = Outcome("pass")


def skip(hypothesis: str) -> Outcome:
    return Outcome("skip", hypothesis)


def fail(**payload) -> Outcome:
    parts = []
    for k in sorted(payload):
        v = payload[k]
        if isinstance(v, Mask):
            v = fmt_set(v)
        elif isinstance(v, bool):
            v = str(v).lower()
        parts.append(f"{k}={v}")
    return Outcome("fail", " ".join(parts))


class Mask(int):
    """Tag for payload values that should print as sets."""


# -- shared helpers ----------------------------------------------------------

def _quasi(G, A, S):
    return cl.class_result(G, A, S, "quasi").holds


def _strong(G, A, S):
    return cl.class_result(G, A, S, "strongly_quasi").holds


def _weak(G, A, S):
    return cl.class_result(G, A, S, "weakly_quasi").holds


def _s_prime(G, A, S):
    return cl.class_result(G, A, S, "s_prime").holds


def _s_primary(G, A, S):
    return cl.class_result(G, A, S, "s_primary").holds


def _rad(G, A):
    return idl.radical(G, A)


def _is_c(G, A):
    return idl.is_c_hyperideal(G, A)


def _c_ideals(G):
    return [A for A in idl.enumerate_hyperideals(G) if _is_c(G, A)]


def _base(inst: Instance):
    """Common hypothesis: A is a C-hyperideal disjoint from S."""
    G, A, S = inst.ring, inst.ideal, inst.mcs
    if not _is_c(G, A):
        return skip("A-not-c")
    if A & S:
        return skip("A-meets-S")
    return None


def _inside(G, t, X, target):
    return is_subset(G.elem_product(t, X), target)


def _r_condition(G, A, S) -> bool:
    """∃ r ∈ S: r∘a² ⊆ A implies r∘a ⊆ A for every a."""
    for r in members(S):
        if all(not _inside(G, r, G.hyp[a][a], A) or _inside(G, r, 1 << a, A)
               for a in range(G.n)):
            return True
    return False


def _quotient(G: Hyperring, B: int):
    try:
        return G._cache[("quot", B)]
    except KeyError:
        val = G._cache[("quot", B)] = core.quotient_ring(G, B)
        return val


# -- the checks --------------------------------------------------------------

def check_t11(inst):
    if (s := _base(inst)):
        return s
    G, A, S = inst.ring, inst.ideal, inst.mcs
    lhs = _quasi(G, A, S)
    rad = _rad(G, A)
    rhs = _s_prime(G, rad, S)
    if lhs != rhs:
        return fail(quasi=lhs, s_prime_rad=rhs, rad=Mask(rad))
    return PASS


def _t12_elements(G, A, S, rad, k):
    """(iii): ∃t ∀ u1..uk with u1∘..∘uk ⊆ A, some t∘uj ⊆ rad."""
    tuples = []
    for us in combinations_with_replacement(range(G.n), k):
        P = 1 << us[0]
        for u in us[1:]:
            P = core.subset_product(G, P, 1 << u)
        if is_subset(P, A):
            tuples.append(us)
    for t in members(S):
        good = [_inside(G, t, 1 << u, rad) for u in range(G.n)]
        if all(any(good[u] for u in us) for us in tuples):
            return True
    return False


def _t12_ideals(G, A, S, rad, k):
    """(ii): ∃t ∀ hyperideals A1..Ak with A1∘..∘Ak ⊆ A, some t∘Aj ⊆ rad."""
    Is = idl.enumerate_hyperideals(G)
    tuples = []
    for Bs in combinations_with_replacement(Is, k):
        P = Bs[0]
        for B in Bs[1:]:
            P = core.subset_product(G, P, B)
        if is_subset(P, A):
            tuples.append(Bs)
    for t in members(S):
        if all(any(_inside(G, t, B, rad) for B in Bs) for Bs in tuples):
            return True
    return False


def check_t12(inst):
    if (s := _base(inst)):
        return s
    G, A, S = inst.ring, inst.ideal, inst.mcs
    rad = _rad(G, A)
    q = _quasi(G, A, S)
    for k in (2, 3):
        ii = _t12_ideals(G, A, S, rad, k)
        iii = _t12_elements(G, A, S, rad, k)
        if not q == ii == iii:
            return fail(k=k, i=q, ii=ii, iii=iii)
    return PASS


def check_p_prod(inst):
    if (s := _base(inst)):
        return s
    G, A, S = inst.ring, inst.ideal, inst.mcs
    if not _quasi(G, A, S):
        return skip("A-not-quasi")
    Bs = [B for B in _c_ideals(G) if B & S]
    if not Bs:
        return skip("no-C-B-meeting-S")
    for B in Bs:
        BA = idl.ideal_product(G, B, A)
        if not _quasi(G, BA, S):
            return fail(B=Mask(B), product=Mask(BA))
        if not _quasi(G, A & B, S):
            return fail(B=Mask(B), intersection=Mask(A & B))
    return PASS


def check_p_s1s2(inst):
    if (s := _base(inst)):
        return s
    G, A, S2 = inst.ring, inst.ideal, inst.mcs
    q2 = _quasi(G, A, S2)
    sub = members(S2)
    for k in range(1, len(sub) + 1):
        for part in combinations(sub, k):
            S1 = mask(part)
            if not cl.is_mcs(G, S1):
                continue
            if not all(any(G.hyp[t][s] & S1 for s in part) for t in sub):
                continue
            q1 = _quasi(G, A, S1)
            if q1 != q2:
                return fail(S1=Mask(S1), quasi_S1=q1, quasi_S2=q2)
    return PASS


def check_p_int(inst):
    if (s := _base(inst)):
        return s
    G, A, S = inst.ring, inst.ideal, inst.mcs
    if not _quasi(G, A, S):
        return skip("A-not-quasi")
    rad = _rad(G, A)
    family = [B for B in _c_ideals(G) if _rad(G, B) == rad and _quasi(G, B, S)]
    inter = G.full
    for B in family:
        if not _quasi(G, A & B, S):
            return fail(B=Mask(B), intersection=Mask(A & B))
        inter &= B
    if not _quasi(G, inter, S):
        return fail(intersection=Mask(inter))
    return PASS


def check_t_eq3(inst):
    if (s := _base(inst)):
        return s
    G, A, S = inst.ring, inst.ideal, inst.mcs
    rc = _r_condition(G, A, S)
    i = _quasi(G, A, S) and rc
    ii = _s_prime(G, A, S)
    iii = _s_primary(G, A, S) and rc
    if not i == ii == iii:
        return fail(i=i, ii=ii, iii=iii, r_condition=rc)
    return PASS


def check_p13(inst):
    if (s := _base(inst)):
        return s
    G, A, S = inst.ring, inst.ideal, inst.mcs
    rad = _rad(G, A)
    lhs = _quasi(G, A, S)
    rhs = False
    for t in members(S):
        P = idl.colon(G, rad, 1 << t)
        if P != G.full and idl.is_hyperideal(G, P) and idl.is_prime(G, P):
            rhs = True
            break
    if lhs != rhs:
        return fail(quasi=lhs, colon_prime=rhs)
    return PASS


def _prime_corollary(G, A, S):
    """For ``S = {e}``: A prime ⟺ A quasi S-primary and ``a² ⊆ A ⇒ a ∈ A``."""
    prime = idl.is_prime(G, A)
    sq = all(A >> a & 1 or G.hyp[a][a] & ~A for a in range(G.n))
    q = _quasi(G, A, S)
    if prime != (q and sq):
        return fail(part="corollary", prime=prime, quasi=q, square_condition=sq)
    return None


def check_t14(inst):
    G, A, S = inst.ring, inst.ideal, inst.mcs
    tried = 0
    if S & (S - 1) == 0 and S & G.identities and A != G.full:
        tried += 1
        if (f := _prime_corollary(G, A, S)):
            return f
    pool = [B for B in _c_ideals(G) if _quasi(G, B, S)]
    for k in range(1, min(3, len(pool)) + 1):
        for covers in combinations(pool, k):
            union = 0
            for B in covers:
                union |= B
            if not is_subset(A, union):
                continue
            tried += 1
            if cl.avoidance_witness(G, A, list(covers), S) is None:
                return fail(covers="[" + ",".join(fmt_set(B) for B in covers) + "]")
    if not tried:
        return skip("no-quasi-C-cover")
    return PASS


def _homo_check(inst, pred):
    h = inst.hom
    if h is None:
        return skip("no-hom")
    G1, A1, S = inst.ring, inst.ideal, inst.mcs
    if h.image(S) & 1:
        return skip("zero-in-image")
    ES = homs.image_mcs(h, S)
    ran = False
    for A2 in _c_ideals(h.dst):
        if not pred(h.dst, A2, ES):
            continue
        ran = True
        pre = homs.preimage_ideal(h, A2)
        if not pred(G1, pre, S):
            return fail(part="i", A2=Mask(A2), preimage=Mask(pre))
    if _is_c(G1, A1) and pred(G1, A1, S) and h.surjective and is_subset(h.kernel, A1):
        ran = True
        img = homs.image_ideal(h, A1)
        if not pred(h.dst, img, ES):
            return fail(part="ii", image=Mask(img))
    if not ran:
        return skip("no-applicable-part")
    return PASS


def check_t_homo(inst):
    return _homo_check(inst, _quasi)


def check_t_homo2(inst):
    return _homo_check(inst, _strong)


def check_t_quot(inst):
    if (s := _base(inst)):
        return s
    G, A, S = inst.ring, inst.ideal, inst.mcs
    if not _quasi(G, A, S):
        return skip("A-not-quasi")
    for B in idl.enumerate_hyperideals(G):
        if not is_subset(B, A):
            continue
        Q, pi = _quotient(G, B)
        Abar, Sbar = pi.image(A), pi.image(S)
        if not _quasi(Q, Abar, Sbar):
            return fail(B=Mask(B), quotient_ideal=Mask(Abar), quotient_mcs=Mask(Sbar))
    return PASS


def _cart_check(inst, pred):
    if inst.factors is None:
        return skip("no-factors")
    G1, A1, S1, G2, A2, S2 = inst.factors
    if not (_is_c(G1, A1) and _is_c(G2, A2)):
        return skip("factor-not-c")
    lhs = pred(inst.ring, inst.ideal, inst.mcs)
    rhs = bool(S1 & A1 and pred(G2, A2, S2)) or bool(S2 & A2 and pred(G1, A1, S1))
    if lhs != rhs:
        return fail(product=lhs, components=rhs)
    return PASS


def check_t_cart(inst):
    return _cart_check(inst, _quasi)


def check_t_cart_sq(inst):
    return _cart_check(inst, _strong)


def _zero_c(inst):
    G = inst.ring
    Z = idl.zero_ideal(G)
    if not _is_c(G, Z):
        return Z, skip("zero-ideal-not-c")
    return Z, None


def check_t21(inst):
    if (s := _base(inst)):
        return s
    G, A, S = inst.ring, inst.ideal, inst.mcs
    if not _weak(G, A, S):
        return skip("A-not-weakly-quasi")
    Z, s = _zero_c(inst)
    if s:
        return s
    if not _quasi(G, Z, S):
        return skip("zero-ideal-not-quasi")
    rad = _rad(G, A)
    if not _s_prime(G, rad, S):
        return fail(rad=Mask(rad))
    return PASS


def _t23_ii(G, A, S, Z, rad):
    for t in members(S):
        rt = idl.colon(G, rad, 1 << t)
        ok = True
        for x in range(G.n):
            if rt >> x & 1:
                continue
            ax = idl.colon(G, A, 1 << x)
            if ax != idl.colon(G, Z, 1 << x) and not is_subset(ax, rt):
                ok = False
                break
        if ok:
            return True
    return False


def _t23_iii(G, A, S, Z, rad):
    Is = idl.enumerate_hyperideals(G)
    cases = []
    for B in Is:
        for x in range(G.n):
            P = G.elem_product(x, B)
            if is_subset(P, A) and not is_subset(P, Z):
                cases.append((x, B))
    for t in members(S):
        if all(_inside(G, t, 1 << x, rad) or _inside(G, t, B, rad) for x, B in cases):
            return True
    return False


def _t23_iv(G, A, S, Z, rad):
    Is = idl.enumerate_hyperideals(G)
    cases = []
    for B, D in combinations_with_replacement(Is, 2):
        P = core.subset_product(G, B, D)
        if is_subset(P, A) and not is_subset(P, Z):
            cases.append((B, D))
    for t in members(S):
        if all(_inside(G, t, B, rad) or _inside(G, t, D, rad) for B, D in cases):
            return True
    return False


def check_t23(inst):
    if (s := _base(inst)):
        return s
    G, A, S = inst.ring, inst.ideal, inst.mcs
    Z, s = _zero_c(inst)
    if s:
        return s
    rad = _rad(G, A)
    vals = (_weak(G, A, S), _t23_ii(G, A, S, Z, rad), _t23_iii(G, A, S, Z, rad),
            _t23_iv(G, A, S, Z, rad))
    if len(set(vals)) != 1:
        return fail(i=vals[0], ii=vals[1], iii=vals[2], iv=vals[3])
    return PASS


def check_t24(inst):
    if (s := _base(inst)):
        return s
    G, A, S = inst.ring, inst.ideal, inst.mcs
    Z, s = _zero_c(inst)
    if s:
        return s
    if not _weak(G, A, S):
        return skip("A-not-weakly-quasi")
    q = _quasi(G, A, S)
    sq = idl.ideal_product(G, A, A)
    if sq != Z and not q:
        return fail(part="i", square=Mask(sq))
    if not q and _rad(G, A) != _rad(G, Z):
        return fail(part="ii", rad=Mask(_rad(G, A)), rad_zero=Mask(_rad(G, Z)))
    return PASS


def check_t_pure(inst):
    G, A, S = inst.ring, inst.ideal, inst.mcs
    Z, s = _zero_c(inst)
    if s:
        return s
    if A & S:
        return skip("A-meets-S")
    if not _weak(G, A, S) or _quasi(G, A, S):
        return skip("A-not-weak-nonquasi")
    if not idl.is_pure(G, A):
        return skip("A-not-pure")
    if A != Z:
        return fail(A=Mask(A), zero=Mask(Z))
    return PASS


def check_t41(inst):
    if (s := _base(inst)):
        return s
    G, A, S = inst.ring, inst.ideal, inst.mcs
    rad = _rad(G, A)
    rad2 = core.subset_product(G, rad, rad)
    if not any(_inside(G, t, rad2, A) for t in members(S)):
        return skip("no-t-with-t-rad2-in-A")
    sq, q = _strong(G, A, S), _quasi(G, A, S)
    if sq != q:
        return fail(strongly=sq, quasi=q)
    return PASS


def _square_union(G, X):
    out = 0
    for b in members(X):
        out |= G.hyp[b][b]
    return out


def _t42_iii(G, A, S, rad):
    for t in members(S):
        At = idl.colon(G, A, 1 << t)
        rt = idl.colon(G, rad, 1 << t)
        if all(is_subset(G.hyp[u][u], At) or is_subset(idl.colon(G, A, 1 << u), rt)
               for u in range(G.n)):
            return True
    return False


def _t42_iv(G, A, S, rad):
    Is = idl.enumerate_hyperideals(G)
    cases = [(B, C) for B in Is for C in Is if is_subset(core.subset_product(G, B, C), A)]
    for t in members(S):
        if all(_inside(G, t, _square_union(G, B), A) or _inside(G, t, C, rad) for B, C in cases):
            return True
    return False


def _t42_v(G, A, S, rad):
    for t in members(S):
        At = idl.colon(G, A, 1 << t)
        ok = True
        for u in range(G.n):
            if any(is_subset(p, At) for p in core.power_sequence(G, 1 << u)):
                continue
            if is_subset(_square_union(G, idl.colon(G, A, 1 << u)), At):
                continue
            ok = False
            break
        if ok:
            return True
    return False


def check_t42(inst):
    if (s := _base(inst)):
        return s
    G, A, S = inst.ring, inst.ideal, inst.mcs
    rad = _rad(G, A)
    sat = cl.saturate(G, S)
    vals = (_strong(G, A, S), _strong(G, A, sat), _t42_iii(G, A, S, rad),
            _t42_iv(G, A, S, rad), _t42_v(G, A, S, rad))
    if len(set(vals)) != 1:
        return fail(i=vals[0], ii=vals[1], iii=vals[2], iv=vals[3], v=vals[4],
                    saturation=Mask(sat))
    return PASS


CHECKS: dict[str, Callable[[Instance], Outcome]] = {
    "T11": check_t11,
    "T12": check_t12,
    "P_PROD": check_p_prod,
    "P_S1S2": check_p_s1s2,
    "P_INT": check_p_int,
    "T_EQ3": check_t_eq3,
    "P13": check_p13,
    "T14": check_t14,
    "T_HOMO": check_t_homo,
    "T_QUOT": check_t_quot,
    "T_CART": check_t_cart,
    "T21": check_t21,
    "T23": check_t23,
    "T24": check_t24,
    "T_PURE": check_t_pure,
    "T41": check_t41,
    "T42": check_t42,
    "T_HOMO2": check_t_homo2,
    "T_CART_SQ": check_t_cart_sq,
}
assert tuple(CHECKS) == CATALOG


def run_check(check_id: str, inst: Instance) -> Outcome:
    """Run one catalog check; an exception inside the engine counts as a Fail."""
    try:
        fn = CHECKS[check_id]
    except KeyError:
        raise ValueError(f"unknown check id {check_id!r}") from None
    try:
        return fn(inst)
    except cl.Skip as e:
        return skip(e.hypothesis)
    except Exception as e:  # noqa: BLE001 - reported, never swallowed
        return fail(error=f"{type(e).__name__}:{str(e).replace(' ', '_')}")


# -- structure generation ----------------------------------------------------

@dataclass(frozen=True)
class Limits:
    max_n: int = 8            # Z_phi carriers and random tables
    max_phi: int = 3
    max_product: int = 36     # n1·n2 for product rings
    max_mcs: int = 4          # MCS size bound
    pairs_per_ring: Optional[int] = 40   # (A, S) pairs sampled per structure; None = all
    capacity: int = core.DEFAULT_CAPACITY

    def __post_init__(self):
        if max(self.max_n, self.max_product) > self.capacity:
            raise ValueError("limits exceed the carrier capacity")


SOURCES = ("zphi", "product", "quotient", "random")


def _pairs(G: Hyperring, limits: Limits):
    return [(A, S) for A in idl.enumerate_hyperideals(G) if A != G.full
            for S in cl.enumerate_mcs(G, limits.max_mcs)]


def _sample(rng: random.Random, items: list, k: Optional[int]) -> list:
    if k is None or len(items) <= k:
        return items
    picked = sorted(rng.sample(range(len(items)), k))
    return [items[i] for i in picked]


def _zphi_pool(limits: Limits) -> list:
    from . import structures as st

    out, seen = [], set()
    for G in st.paper_rings() + st.zphi_rings(limits.max_n, limits.max_phi):
        if G.key() not in seen:
            seen.add(G.key())
            out.append(G)
    return out


def _product_instances(L, R, *, rng=None, k=None, side=0, label=""):
    P = core.direct_product(L, R)
    pi = homs.projection_hom(L, R, P, side)
    cases = [(A1, S1, A2, S2)
             for A1 in _c_ideals(L) for A2 in _c_ideals(R)
             for S1 in cl.enumerate_mcs(L) for S2 in cl.enumerate_mcs(R)]
    if rng is not None:
        cases = _sample(rng, cases, k)
    out = []
    for A1, S1, A2, S2 in cases:
        A = core.product_mask(L, R, A1, A2)
        S = core.product_mask(L, R, S1, S2)
        out.append(Instance(P, A, S, f"{label}A={fmt_set(A)}:S={fmt_set(S)}",
                            (L, A1, S1, R, A2, S2), pi))
    return out


def _quotient_instances(G, B, pairs, label):
    _, pi = _quotient(G, B)
    return [Instance(G, A, S, f"{label}A={fmt_set(A)}:S={fmt_set(S)}", hom=pi) for A, S in pairs]


def generate_structures(seed: int, count: int, limits: Limits = Limits(),
                        stats: Optional[dict] = None) -> list[Instance]:
    """Deterministic instance stream of ``count`` structures.

    Sources are visited round-robin: Z_phi rings (reference examples first, then
    every valid Z_phi in order), products of two small rings with their
    projection, quotient projections ``G -> G/B``, and random tables. Each
    structure contributes up to ``limits.pairs_per_ring`` (A, S) pairs.
    """
    from . import structures as st

    stats = stats if stats is not None else {}
    rngs = {src: random.Random(f"{seed}:{src}") for src in SOURCES}
    zpool = _zphi_pool(limits)
    small = st.zphi_rings(limits.max_n, limits.max_phi, up_to_iso=True)
    prod_pairs = [(a, b) for i, a in enumerate(small) for b in small[i:]
                  if a.n * b.n <= limits.max_product and a.n > 1 and b.n > 1]
    out: list[Instance] = []
    for idx in range(count):
        src = SOURCES[idx % len(SOURCES)]
        rng = rngs[src]
        stats[src] = stats.get(src, 0) + 1
        tag = f"{idx}:{src}:"
        if src == "zphi":
            G = zpool[(idx // len(SOURCES)) % len(zpool)]
            out += [Instance(G, A, S, f"{tag}{G.name}:A={fmt_set(A)}:S={fmt_set(S)}")
                    for A, S in _sample(rng, _pairs(G, limits), limits.pairs_per_ring)]
        elif src == "product":
            L, R = rng.choice(prod_pairs)
            out += _product_instances(L, R, rng=rng, k=limits.pairs_per_ring,
                                      side=rng.randrange(2), label=f"{tag}{L.name}x{R.name}:")
        elif src == "quotient":
            G = rng.choice(zpool)
            Bs = [B for B in idl.enumerate_hyperideals(G) if B not in (1, G.full)] or [1]
            B = rng.choice(Bs)
            pairs = _sample(rng, _pairs(G, limits), limits.pairs_per_ring)
            out += _quotient_instances(G, B, pairs, f"{tag}{G.name}/{fmt_set(B)}:")
        else:
            G = st.random_structure(rng, stats, limits.max_n)
            out += [Instance(G, A, S, f"{tag}{G.name}:A={fmt_set(A)}:S={fmt_set(S)}")
                    for A, S in _sample(rng, _pairs(G, limits), limits.pairs_per_ring)]
    return out


def builtin_corpus(limits: Limits = Limits(max_product=16, pairs_per_ring=None)) -> list[Instance]:
    """Exhaustive corpus: every Z_phi pair, small products, and quotient projections."""
    from . import structures as st

    out = []
    zpool = _zphi_pool(limits)
    for G in zpool:
        out += [Instance(G, A, S, f"{G.name}:A={fmt_set(A)}:S={fmt_set(S)}")
                for A, S in _pairs(G, limits)]
    small = st.zphi_rings(limits.max_n, limits.max_phi, up_to_iso=True)
    for i, L in enumerate(small):
        for R in small[i:]:
            if 1 < L.n and 1 < R.n and L.n * R.n <= limits.max_product:
                out += _product_instances(L, R, label=f"{L.name}x{R.name}:")
    for G in zpool:
        if G.n > 6:
            continue
        pairs = _pairs(G, limits)
        for B in idl.enumerate_hyperideals(G):
            if B not in (1, G.full):
                out += _quotient_instances(G, B, pairs, f"{G.name}/{fmt_set(B)}:")
    return out


def mutation_corpus() -> list[Instance]:
    """Smaller exhaustive corpus used to show that each engine mutation is caught."""
    return builtin_corpus(Limits(max_n=6, max_product=12, pairs_per_ring=None))


# -- running -----------------------------------------------------------------

@dataclass
class Summary:
    checks: tuple
    total: int
    completed: int = 0
    counts: dict = field(default_factory=dict)      # id -> {"pass","fail","skip"} counts
    skip_reasons: dict = field(default_factory=dict)  # (id, reason) -> count
    failures: list = field(default_factory=list)    # (id, instance index, label, detail)
    dumps: list = field(default_factory=list)       # paths written
    budget_exhausted: bool = False

    @property
    def n_fail(self) -> int:
        return sum(c["fail"] for c in self.counts.values())

    def lines(self) -> list[str]:
        out = [f"instances={self.total} completed={self.completed} "
               f"budget_exhausted={str(self.budget_exhausted).lower()}"]
        for cid in self.checks:
            c = self.counts[cid]
            out.append(f"check={cid} pass={c['pass']} fail={c['fail']} skip={c['skip']}")
        for (cid, reason), k in sorted(self.skip_reasons.items(),
                                       key=lambda kv: (self.checks.index(kv[0][0]), kv[0][1])):
            out.append(f"skip check={cid} hypothesis={reason} count={k}")
        for cid, i, label, detail in self.failures:
            out.append(f"fail check={cid} instance={i} label={label} {detail}")
        tot = {k: sum(c[k] for c in self.counts.values()) for k in ("pass", "fail", "skip")}
        out.append(f"total pass={tot['pass']} fail={tot['fail']} skip={tot['skip']}")
        return out

    def text(self) -> str:
        return "\n".join(self.lines()) + "\n"


def _run_chunk(args):
    chunk, checks, deadline = args
    res = []
    for inst in chunk:
        if deadline is not None and time.monotonic() > deadline:
            break
        res.append([run_check(cid, inst) for cid in checks])
    return res


def _worker_init(mutant):
    if mutant:
        from . import mutants
        mutants.activate(mutant)


def _chunks(instances, size):
    # keep instances of one ring together so per-ring caches are reused
    out, cur = [], []
    for inst in instances:
        if cur and (len(cur) >= size or inst.ring is not cur[-1].ring):
            out.append(cur)
            cur = []
        cur.append(inst)
    if cur:
        out.append(cur)
    return out


def run_all(instances, *, checks=CATALOG, budget: Optional[float] = None, workers: int = 1,
            dump_dir=None, chunk_size: int = 64) -> Summary:
    """Run every check on every instance and merge results in instance order.

    ``budget`` (seconds) stops scheduling new instances once exceeded; the
    summary then says so. Failures are dumped as replayable workspace files
    when ``dump_dir`` is given.
    """
    checks = tuple(checks)
    for cid in checks:
        if cid not in CHECKS:
            raise ValueError(f"unknown check id {cid!r}")
    instances = list(instances)
    summary = Summary(checks, len(instances),
                      counts={cid: {"pass": 0, "fail": 0, "skip": 0} for cid in checks})
    deadline = None if budget is None else time.monotonic() + budget
    chunks = _chunks(instances, chunk_size)
    if workers > 1 and len(chunks) > 1:
        from . import mutants
        with ProcessPoolExecutor(workers, initializer=_worker_init,
                                 initargs=(mutants.active(),)) as ex:
            results = list(ex.map(_run_chunk, [(c, checks, deadline) for c in chunks]))
    else:
        results = [_run_chunk((c, checks, deadline)) for c in chunks]
    idx = 0
    for chunk, res in zip(chunks, results):
        for inst, outcomes in zip(chunk, res):
            summary.completed += 1
            for cid, o in zip(checks, outcomes):
                summary.counts[cid][o.status] += 1
                if o.status == "skip":
                    key = (cid, o.detail)
                    summary.skip_reasons[key] = summary.skip_reasons.get(key, 0) + 1
                elif o.status == "fail":
                    summary.failures.append((cid, idx, inst.label, o.detail))
                    if dump_dir is not None:
                        summary.dumps.append(_dump(dump_dir, cid, idx, inst, o))
            idx += 1
        idx += len(chunk) - len(res)
    summary.budget_exhausted = summary.completed < summary.total
    return summary


def _dump(dump_dir, cid, idx, inst, outcome) -> str:
    import os
    from .workspace import instance_text

    os.makedirs(dump_dir, exist_ok=True)
    path = os.path.join(dump_dir, f"fail-{cid}-{idx}.hyp")
    header = f"check={cid} instance={idx} label={inst.label}\n{outcome}"
    with open(path, "w") as fh:
        fh.write(instance_text(inst, header))
    return path
