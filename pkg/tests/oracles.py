"""Independent slow implementations used as test oracles.

Everything here works on Python sets straight from the definitions and
shares no code with the package beyond reading a ring's tables.
"""

from itertools import chain, combinations, product


def elems(m):
    return {i for i in range(m.bit_length()) if m >> i & 1}


def to_mask(s):
    out = 0
    for e in s:
        out |= 1 << e
    return out


def table(G):
    """Hyperoperation as a dict of frozensets."""
    return {(x, y): frozenset(elems(G.hyp[x][y])) for x in range(G.n) for y in range(G.n)}


def set_prod(T, A, B):
    return frozenset(chain.from_iterable(T[a, b] for a in A for b in B))


# -- axioms ------------------------------------------------------------------

def naive_axiom(add, hyp):
    """First violated axiom id for raw tables (hyp entries are sets), or None.

    Order: range, I, nonempty, V, III, II, IV, no-identity.
    """
    n = len(add)
    G = range(n)
    if any(len(r) != n for r in add) or len(hyp) != n or any(len(r) != n for r in hyp):
        return "range"
    if any(not 0 <= add[x][y] < n for x in G for y in G):
        return "range"
    if any(not set(hyp[x][y]) <= set(G) for x in G for y in G):
        return "range"
    plus = lambda x, y: add[x][y]
    if any(plus(0, x) != x or plus(x, 0) != x for x in G):
        return "I"
    if any(plus(x, y) != plus(y, x) for x in G for y in G):
        return "I"
    if any(all(plus(x, y) != 0 for y in G) for x in G):
        return "I"
    if any(plus(plus(x, y), z) != plus(x, plus(y, z)) for x, y, z in product(G, repeat=3)):
        return "I"
    if any(not hyp[x][y] for x in G for y in G):
        return "nonempty"
    if any(set(hyp[x][y]) != set(hyp[y][x]) for x in G for y in G):
        return "V"
    neg = {x: next(y for y in G if plus(x, y) == 0) for x in G}
    if any(set(hyp[neg[x]][y]) != {neg[z] for z in hyp[x][y]} for x in G for y in G):
        return "III"
    T = {(x, y): frozenset(hyp[x][y]) for x in G for y in G}
    for x, y, z in product(G, repeat=3):
        if set_prod(T, T[x, y], {z}) != set_prod(T, {x}, T[y, z]):
            return "II"
    for x, y, z in product(G, repeat=3):
        rhs = {plus(a, b) for a in T[y, x] for b in T[z, x]}
        if not T[plus(y, z), x] <= rhs:
            return "IV"
    if not any(all(a in T[e, a] for a in G) for e in G):
        return "no-identity"
    return None


# -- hyperideals -------------------------------------------------------------

def naive_is_hyperideal(G, S):
    S = set(S)
    if not S:
        return False
    neg = {x: next(y for y in range(G.n) if G.add[x][y] == 0) for x in range(G.n)}
    T = table(G)
    return (all(G.add[a][neg[b]] in S for a in S for b in S)
            and all(T[r, a] <= S for a in S for r in range(G.n)))


def all_subsets(n):
    return chain.from_iterable(combinations(range(n), k) for k in range(1, n + 1))


def brute_hyperideals(G):
    return sorted((to_mask(s) for s in all_subsets(G.n) if naive_is_hyperideal(G, s)),
                  key=lambda m: (bin(m).count("1"), m))


def naive_products(G):
    """Every set x1∘x2∘...∘xk with k >= 2, by breadth-first extension."""
    T = table(G)
    layer = {T[x, y] for x in range(G.n) for y in range(G.n)}
    seen = set(layer)
    while layer:
        nxt = set()
        for P in layer:
            for z in range(G.n):
                Q = set_prod(T, P, {z})
                if Q not in seen:
                    seen.add(Q)
                    nxt.add(Q)
        layer = nxt
    return seen


def naive_is_c(G, A):
    A = set(elems(A))
    return all(P <= A for P in naive_products(G) if P & A)


def naive_primes(G):
    T = table(G)
    out = []
    for m in brute_hyperideals(G):
        P = elems(m)
        if len(P) == G.n:
            continue
        if all(x in P or y in P for x in range(G.n) for y in range(G.n) if T[x, y] <= P):
            out.append(m)
    return out


def naive_radical(G, A):
    out = set(range(G.n))
    for P in naive_primes(G):
        if elems(A) <= elems(P):
            out &= elems(P)
    return to_mask(out)


# -- classes -----------------------------------------------------------------

def naive_class(G, A, S, kind):
    """Decide a class straight from its definition."""
    A_, S_ = elems(A), elems(S)
    if A_ & S_:
        return False
    T = table(G)
    rad = elems(naive_radical(G, A))
    n = range(G.n)

    def ok(t, u, v):
        tu, tv = T[t, u], T[t, v]
        if kind == "s_prime":
            return tu <= A_ or tv <= A_
        if kind == "s_primary":
            return tu <= A_ or tv <= rad
        if kind in ("quasi", "weakly_quasi"):
            return tu <= rad or tv <= rad
        if kind == "strongly_quasi":
            return set_prod(T, {t}, T[u, u]) <= A_ or tv <= rad
        raise ValueError(kind)

    def hyp(u, v):
        if not T[u, v] <= A_:
            return False
        return kind != "weakly_quasi" or 0 not in T[u, v]

    return any(all(ok(t, u, v) for u in n for v in n if hyp(u, v)) for t in sorted(S_))


def naive_is_mcs(G, S):
    T = table(G)
    S_ = elems(S)
    has_identity = any(all(a in T[e, a] for a in range(G.n)) for e in S_)
    return has_identity and all(T[a, b] & S_ for a in S_ for b in S_)
