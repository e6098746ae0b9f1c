"""Command-line entry point.

Exit codes: 0 success, 1 usage error, 2 input fails to load or validate,
3 at least one conformance Fail.
"""

from __future__ import annotations

import argparse
import sys
from importlib import resources

from . import classify as cl
from . import conformance as cf
from . import core
from . import ideals as idl
from . import structures as st
from .core import fmt_set
from .workspace import WorkspaceError, load_workspace, parse_workspace, workspace_instances

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_FAIL = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error code=E_USAGE {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _b(x) -> str:
    return "-" if x is None else str(bool(x)).lower()


RECORD_KEYS = {"ring", "ideal", "mcs", "hom", "instance", "check", "class", "example", "analogue"}


def machine_lines(lines: list[str]) -> list[str]:
    """Rewrite ``key=value`` report lines as one ``path=value`` fact per line.

    A line whose first key names an object (ring, ideal, check, ...) is a
    record: its other tokens become ``key.name.field=value``. Any other line
    is a bag of top-level facts. A leading bare word prefixes every path.
    """
    out = []
    for line in lines:
        toks = line.split(" ")
        kind = None
        if "=" not in toks[0]:
            kind, toks = toks[0], toks[1:]
        k, v = toks[0].split("=", 1)
        if k in RECORD_KEYS and len(toks) > 1:
            # skip and fail lines repeat per check, so the second token is part of the name
            width = 2 if kind in ("skip", "fail") else 1
            base = [kind] + [p for t in toks[:width] for p in t.split("=", 1)]
            toks = toks[width:]
        else:
            base = [kind]
        prefix = ".".join(p for p in base if p)
        for tok in toks:
            key, val = tok.split("=", 1)
            out.append(f"{prefix}.{key}={val}" if prefix else f"{key}={val}")
    return out


def _emit(lines: list[str], machine: bool) -> None:
    sys.stdout.write("\n".join(machine_lines(lines) if machine else lines) + "\n")


def _load(path, capacity):
    try:
        return load_workspace(path, capacity=capacity)
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None


def _lookup(table, name, what):
    if name not in table:
        raise WorkspaceError("E_REF", 0, 0, f"unknown {what} {name!r}")
    return table[name]


# -- commands --------------------------------------------------------------

def cmd_validate(args) -> int:
    ws = _load(args.file, args.capacity)
    lines = []
    for name, (_, G) in ws.rings.items():
        f = core.structure_flags(G)
        lines.append(f"ring={name} n={G.n} identities={fmt_set(G.identities)} "
                     f"strongly_distributive={_b(f.is_strongly_distributive)} "
                     f"hyperfield={_b(f.is_hyperfield)} hyperdomain={_b(f.is_hyperdomain)}")
    for name, (r, m) in ws.ideals.items():
        lines.append(f"ideal={name} ring={r} elements={fmt_set(m)}")
    for name, (r, m) in ws.mcs.items():
        lines.append(f"mcs={name} ring={r} elements={fmt_set(m)}")
    for name, (s, d, h) in ws.homs.items():
        lines.append(f"hom={name} src={s} dst={d} surjective={_b(h.surjective)} "
                     f"kernel={fmt_set(h.kernel)}")
    for name in ws.instances:
        lines.append(f"instance={name}")
    lines.append("status=ok")
    _emit(lines, args.machine)
    return EXIT_OK


def cmd_classify(args) -> int:
    ws = _load(args.file, args.capacity)
    ra, A = _lookup(ws.ideals, args.ideal, "ideal")
    rs, S = _lookup(ws.mcs, args.mcs, "mcs")
    if ra != rs:
        raise WorkspaceError("E_REF", 0, 0, f"ideal {args.ideal} lives in {ra}, mcs {args.mcs} in {rs}")
    rep = cl.classify(ws.ring(ra), A, S)
    lines = [f"ring={ra} ideal={fmt_set(A)} mcs={fmt_set(S)}"] + rep.lines()
    _emit(lines, args.machine)
    return EXIT_OK


def cmd_radical(args) -> int:
    ws = _load(args.file, args.capacity)
    r, A = _lookup(ws.ideals, args.ideal, "ideal")
    G = ws.ring(r)
    primes, powers = idl.radical(G, A, "primes"), idl.radical(G, A, "powers")
    _emit([f"ring={r} ideal={fmt_set(A)}",
           f"radical_primes={fmt_set(primes)}",
           f"radical_powers={fmt_set(powers)}",
           f"modes_agree={_b(primes == powers)}",
           f"c_hyperideal={_b(idl.is_c_hyperideal(G, A))}"], args.machine)
    return EXIT_OK


def cmd_ideals(args) -> int:
    ws = _load(args.file, args.capacity)
    _, G = _lookup(ws.rings, args.ring, "ring")
    lines = []
    for A in idl.enumerate_hyperideals(G):
        proper = A != G.full
        h = idl.Hyperideal(G, A)
        lines.append(
            f"ideal={fmt_set(A)} size={core.popcount(A)} "
            f"prime={_b(h.is_prime) if proper else '-'} "
            f"primary={_b(h.is_primary) if proper else '-'} "
            f"maximal={_b(h.is_maximal) if proper else '-'} "
            f"c={_b(h.is_c)} strong_c={_b(h.is_strong_c)} pure={_b(h.is_pure)} "
            f"radical={fmt_set(h.radical)}")
    lines.append(f"jacobson={fmt_set(idl.jacobson(G))} local={_b(idl.is_local(G))} "
                 f"count={len(idl.enumerate_hyperideals(G))}")
    _emit(lines, args.machine)
    return EXIT_OK


def cmd_conformance(args) -> int:
    if not args.mutant:
        return _conformance(args)
    from . import mutants
    if args.mutant not in mutants.MUTANTS:
        raise UsageError(f"unknown mutant {args.mutant}")
    with mutants.applied(args.mutant):
        return _conformance(args)


def _conformance(args) -> int:
    checks = tuple(args.check) if args.check else cf.CATALOG
    bad = [c for c in checks if c not in cf.CHECKS]
    if bad:
        raise UsageError(f"unknown check id {bad[0]}")
    head = []
    if args.file:
        insts = workspace_instances(_load(args.file, args.capacity))
        head.append(f"source=file path={args.file}")
    elif args.seed is not None:
        if args.count is None:
            raise UsageError("--seed needs --count")
        limits = cf.Limits(max_n=args.max_n, max_product=args.max_product,
                           pairs_per_ring=args.pairs_per_ring, capacity=args.capacity)
        stats = {}
        insts = cf.generate_structures(args.seed, args.count, limits, stats)
        head.append(f"source=generated seed={args.seed} count={args.count} max_n={args.max_n}")
        head.append(" ".join(f"{k}={stats.get(k, 0)}" for k in
                             ("zphi", "product", "quotient", "random", "attempts", "discarded")))
    else:
        limits = cf.Limits(max_n=args.max_n, max_product=min(args.max_product, 16),
                           pairs_per_ring=None, capacity=args.capacity)
        insts = cf.builtin_corpus(limits)
        head.append(f"source=builtin max_n={args.max_n}")
    summary = cf.run_all(insts, checks=checks, budget=args.budget, workers=args.workers,
                         dump_dir=args.dump_dir)
    _emit(head + summary.lines(), args.machine)
    if summary.budget_exhausted:
        print(f"warning: budget exhausted after {summary.completed} of {summary.total} instances",
              file=sys.stderr)
    for path in summary.dumps:
        print(f"dumped {path}", file=sys.stderr)
    return EXIT_FAIL if summary.n_fail else EXIT_OK


# -- reference examples ----------------------------------------------------------

PAPER_ROWS = [
    # (example, ring, ideal, mcs, property, expected)
    ("madar", "madar", "madar_A", "madar_S", "quasi", True),
    ("weak", "weak", "weak_zero", "weak_S", "weakly_quasi", True),
    ("weak", "weak", "weak_zero", "weak_S", "quasi", False),
    ("weak", "weak", "weak_zero", "weak_S", "strongly_quasi", False),
    ("strongly-quasi", "weak", "weak_A1", "weak_S", "strongly_quasi", True),
    ("strongly-quasi", "weak", "weak_A2", "weak_S", "strongly_quasi", True),
    ("haji", "haji", "haji_zero", "haji_S", "strongly_quasi", True),
    ("haji", "haji", "haji_zero", "haji_S", "quasi", True),
    ("haji", "haji", "haji_zero", "haji_S", "weakly_quasi", True),
]


def paper_workspace():
    text = resources.files("hyperideal").joinpath("data/paper_examples.hyp").read_text()
    return parse_workspace(text)


def _primary_gap():
    """First Z_phi instance that is quasi S-primary but not primary."""
    for n in range(2, 9):
        for G in st.zphi_rings(n, 3):
            if G.n != n:
                continue
            for A in idl.enumerate_hyperideals(G):
                if A == G.full:
                    continue
                for S in cl.enumerate_mcs(G, 2):
                    r = cl.class_result(G, A, S, "quasi")
                    if r.holds and not idl.is_primary(G, A):
                        return G, A, S, r.witness
    return None


def _cart_gap():
    """Smallest product of disjoint quasi components whose product is not quasi."""
    rings = [G for G in st.zphi_rings(4, 2, up_to_iso=True) if G.n > 1]
    for L in rings:
        for R in rings:
            if L.n > R.n:
                continue
            for A1 in idl.enumerate_hyperideals(L):
                for S1 in cl.enumerate_mcs(L, 1):
                    if A1 & S1 or not cl.is_quasi(L, A1, S1) or not idl.is_c_hyperideal(L, A1):
                        continue
                    for A2 in idl.enumerate_hyperideals(R):
                        for S2 in cl.enumerate_mcs(R, 1):
                            if A2 & S2 or not cl.is_quasi(R, A2, S2) or not idl.is_c_hyperideal(R, A2):
                                continue
                            P = core.direct_product(L, R)
                            A, S = core.product_mask(L, R, A1, A2), core.product_mask(L, R, S1, S2)
                            res = cl.class_result(P, A, S, "quasi")
                            if not res.holds:
                                return L, A1, S1, R, A2, S2, res.counterexample
    return None


def paper_example_lines() -> tuple[list[str], int]:
    ws = paper_workspace()
    lines, mismatches = [], 0
    for example, ring, ideal, mcs, prop, expected in PAPER_ROWS:
        G = ws.ring(ring)
        A, S = ws.ideals[ideal][1], ws.mcs[mcs][1]
        res = cl.class_result(G, A, S, prop)
        ok = res.holds == expected
        mismatches += not ok
        w = "-" if res.witness is None else res.witness
        c = "-" if res.counterexample is None else f"({res.counterexample[0]},{res.counterexample[1]})"
        lines.append(f"example={example} ring={ring} ideal={fmt_set(A)} mcs={fmt_set(S)} "
                     f"property={prop} expected={_b(expected)} computed={_b(res.holds)} "
                     f"witness={w} counterexample={c} match={'yes' if ok else 'no'}")
    lines.append("OUT-OF-SCOPE example=salami reason=infinite-carrier "
                 "analogue=quasi-S-primary-but-not-primary")
    gap = _primary_gap()
    if gap:
        G, A, S, t = gap
        lines.append(f"analogue=salami ring={G.name} ideal={fmt_set(A)} mcs={fmt_set(S)} "
                     f"quasi=true primary=false witness={t}")
    else:
        lines.append("analogue=salami found=false")
    lines.append("OUT-OF-SCOPE example=cart222 reason=infinite-carrier "
                 "analogue=disjoint-quasi-factors-give-non-quasi-product")
    gap = _cart_gap()
    if gap:
        L, A1, S1, R, A2, S2, cex = gap
        lines.append(f"analogue=cart222 left={L.name} A1={fmt_set(A1)} S1={fmt_set(S1)} "
                     f"right={R.name} A2={fmt_set(A2)} S2={fmt_set(S2)} product_quasi=false "
                     f"counterexample=({cex[0]},{cex[1]})")
    else:
        lines.append("analogue=cart222 found=false")
    lines.append(f"mismatches={mismatches}")
    return lines, mismatches


def cmd_paper_examples(args) -> int:
    lines, mismatches = paper_example_lines()
    _emit(lines, args.machine)
    return EXIT_FAIL if mismatches else EXIT_OK


# -- wiring ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--capacity", type=int, default=core.DEFAULT_CAPACITY,
                        help="largest carrier accepted (default %(default)s)")
    common.add_argument("--machine", action="store_true",
                        help="one path=value fact per line")
    p = _Parser(prog="hyperideal", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("validate", parents=[common], help="load and validate a workspace")
    s.add_argument("file")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("classify", parents=[common], help="classify an ideal against an MCS")
    s.add_argument("file")
    s.add_argument("ideal")
    s.add_argument("mcs")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("radical", parents=[common], help="radical of an ideal in both modes")
    s.add_argument("file")
    s.add_argument("ideal")
    s.set_defaults(func=cmd_radical)

    s = sub.add_parser("ideals", parents=[common], help="list every hyperideal of a ring")
    s.add_argument("file")
    s.add_argument("ring")
    s.set_defaults(func=cmd_ideals)

    s = sub.add_parser("conformance", parents=[common], help="run the theorem checks")
    src = s.add_mutually_exclusive_group()
    src.add_argument("--corpus", choices=["builtin"], default="builtin")
    src.add_argument("--seed", type=int)
    src.add_argument("--file")
    s.add_argument("--count", type=int)
    s.add_argument("--max-n", type=int, default=8)
    s.add_argument("--max-product", type=int, default=36)
    s.add_argument("--pairs-per-ring", type=int, default=cf.Limits.pairs_per_ring)
    s.add_argument("--check", action="append", metavar="ID", help="restrict to one check id")
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--budget", type=float, help="wall-clock seconds")
    s.add_argument("--dump-dir", help="write each Fail instance here")
    s.add_argument("--mutant", help=argparse.SUPPRESS)
    s.set_defaults(func=cmd_conformance)

    s = sub.add_parser("paper-examples", parents=[common], help="reproduce the worked examples")
    s.set_defaults(func=cmd_paper_examples)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        print(f"error code=E_USAGE {e}", file=sys.stderr)
        return EXIT_USAGE
    except WorkspaceError as e:
        where = f" line={e.line} col={e.col}" if e.line else ""
        print(f"error code={e.code}{where} {str(e).split(': ', 1)[1]}", file=sys.stderr)
        return EXIT_INVALID
    except ValueError as e:
        print(f"error code=E_VALIDATION {e}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
