"""Text format for rings, ideals, MCSs, homomorphisms and check instances.

Grammar (whitespace-insensitive, ``#`` starts a comment)::

    ring <name> { kind = tables  add = [[..],..]  hyp = [[{..},..],..] }
    ring <name> { kind = zphi  n = <int>  phi = {a,b,..} }
    ring <name> { kind = product  left = <ring>  right = <ring> }
    ring <name> { kind = quotient  base = <ring>  by = {..} }
    ideal <name> in <ring> = {e0,e1,..}
    mcs <name> in <ring> = {..}
    hom <name> : <ring> -> <ring> = [images]
    instance <name> = ideal <I>, mcs <S> [, factors <I1> <S1> <I2> <S2>] [, hom <h>]

Commas between ring-block entries are optional. Integers are element
indices; a product ring encodes the pair ``(u, v)`` as ``u·n_right + v``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Optional, Union

from . import core, homs
from .classify import mcs_violation
from .core import AxiomViolation, Hyperring, fmt_set, mask, members
from .ideals import hyperideal_violation


class WorkspaceError(ValueError):
    """Load failure with a stable code: E_SYNTAX, E_REF, E_DUP or E_VALIDATION."""

    def __init__(self, code: str, line: int, col: int, message: str):
        self.code = code
        self.line = line
        self.col = col
        super().__init__(f"{code} {line}:{col}: {message}")


# -- ring specs ------------------------------------------------------------

@dataclass(frozen=True)
class Tables:
    add: tuple
    hyp: tuple


@dataclass(frozen=True)
class ZPhi:
    n: int
    phi: tuple


@dataclass(frozen=True)
class Product:
    left: str
    right: str


@dataclass(frozen=True)
class Quotient:
    base: str
    by: tuple


RingSpec = Union[Tables, ZPhi, Product, Quotient]


@dataclass
class Workspace:
    rings: dict = field(default_factory=dict)      # name -> (RingSpec, Hyperring)
    ideals: dict = field(default_factory=dict)     # name -> (ring name, mask)
    mcs: dict = field(default_factory=dict)        # name -> (ring name, mask)
    homs: dict = field(default_factory=dict)       # name -> (src, dst, GoodHom)
    instances: dict = field(default_factory=dict)  # name -> dict of refs

    def ring(self, name: str) -> Hyperring:
        return self.rings[name][1]

    def names(self) -> set:
        return set(self.rings) | set(self.ideals) | set(self.mcs) | set(self.homs) | set(self.instances)


# -- lexer -----------------------------------------------------------------

_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r]+) | (?P<nl>\n) | (?P<comment>\#[^\n]*)
  | (?P<arrow>->) | (?P<int>-?\d+) | (?P<name>[A-Za-z_][A-Za-z0-9_.\-]*)
  | (?P<punct>[{}\[\]=,:;])
""", re.VERBOSE)


@dataclass
class Tok:
    kind: str
    text: str
    line: int
    col: int


def _lex(text: str) -> list[Tok]:
    out = []
    line, start, pos = 1, 0, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise WorkspaceError("E_SYNTAX", line, pos - start + 1, f"unexpected character {text[pos]!r}")
        kind = m.lastgroup
        if kind == "nl":
            line += 1
            start = m.end()
        elif kind not in ("ws", "comment"):
            out.append(Tok(kind, m.group(), line, m.start() - start + 1))
        pos = m.end()
    out.append(Tok("eof", "", line, pos - start + 1))
    return out


class _Parser:
    def __init__(self, text: str, capacity: int):
        self.toks = _lex(text)
        self.i = 0
        self.capacity = capacity
        self.ws = Workspace()

    # token helpers
    @property
    def tok(self) -> Tok:
        return self.toks[self.i]

    def err(self, code, msg, tok=None):
        tok = tok or self.tok
        return WorkspaceError(code, tok.line, tok.col, msg)

    def take(self, text=None, kind=None) -> Tok:
        t = self.tok
        if (text is not None and t.text != text) or (kind is not None and t.kind != kind):
            want = text or kind
            raise self.err("E_SYNTAX", f"expected {want!r}, found {t.text or 'end of input'!r}")
        self.i += 1
        return t

    def accept(self, text) -> bool:
        if self.tok.text == text:
            self.i += 1
            return True
        return False

    # values
    def value(self):
        t = self.tok
        if t.kind == "int":
            self.i += 1
            return int(t.text)
        if t.kind == "name":
            self.i += 1
            return t.text
        if t.text == "{":
            return self.set_literal()
        if t.text == "[":
            return self.list_literal()
        raise self.err("E_SYNTAX", f"expected a value, found {t.text!r}")

    def set_literal(self) -> frozenset:
        self.take("{")
        out = []
        while not self.accept("}"):
            out.append(int(self.take(kind="int").text))
            if not self.accept(","):
                self.take("}")
                break
        return frozenset(out)

    def list_literal(self) -> list:
        self.take("[")
        out = []
        while not self.accept("]"):
            out.append(self.value())
            if not self.accept(","):
                self.take("]")
                break
        return out

    def new_name(self) -> Tok:
        t = self.take(kind="name")
        if t.text in self.ws.names():
            raise self.err("E_DUP", f"name {t.text!r} already defined", t)
        return t

    def ring_ref(self) -> Tok:
        t = self.take(kind="name")
        if t.text not in self.ws.rings:
            raise self.err("E_REF", f"unknown ring {t.text!r}", t)
        return t

    def elements(self, G: Hyperring, s, tok) -> int:
        if not isinstance(s, frozenset):
            raise self.err("E_SYNTAX", "expected a set literal", tok)
        bad = [e for e in s if not 0 <= e < G.n]
        if bad:
            raise self.err("E_VALIDATION", f"element {bad[0]} outside carrier of size {G.n}", tok)
        return mask(s)

    # items
    def parse(self) -> Workspace:
        while self.tok.kind != "eof":
            kw = self.take(kind="name")
            handler = getattr(self, f"item_{kw.text}", None)
            if handler is None:
                raise self.err("E_SYNTAX", f"unknown block {kw.text!r}", kw)
            handler(kw)
        return self.ws

    def item_ring(self, kw):
        name = self.new_name()
        self.take("{")
        fields = {}
        ftoks = {}
        while not self.accept("}"):
            key = self.take(kind="name")
            self.take("=")
            vtok = self.tok
            fields[key.text] = self.value()
            ftoks[key.text] = vtok
            self.accept(",") or self.accept(";")
        spec = self.ring_spec(fields, ftoks, kw)
        try:
            G = self.build(spec)
        except AxiomViolation as e:
            raise self.err("E_VALIDATION", f"ring {name.text}: axiom {e.axiom} fails at {e.witness}", name)
        except ValueError as e:
            raise self.err("E_VALIDATION", f"ring {name.text}: {e}", name)
        object.__setattr__(G, "name", name.text)
        self.ws.rings[name.text] = (spec, G)

    def ring_spec(self, f, ftoks, kw) -> RingSpec:
        kind = f.get("kind")
        need = {"tables": ("add", "hyp"), "zphi": ("n", "phi"),
                "product": ("left", "right"), "quotient": ("base", "by")}
        if kind not in need:
            raise self.err("E_SYNTAX", f"ring kind must be one of {sorted(need)}", kw)
        for k in need[kind]:
            if k not in f:
                raise self.err("E_SYNTAX", f"ring of kind {kind} needs {k!r}", kw)
        if kind == "tables":
            add = tuple(tuple(int(v) for v in row) for row in f["add"])
            hyp = tuple(tuple(tuple(sorted(c)) for c in row) for row in f["hyp"])
            return Tables(add, hyp)
        if kind == "zphi":
            return ZPhi(int(f["n"]), tuple(sorted(f["phi"])))
        for k in need[kind][:1] if kind == "quotient" else need[kind]:
            if f[k] not in self.ws.rings:
                raise self.err("E_REF", f"unknown ring {f[k]!r}", ftoks[k])
        if kind == "product":
            return Product(f["left"], f["right"])
        return Quotient(f["base"], tuple(sorted(f["by"])))

    def build(self, spec: RingSpec) -> Hyperring:
        if isinstance(spec, Tables):
            return core.validate(spec.add, spec.hyp, capacity=self.capacity)
        if isinstance(spec, ZPhi):
            return core.build_zphi(spec.n, spec.phi, capacity=self.capacity)
        if isinstance(spec, Product):
            return core.direct_product(self.ws.ring(spec.left), self.ws.ring(spec.right),
                                       capacity=self.capacity)
        base = self.ws.ring(spec.base)
        return core.quotient_ring(base, base.check_mask(mask(spec.by)))[0]

    def _subset_item(self, table, check, what):
        name = self.new_name()
        self.take("in")
        rt = self.ring_ref()
        self.take("=")
        vt = self.tok
        G = self.ws.ring(rt.text)
        m = self.elements(G, self.value(), vt)
        if not m:
            raise self.err("E_VALIDATION", f"{what} {name.text} is empty", vt)
        bad = check(G, m)
        if bad is not None:
            raise self.err("E_VALIDATION", f"{fmt_set(m)} is not {what}: {bad}", vt)
        table[name.text] = (rt.text, m)

    def item_ideal(self, kw):
        self._subset_item(self.ws.ideals, hyperideal_violation, "a hyperideal")

    def item_mcs(self, kw):
        self._subset_item(self.ws.mcs, mcs_violation, "an MCS")

    def item_hom(self, kw):
        name = self.new_name()
        self.take(":")
        src = self.ring_ref()
        self.take("->")
        dst = self.ring_ref()
        self.take("=")
        vt = self.tok
        images = self.value()
        if not isinstance(images, list) or not all(isinstance(v, int) for v in images):
            raise self.err("E_SYNTAX", "expected a list of element indices", vt)
        try:
            h = homs.validate_hom(self.ws.ring(src.text), self.ws.ring(dst.text), images)
        except homs.HomViolation as e:
            raise self.err("E_VALIDATION", str(e), vt)
        self.ws.homs[name.text] = (src.text, dst.text, h)

    def item_instance(self, kw):
        name = self.new_name()
        self.take("=")
        refs = {}
        while True:
            key = self.take(kind="name")
            if key.text == "ideal":
                refs["ideal"] = self._ref(self.ws.ideals, "ideal")
            elif key.text == "mcs":
                refs["mcs"] = self._ref(self.ws.mcs, "mcs")
            elif key.text == "hom":
                refs["hom"] = self._ref(self.ws.homs, "hom")
            elif key.text == "factors":
                refs["factors"] = tuple(
                    self._ref(t, w) for t, w in ((self.ws.ideals, "ideal"), (self.ws.mcs, "mcs"),
                                                 (self.ws.ideals, "ideal"), (self.ws.mcs, "mcs")))
            else:
                raise self.err("E_SYNTAX", f"unknown instance field {key.text!r}", key)
            if not self.accept(","):
                break
        if "ideal" not in refs or "mcs" not in refs:
            raise self.err("E_SYNTAX", "an instance needs an ideal and an mcs", name)
        if self.ws.ideals[refs["ideal"]][0] != self.ws.mcs[refs["mcs"]][0]:
            raise self.err("E_REF", "ideal and mcs live in different rings", name)
        self.ws.instances[name.text] = refs

    def _ref(self, table, what):
        t = self.take(kind="name")
        if t.text not in table:
            raise self.err("E_REF", f"unknown {what} {t.text!r}", t)
        return t.text


def parse_workspace(text: str, *, capacity: int = core.DEFAULT_CAPACITY) -> Workspace:
    return _Parser(text, capacity).parse()


def load_workspace(path, *, capacity: int = core.DEFAULT_CAPACITY) -> Workspace:
    with open(path) as fh:
        return parse_workspace(fh.read(), capacity=capacity)


# -- rendering -------------------------------------------------------------

def _set(s) -> str:
    return "{" + ",".join(str(e) for e in sorted(s)) + "}"


def render_spec(name: str, spec: RingSpec) -> str:
    if isinstance(spec, Tables):
        add = ",\n         ".join("[" + ",".join(map(str, row)) + "]" for row in spec.add)
        hyp = ",\n         ".join("[" + ",".join(_set(c) for c in row) + "]" for row in spec.hyp)
        return f"ring {name} {{\n  kind = tables\n  add = [{add}]\n  hyp = [{hyp}]\n}}"
    if isinstance(spec, ZPhi):
        return f"ring {name} {{ kind = zphi  n = {spec.n}  phi = {_set(spec.phi)} }}"
    if isinstance(spec, Product):
        return f"ring {name} {{ kind = product  left = {spec.left}  right = {spec.right} }}"
    return f"ring {name} {{ kind = quotient  base = {spec.base}  by = {_set(spec.by)} }}"


def tables_spec(G: Hyperring) -> Tables:
    return Tables(G.add, tuple(tuple(members(c) for c in row) for row in G.hyp))


def render_workspace(ws: Workspace) -> str:
    out = []
    for name, (spec, _) in ws.rings.items():
        out.append(render_spec(name, spec))
    for name, (r, m) in ws.ideals.items():
        out.append(f"ideal {name} in {r} = {fmt_set(m)}")
    for name, (r, m) in ws.mcs.items():
        out.append(f"mcs {name} in {r} = {fmt_set(m)}")
    for name, (s, d, h) in ws.homs.items():
        out.append(f"hom {name} : {s} -> {d} = [" + ",".join(map(str, h.map)) + "]")
    for name, refs in ws.instances.items():
        parts = [f"ideal {refs['ideal']}", f"mcs {refs['mcs']}"]
        if "factors" in refs:
            parts.append("factors " + " ".join(refs["factors"]))
        if "hom" in refs:
            parts.append(f"hom {refs['hom']}")
        out.append(f"instance {name} = " + ", ".join(parts))
    return "\n".join(out) + "\n"


def instance_text(inst, header: str = "") -> str:
    """Render a check instance as a self-contained, replayable workspace."""
    lines = [f"# {line}" for line in header.splitlines()]
    G = inst.ring
    parts = []
    if inst.factors is not None:
        G1, A1, S1, G2, A2, S2 = inst.factors
        lines.append(render_spec("G1", tables_spec(G1)))
        lines.append(render_spec("G2", tables_spec(G2)))
        lines.append(render_spec("G", Product("G1", "G2")))
        lines += [f"ideal A1 in G1 = {fmt_set(A1)}", f"mcs S1 in G1 = {fmt_set(S1)}",
                  f"ideal A2 in G2 = {fmt_set(A2)}", f"mcs S2 in G2 = {fmt_set(S2)}"]
        parts.append("factors A1 S1 A2 S2")
    else:
        lines.append(render_spec("G", tables_spec(G)))
    lines += [f"ideal A in G = {fmt_set(inst.ideal)}", f"mcs S in G = {fmt_set(inst.mcs)}"]
    if inst.hom is not None:
        lines.append(render_spec("H", tables_spec(inst.hom.dst)))
        lines.append("hom h : G -> H = [" + ",".join(map(str, inst.hom.map)) + "]")
        parts.append("hom h")
    lines.append("instance i = " + ", ".join(["ideal A", "mcs S"] + parts))
    return "\n".join(lines) + "\n"


def workspace_instances(ws: Workspace) -> list:
    """Check instances named by ``instance`` blocks, else every same-ring (ideal, mcs) pair."""
    from .conformance import Instance

    out = []
    if ws.instances:
        for name, refs in ws.instances.items():
            rname, A = ws.ideals[refs["ideal"]]
            S = ws.mcs[refs["mcs"]][1]
            factors = None
            if "factors" in refs:
                i1, s1, i2, s2 = refs["factors"]
                r1, A1 = ws.ideals[i1]
                r2, A2 = ws.ideals[i2]
                factors = (ws.ring(r1), A1, ws.mcs[s1][1], ws.ring(r2), A2, ws.mcs[s2][1])
            hom = ws.homs[refs["hom"]][2] if "hom" in refs else None
            out.append(Instance(ws.ring(rname), A, S, name, factors, hom))
        return out
    for iname, (r, A) in ws.ideals.items():
        for sname, (r2, S) in ws.mcs.items():
            if r == r2:
                out.append(Instance(ws.ring(r), A, S, f"{iname}/{sname}"))
    return out
