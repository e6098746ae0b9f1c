import pytest
from hypothesis import given, settings, strategies as hs

from hyperideal import conformance as cf
from hyperideal import structures as st
from hyperideal.cli import paper_workspace
from hyperideal.core import mask
from hyperideal.workspace import (
    WorkspaceError, instance_text, parse_workspace, render_workspace, workspace_instances)

PRODUCT = """
ring a { kind = zphi  n = 2  phi = {1} }
ring b { kind = zphi, n = 3, phi = {1,2} }
ring p { kind = product  left = a  right = b }
ring q { kind = quotient  base = b  by = {0} }
ideal i1 in a = {0}
mcs s1 in a = {1}
ideal i2 in b = {0}
mcs s2 in b = {1}
ideal ip in p = {0}
mcs sp in p = {4}
hom pr : p -> a = [0,0,0,1,1,1]
instance x = ideal ip, mcs sp, factors i1 s1 i2 s2, hom pr
"""


def test_reference_file_loads():
    ws = paper_workspace()
    assert list(ws.rings) == ["madar", "weak", "haji"]
    assert ws.ring("madar") == st.madar()
    assert ws.ring("weak") == st.weak_ring() and ws.ring("haji") == st.haji()
    assert ws.ideals["weak_A2"] == ("weak", mask([0, 2, 4]))


def test_empty():
    ws = parse_workspace("# nothing here\n")
    assert not ws.rings and render_workspace(ws) == "\n"


def test_round_trip_reference():
    ws = paper_workspace()
    text = render_workspace(ws)
    ws2 = parse_workspace(text)
    assert render_workspace(ws2) == text
    assert {k: v[1] for k, v in ws.rings.items()} == {k: v[1] for k, v in ws2.rings.items()}


def test_products_quotients_homs_instances():
    ws = parse_workspace(PRODUCT)
    assert ws.ring("p").n == 6 and ws.ring("q").n == 3
    (inst,) = workspace_instances(ws)
    assert inst.factors is not None and inst.hom is not None
    assert render_workspace(parse_workspace(render_workspace(ws))) == render_workspace(ws)


@pytest.mark.parametrize("text,code,line,col", [
    ("ideal a in nowhere = {0}", "E_REF", 1, 12),
    ("ring r { kind = zphi n = 4 phi = {1} }\nring r { kind = zphi n = 2 phi = {1} }", "E_DUP", 2, 6),
    ("ring r { kind = zphi n = 4 phi = {1} }\nideal a in r = {0,1}", "E_VALIDATION", 2, 16),
    ("ring r { kind = zphi n = 4 phi = {1} }\nmcs s in r = {2}", "E_VALIDATION", 2, 14),
    ("ring r { kind = zphi n = 4 phi = {1} }\nideal a in r = {7}", "E_VALIDATION", 2, 16),
    ("ring r { kind = zphi n = 4 phi = {1} ", "E_SYNTAX", 1, 38),
    ("ring r { kind = blob }", "E_SYNTAX", 1, 1),
    ("ring r { kind = zphi n = 4 phi = {1} } $", "E_SYNTAX", 1, 40),
    ("widget w", "E_SYNTAX", 1, 1),
    ("ring r { kind = tables add = [[0,1],[1,0]] hyp = [[{0},{0}],[{1},{1}]] }", "E_VALIDATION", 1, 6),
    ("ring r { kind = product left = x right = y }", "E_REF", 1, 32),
])
def test_diagnostics(text, code, line, col):
    with pytest.raises(WorkspaceError) as e:
        parse_workspace(text)
    assert (e.value.code, e.value.line, e.value.col) == (code, line, col)


def test_validation_names_axiom():
    with pytest.raises(WorkspaceError, match="axiom V"):
        parse_workspace("ring r { kind = tables add = [[0,1],[1,0]] hyp = [[{0},{0}],[{1},{1}]] }")


def test_instance_dump_replays():
    insts = cf.generate_structures(3, 8)
    for inst in insts[::7]:
        ws = parse_workspace(instance_text(inst, "header line"))
        (back,) = workspace_instances(ws)
        assert back.ring == inst.ring and back.ideal == inst.ideal and back.mcs == inst.mcs
        for cid in cf.CATALOG:
            assert cf.run_check(cid, back) == cf.run_check(cid, inst)


POOL = st.zphi_rings(5, 3)


@settings(max_examples=60, deadline=None)
@given(hs.lists(hs.sampled_from(POOL), min_size=1, max_size=3))
def test_round_trip_tables(rings):
    from hyperideal.workspace import Workspace, tables_spec
    ws = Workspace()
    for i, G in enumerate(rings):
        ws.rings[f"r{i}"] = (tables_spec(G), G)
        ws.ideals[f"z{i}"] = (f"r{i}", 1)
    text = render_workspace(ws)
    back = parse_workspace(text)
    assert [back.ring(f"r{i}") for i in range(len(rings))] == rings
    assert render_workspace(back) == text
