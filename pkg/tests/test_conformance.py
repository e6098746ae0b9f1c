import os

import pytest

from hyperideal import conformance as cf
from hyperideal import mutants
from hyperideal import structures as st
from hyperideal.core import mask
from hyperideal.workspace import load_workspace, workspace_instances


def inst(G, A, S):
    return cf.Instance(G, mask(A), mask(S))


def test_catalog_is_closed():
    assert len(cf.CATALOG) == 19 and tuple(cf.CHECKS) == cf.CATALOG
    with pytest.raises(ValueError):
        cf.run_check("T99", inst(st.madar(), [0, 2], [1, 3]))


def test_madar_passes_everything_applicable(madar):
    i = inst(madar, [0, 2], [1, 3])
    assert cf.run_check("T11", i) == cf.PASS
    out = {cid: cf.run_check(cid, i).status for cid in cf.CATALOG}
    assert "fail" not in out.values()
    assert out["T_CART"] == "skip" and cf.run_check("T_CART", i).detail == "no-factors"


def test_weak_zero_is_not_c(weak):
    # ⟨0⟩ of the weak ring is not a C-hyperideal, so the T24 hypothesis fails
    assert cf.run_check("T24", inst(weak, [0], [1, 5])) == cf.skip("A-not-c")


def test_t24_pass_via_contrapositive():
    # Z4 with phi={2}: ⟨0⟩ weakly quasi, not quasi, C, and its square is ⟨0⟩
    G = st.build_zphi(4, [1])
    assert cf.run_check("T24", inst(G, [0], [1])).status in ("pass", "skip")


def test_skip_names_hypothesis():
    for i in cf.generate_structures(5, 12):
        for cid in cf.CATALOG:
            o = cf.run_check(cid, i)
            assert o.status in ("pass", "skip")
            if o.status == "skip":
                assert o.detail


def test_empty_run():
    s = cf.run_all([])
    assert s.total == 0 and s.n_fail == 0
    assert all(c == {"pass": 0, "fail": 0, "skip": 0} for c in s.counts.values())
    assert s.lines()[-1] == "total pass=0 fail=0 skip=0"


def test_stream_is_deterministic():
    a = cf.generate_structures(7, 20)
    b = cf.generate_structures(7, 20)
    assert [(i.label, i.ring, i.ideal, i.mcs) for i in a] == [(i.label, i.ring, i.ideal, i.mcs) for i in b]
    assert [i.label for i in a] != [i.label for i in cf.generate_structures(8, 20)]


def test_stream_contains_paper_rings():
    rings = {i.ring for i in cf.generate_structures(0, 12)}
    for G in (st.madar(), st.weak_ring(), st.haji()):
        assert G in rings
    assert st.madar() == st.build_zphi(4, [1, 3])
    assert st.weak_ring() == st.build_zphi(6, [1, 2, 3, 4, 5])


def test_discards_counted():
    stats = {}
    cf.generate_structures(1, 40, stats=stats)
    assert stats["random"] == 10 and stats["attempts"] >= 10
    assert stats["attempts"] - stats.get("discarded", 0) == 10


def test_limits_respect_capacity():
    with pytest.raises(ValueError):
        cf.Limits(max_product=100, capacity=64)


def test_workers_merge_deterministically():
    insts = cf.generate_structures(2, 16)
    one = cf.run_all(insts)
    two = cf.run_all(insts, workers=2, chunk_size=8)
    assert one.text() == two.text()


def test_budget_exhaustion_reported():
    insts = cf.generate_structures(2, 8)
    s = cf.run_all(insts, budget=0.0)
    assert s.budget_exhausted and s.completed < s.total
    assert "budget_exhausted=true" in s.lines()[0]


def test_mutant_detected_and_dumped(tmp_path):
    with mutants.applied("quasi-ignores-t-left"):
        s = cf.run_all(cf.mutation_corpus(), checks=("T11",), dump_dir=tmp_path)
        assert s.counts["T11"]["fail"] > 0
        path = s.dumps[0]
        (back,) = workspace_instances(load_workspace(path))
        replay = cf.run_check("T11", back)
        assert replay.status == "fail"
        assert replay.detail in open(path).read()
    assert cf.run_check("T11", back) == cf.PASS
    assert os.path.basename(path).startswith("fail-T11-")


def test_outcome_strings():
    assert str(cf.PASS) == "pass"
    assert str(cf.fail(a=True, b=cf.Mask(5))) == "fail(a=true b={0,2})"
