import pytest
from hypothesis import given, strategies as st

from arbor import fixtures as F
from arbor import homeo as H
from arbor.condense import condensation, maximal_bridge
from arbor.errors import CellNotABridge, LabelCollision, NotAnEdge, NotAPartition, NotHomeomorphic, NotWithinBridge
from arbor.order import build_tree
from conftest import trees

FORK = F.fork_tree()


def test_refine():
    r = H.refine(FORK, H.RefinementSpec.of(("t", "u", ["m"])))
    assert len(r) == 5 and maximal_bridge(r, "m").nodes == {"t", "m", "u"}
    assert H.isomorphic(H.refine(FORK, H.RefinementSpec()), FORK)
    with pytest.raises(NotWithinBridge):
        H.refine(FORK, H.RefinementSpec.of(("u", "v", ["m"])))
    with pytest.raises(NotAnEdge):
        H.refine(FORK, H.RefinementSpec.of(("t", "v", ["m"])))
    with pytest.raises(LabelCollision):
        H.refine(FORK, H.RefinementSpec.of(("t", "u", ["w"])))


def test_stacked_insertions():
    r = H.refine(FORK, H.RefinementSpec.of(("t", "u", ["a"]), ("t", "u", ["b"])))
    assert r.chain_to("u") == ["t", "a", "b", "u"]


def test_abstraction():
    q = H.homeomorphic_abstraction(FORK, H.BridgePartition(({"t"}, {"u"}, {"v"}, {"w"})))
    assert H.isomorphic(q.quotient_tree, FORK)
    q = H.homeomorphic_abstraction(FORK, [{"t", "u"}, {"v"}, {"w"}])
    assert q.quotient_tree == condensation(FORK).quotient_tree
    with pytest.raises(CellNotABridge):
        H.homeomorphic_abstraction(F.trident_tree(), [{"t"}, {"u", "x"}, {"y"}, {"z"}])
    with pytest.raises(NotAPartition):
        H.homeomorphic_abstraction(FORK, [{"t", "u"}, {"v"}])


def test_canonical_form():
    trident = F.trident_tree()
    relabel = build_tree(list("abcde"), [("a", "b"), ("b", "c"), ("b", "d"), ("b", "e")])
    assert H.canonical_form(trident) == H.canonical_form(relabel)
    assert H.canonical_form(FORK) != H.canonical_form(trident)
    assert str(H.canonical_form(F.single())) == "()"


def test_isomorphic_and_homeomorphic():
    assert not H.isomorphic(F.chain(3), F.cherry())
    assert H.isomorphic(condensation(FORK).quotient_tree, F.cherry())
    assert H.homeomorphic(FORK, F.cherry())
    assert not H.homeomorphic(FORK, F.trident_tree())


def test_isomorphism_map():
    trident = F.trident_tree()
    relabel = build_tree(list("abcde"), [("a", "b"), ("b", "c"), ("b", "d"), ("b", "e")])
    m = H.isomorphism(trident, relabel)
    assert m["t"] == "a" and m["u"] == "b"
    assert all(relabel.parent(m[x]) == (m[trident.parent(x)] if trident.parent(x) else None) for x in trident.nodes)
    assert H.isomorphism(FORK, trident) is None


def test_common_refinement():
    w = H.common_refinement_witness(FORK, F.cherry())
    assert len(w) == 5 and len(maximal_bridge(w, "t")) == 3
    assert H.is_refinement_of(w, FORK) and H.is_refinement_of(w, F.cherry())
    assert H.isomorphic(H.common_refinement_witness(FORK, FORK), FORK)
    assert len(H.common_refinement_witness(F.chain(2), F.chain(5))) == 7
    with pytest.raises(NotHomeomorphic):
        H.common_refinement_witness(FORK, F.trident_tree())


def test_is_refinement_of_direction():
    assert H.is_refinement_of(F.chain(4), F.chain(2))
    assert not H.is_refinement_of(F.chain(2), F.chain(4))


@given(trees(), st.randoms(use_true_random=False))
def test_refinement_keeps_condensation(t, rnd):
    ins = []
    for k, (p, c) in enumerate(t.edges):
        if len(t.children(p)) == 1 and rnd.random() < 0.6:
            ins.append((p, c, [f"m{k}"]))
    r = H.refine(t, H.RefinementSpec.of(*ins))
    assert H.homeomorphic(t, r)
    assert H.is_refinement_of(r, t)


@given(trees(max_nodes=7), trees(max_nodes=7))
def test_homeomorphic_iff_witness(a, b):
    try:
        w = H.common_refinement_witness(a, b)
    except NotHomeomorphic:
        w = None
    assert (w is not None) == H.homeomorphic(a, b)
