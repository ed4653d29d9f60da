import pytest
from hypothesis import given

from arbor import fixtures as F
from arbor.errors import (
    CycleDetected,
    DuplicateNode,
    EmptySubset,
    InvalidLabel,
    MultipleParents,
    NotATree,
    UnknownEndpoint,
    UnknownNode,
)
from arbor.order import (
    SubsetRole,
    as_tree,
    build_forest,
    build_tree,
    classify_subset,
    comparable,
    components,
    is_bridge,
    is_bridge_by_paths,
    is_stem,
    order_region,
    paths,
    paths_through,
    sigma_component,
)
from conftest import raw, trees
from oracles import Poset


def test_build_fork():
    t = build_tree(["t", "u", "v", "w"], [("t", "u"), ("u", "v"), ("u", "w")])
    assert t.root == "t"
    assert t.children("u") == ("v", "w")
    assert t.lt("t", "w") and not t.lt("w", "t")


def test_single_node():
    t = build_tree(["a"], [])
    assert len(t) == 1 and t.leaves == ("a",)


@pytest.mark.parametrize("nodes, edges, err, field", [
    (["a", "b"], [("a", "b"), ("b", "a")], CycleDetected, None),
    (["a", "b", "c"], [("a", "c"), ("b", "c")], MultipleParents, "edges[1]"),
    (["a", "b", "c"], [("a", "b"), ("b", "c"), ("c", "a")], CycleDetected, None),
    (["a", "a"], [], DuplicateNode, "nodes[1]"),
    (["a"], [("a", "b")], UnknownEndpoint, "edges[0][1]"),
    (["a", "b"], [("a", "b"), ("c", "b")], UnknownEndpoint, "edges[1][0]"),
    (["a b"], [], InvalidLabel, "nodes[0]"),
    (["a"], [("a", "a")], CycleDetected, "edges[0]"),
])
def test_build_errors(nodes, edges, err, field):
    with pytest.raises(err) as exc:
        build_forest(nodes, edges)
    assert exc.value.field == field


def test_forest_is_not_tree():
    f = build_forest(["a", "b"], [])
    with pytest.raises(NotATree):
        as_tree(f)
    assert not f.is_tree and len(components(f)) == 2


def test_comparable():
    t = F.fork_tree()
    assert comparable(t, "t", "v")
    assert not comparable(t, "v", "w")
    assert comparable(t, "u", "u")
    with pytest.raises(UnknownNode):
        comparable(t, "t", "q")


def test_order_region():
    t = F.fork_tree()
    assert order_region(t, {"u"}, ">") == {"v", "w"}
    assert order_region(t, {"v", "w"}, ">") == frozenset()
    assert order_region(t, {"v"}, "<=") == {"t", "u", "v"}
    assert order_region(t, {"v"}, "≤") == {"t", "u", "v"}
    with pytest.raises(EmptySubset):
        order_region(t, set(), "<")


def test_paths():
    assert set(paths(F.fork_tree())) == {frozenset("tuv"), frozenset("tuw")}
    assert paths(F.single()) == [frozenset("a")]
    assert paths(F.chain(3)) == [frozenset({"c0", "c1", "c2"})]
    assert len(paths_through(F.fork_tree(), "u")) == 2
    assert paths_through(F.fork_tree(), "v") == [frozenset("tuv")]
    assert len(paths_through(F.trident_tree(), "u")) == 3


def test_classify_subset():
    r = classify_subset(F.fork_tree(), {"t", "u"})
    assert {SubsetRole.SEGMENT, SubsetRole.STEM, SubsetRole.BRIDGE} <= r
    r = classify_subset(F.trident_tree(), {"u", "x"})
    assert {SubsetRole.SEGMENT, SubsetRole.FURCATION} <= r and SubsetRole.BRIDGE not in r
    assert SubsetRole.ANTICHAIN in classify_subset(F.fork_tree(), {"v", "w"})
    with pytest.raises(EmptySubset):
        classify_subset(F.fork_tree(), set())


def test_components():
    assert len(components(F.fork_tree())) == 1
    f = build_forest(["a", "b", "c", "d"], [("a", "b"), ("c", "d")])
    assert [c.nodes for c in components(f)] == [{"a", "b"}, {"c", "d"}]
    above_u = F.trident_tree().restrict({"x", "y", "z"})
    assert [c.nodes for c in components(above_u)] == [{"x"}, {"y"}, {"z"}]
    assert [c.representative for c in components(above_u)] == ["x", "y", "z"]


@given(trees())
def test_singletons_are_bridges(t):
    assert all(SubsetRole.BRIDGE in classify_subset(t, {x}) for x in t.nodes)


@given(trees(max_nodes=8))
def test_paths_match_oracle(t):
    assert set(paths(t)) == Poset(*raw(t)).paths()


@given(trees(max_nodes=7))
def test_bridge_rule_exhaustive(t):
    P = Poset(*raw(t))
    nodes = t.nodes
    for m in range(1, 1 << len(nodes)):
        A = {x for k, x in enumerate(nodes) if m >> k & 1}
        assert is_bridge(t, A) == is_bridge_by_paths(t, A) == P.is_bridge(A)


@given(trees())
def test_components_are_closure_sets(t):
    f = t.restrict(t.descendants(t.root)) if len(t) > 1 else t
    comps = components(f)
    assert sum(len(c) for c in comps) == len(f)
    for c in comps:
        assert all(sigma_component(f, x) == c.nodes for x in c.nodes)
    assert [c.nodes for c in comps] == Poset(*raw(f)).components()


@given(trees())
def test_path_pairs_meet_in_stems(t):
    ps = paths(t)
    for i, P in enumerate(ps):
        for Q in ps[i + 1:]:
            assert is_stem(t, P & Q)
