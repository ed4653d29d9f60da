"""Maximal bridges and the condensation quotient.

The fast route computes a maximal bridge by walking the unary spine
through ``x``; :func:`beta` and :func:`beta_classes` evaluate the
comparability-profile formula directly and serve as its oracle.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from . import _kernels
from .branching import is_branching2
from .errors import CellNotABridge, NotAPartition, NotAPath
from .order import Forest, Tree, as_tree, build_forest, is_bridge, is_path, paths

__all__ = [
    "Bridge",
    "Quotient",
    "PathClass",
    "PathClassification",
    "beta",
    "beta_classes",
    "maximal_bridge",
    "bridge_partition",
    "condensation",
    "quotient_by",
    "is_condensed",
    "is_condensed_by_paths",
    "quotient_image",
    "quotient_preimage",
    "classify_path",
    "nonleaf_preimage_check",
    "is_well_founded",
    "path_family",
]

# Set to a positive value only by mutation testing: the upward walk
# then stops this many nodes early.
_SPINE_SLACK = 0


@dataclass(frozen=True)
class Bridge:
    nodes: frozenset
    anchor: str  # least node in the tree order

    def __contains__(self, x):
        return x in self.nodes

    def __len__(self):
        return len(self.nodes)


def _bridge(f: Forest, nodes) -> Bridge:
    nodes = frozenset(nodes)
    return Bridge(nodes, min(nodes, key=lambda x: (f.depth(x), x)))


def beta(t: Forest, x, y) -> bool:
    """For every ``z``: ``z`` comparable to ``x`` iff comparable to ``y``."""
    t.index(x)
    t.index(y)
    return all(t.comparable(z, x) == t.comparable(z, y) for z in t.nodes)


def beta_classes(t: Forest) -> list:
    """Equivalence classes of :func:`beta`, via the comparability-row kernel."""
    rep = _kernels.comparability_classes(t.matrix)
    groups = {}
    for i, r in enumerate(rep):
        groups.setdefault(int(r), []).append(t.nodes[i])
    return [frozenset(g) for g in groups.values()]


def maximal_bridge(t: Forest, x) -> Bridge:
    """The maximal bridge through ``x``: extend across single-child links."""
    i = t.index(x)
    members = [i]
    p = t._parent[i]
    while p >= 0 and len(t._children[p]) == 1:
        members.append(p)
        p = t._parent[p]
    upward = []
    j = i
    while len(t._children[j]) == 1:
        j = t._children[j][0]
        upward.append(j)
    if _SPINE_SLACK:
        upward = upward[:max(0, len(upward) - _SPINE_SLACK)]
    members.extend(upward)
    return _bridge(t, (t.nodes[k] for k in members))


def bridge_partition(t: Forest) -> list:
    """All maximal bridges, sorted by anchor."""
    seen = set()
    out = []
    for x in t.topological():
        if x in seen:
            continue
        b = maximal_bridge(t, x)
        seen |= b.nodes
        out.append(b)
    return sorted(out, key=lambda b: b.anchor)


@dataclass(frozen=True)
class Quotient:
    """A quotient tree with its class map.

    Quotient nodes are named by the anchor of their bridge.
    """

    source: Forest
    quotient_tree: Forest
    class_of: dict  # source node -> quotient node
    members_of: dict  # quotient node -> Bridge

    def __len__(self):
        return len(self.members_of)


def quotient_by(t: Forest, cells) -> Quotient:
    """Quotient of ``t`` by a partition into bridges, order inherited."""
    cells = [frozenset(c) for c in cells]
    covered = set()
    for c in cells:
        if not c:
            raise NotAPartition("empty cell")
        t.check_subset(c)
        if covered & c:
            raise NotAPartition(f"cells overlap on {sorted(covered & c)}")
        covered |= c
    if covered != set(t.nodes):
        raise NotAPartition(f"cells miss {sorted(set(t.nodes) - covered)}")
    bridges = []
    for c in cells:
        if not is_bridge(t, c):
            raise CellNotABridge(f"cell {sorted(c)} is not a bridge")
        bridges.append(_bridge(t, c))
    class_of = {x: b.anchor for b in bridges for x in b.nodes}
    members_of = {b.anchor: b for b in bridges}
    edges = []
    for b in bridges:
        p = t.parent(b.anchor)
        if p is not None:
            edges.append((class_of[p], b.anchor))
    q = build_forest(sorted(members_of), edges)
    if isinstance(t, Tree):
        q = as_tree(q)
    return Quotient(t, q, class_of, members_of)


def condensation(t: Forest) -> Quotient:
    """Collapse every maximal bridge to its anchor."""
    return quotient_by(t, [b.nodes for b in bridge_partition(t)])


def is_condensed(t: Forest) -> bool:
    """Every maximal bridge is a singleton."""
    return all(len(b) == 1 for b in bridge_partition(t))


def path_family(t: Forest, x) -> frozenset:
    """``P_x``: the set of paths through ``x``."""
    t.index(x)
    return frozenset(P for P in paths(t) if x in P)


def is_condensed_by_paths(t: Forest) -> bool:
    """Distinct nodes lie on distinct families of paths."""
    fams = [path_family(t, x) for x in t.nodes]
    return len(set(fams)) == len(fams)


def quotient_image(q: Quotient, X) -> frozenset:
    X = q.source.check_subset(X, nonempty=False)
    return frozenset(q.class_of[x] for x in X)


def quotient_preimage(q: Quotient, Y) -> frozenset:
    Y = q.quotient_tree.check_subset(Y, nonempty=False)
    return frozenset(x for x, c in q.class_of.items() if c in Y)


class PathClass(enum.Enum):
    SINGULAR = "Singular"
    EMERGENT = "Emergent"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class PathClassification:
    kind: PathClass
    witness: str | None  # least node of the path whose up-set is linear
    greatest_class: str | None  # greatest quotient node of b(P), if any


def _greatest(f: Forest, Y):
    for y in Y:
        if all(z == y or f.lt(z, y) for z in Y):
            return y
    return None


def classify_path(t: Forest, P, q: Quotient | None = None) -> PathClassification:
    """Singular when some node of ``P`` has a linear up-set, otherwise emergent.

    The quotient criterion (``b(P)`` has a greatest element) is
    evaluated alongside and must agree.
    """
    P = frozenset(P)
    if not is_path(t, P):
        raise NotAPath(f"{sorted(P)} is not a path")
    q = q or condensation(t)
    witness = None
    for x in sorted(P, key=t.depth):
        up = t.descendants(x)
        if all(len(t.children(y)) <= 1 for y in up | {x}):
            witness = x
            break
    greatest = _greatest(q.quotient_tree, quotient_image(q, P))
    kind = PathClass.SINGULAR if witness is not None else PathClass.EMERGENT
    if (witness is not None) != (greatest is not None):
        raise AssertionError(f"singular/greatest-node criteria disagree on {sorted(P)}")
    return PathClassification(kind, witness, greatest)


def nonleaf_preimage_check(t: Forest, q: Quotient | None = None) -> bool:
    """Each non-leaf quotient node pulls back to a final segment of a branching stem."""
    q = q or condensation(t)
    qt = q.quotient_tree
    for y in qt.nodes:
        if not qt.children(y):
            continue
        pre = q.members_of[y].nodes
        top = max(pre, key=t.depth)
        S = frozenset(t.chain_to(top))
        if not pre <= S:
            return False
        if not all(z in pre for x in pre for z in S if t.lt(x, z)):
            return False
        if not is_branching2(t, top):
            return False
    return True


def is_well_founded(t: Forest) -> bool:
    """Every nonempty node set has a minimal element.

    Finite forests always qualify; the check walks each ancestor chain
    to make the finiteness argument concrete.
    """
    n = len(t)
    return all(t.depth(x) < n for x in t.nodes)

