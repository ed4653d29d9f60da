"""Finite forests and trees as strict partial orders.

A forest is stored as a parent map over sorted string labels. Ancestry
queries use an Euler-tour interval per node, so ``lt`` is O(1) on any
size; the dense reachability matrix is built on demand by the kernel
for the brute-force oracles.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from . import _kernels
from .errors import (
    CycleDetected,
    DuplicateNode,
    EmptySubset,
    InvalidLabel,
    MultipleParents,
    NotATree,
    UnknownEndpoint,
    UnknownNode,
)

__all__ = [
    "Forest",
    "Tree",
    "SubsetRole",
    "Component",
    "build_forest",
    "build_tree",
    "as_tree",
    "comparable",
    "order_region",
    "paths",
    "paths_through",
    "classify_subset",
    "components",
    "sigma_component",
    "is_bridge_by_paths",
]


def _check_label(label, field=None):
    if not isinstance(label, str) or not label or any(c.isspace() for c in label):
        raise InvalidLabel(f"invalid node label {label!r}", field=field)


class Forest:
    """Immutable finite forest.

    Nodes are strings. ``x < y`` means ``y`` is a strict descendant of
    ``x``. Use :func:`build_forest` to construct one from edges.
    """

    __slots__ = ("nodes", "_index", "_parent", "_children", "_tin", "_tout",
                 "_depth", "_order", "_matrix")

    def __init__(self, nodes, parent):
        # nodes: sorted tuple of labels; parent: list of indices (-1 = root),
        # already validated as acyclic.
        self.nodes = tuple(nodes)
        self._index = {x: i for i, x in enumerate(self.nodes)}
        self._parent = list(parent)
        n = len(self.nodes)
        children = [[] for _ in range(n)]
        for i, p in enumerate(self._parent):
            if p >= 0:
                children[p].append(i)
        self._children = children
        self._tin = [0] * n
        self._tout = [0] * n
        self._depth = [0] * n
        order = []
        clock = 0
        for r in (i for i in range(n) if self._parent[i] < 0):
            stack = [(r, iter(children[r]))]
            self._tin[r] = clock
            clock += 1
            order.append(r)
            while stack:
                node, it = stack[-1]
                nxt = next(it, None)
                if nxt is None:
                    self._tout[node] = clock - 1
                    stack.pop()
                    continue
                self._tin[nxt] = clock
                clock += 1
                self._depth[nxt] = self._depth[node] + 1
                order.append(nxt)
                stack.append((nxt, iter(children[nxt])))
        self._order = order
        self._matrix = None

    @classmethod
    def from_parent_map(cls, parent_of: dict, nodes: Iterable[str] | None = None):
        """Build from ``{child: parent}``; nodes default to all labels seen."""
        labels = set(parent_of) | set(parent_of.values())
        if nodes is not None:
            labels |= set(nodes)
        labels = sorted(labels)
        edges = [(p, c) for c, p in parent_of.items()]
        return build_forest(labels, edges)

    # -- basic access ---------------------------------------------------
    def __len__(self):
        return len(self.nodes)

    def __iter__(self):
        return iter(self.nodes)

    def __contains__(self, x):
        return x in self._index

    def __eq__(self, other):
        if not isinstance(other, Forest):
            return NotImplemented
        return self.nodes == other.nodes and self._parent == other._parent

    def __hash__(self):
        return hash((self.nodes, tuple(self._parent)))

    def __repr__(self):
        return f"{type(self).__name__}({len(self.nodes)} nodes, {len(self.roots)} roots)"

    def index(self, x) -> int:
        try:
            return self._index[x]
        except (KeyError, TypeError):
            raise UnknownNode(f"unknown node {x!r}") from None

    def check_subset(self, A, nonempty=True) -> frozenset:
        A = frozenset(A)
        if nonempty and not A:
            raise EmptySubset("subset must be nonempty")
        for x in A:
            self.index(x)
        return A

    def parent(self, x):
        p = self._parent[self.index(x)]
        return None if p < 0 else self.nodes[p]

    def children(self, x) -> tuple:
        return tuple(self.nodes[c] for c in self._children[self.index(x)])

    def depth(self, x) -> int:
        return self._depth[self.index(x)]

    @property
    def roots(self) -> tuple:
        return tuple(x for i, x in enumerate(self.nodes) if self._parent[i] < 0)

    @property
    def leaves(self) -> tuple:
        return tuple(x for i, x in enumerate(self.nodes) if not self._children[i])

    @property
    def edges(self) -> list:
        return [(self.nodes[p], x) for i, (x, p) in enumerate(zip(self.nodes, self._parent))
                if p >= 0]

    @property
    def parent_map(self) -> dict:
        return {c: p for p, c in self.edges}

    @property
    def is_tree(self) -> bool:
        return len(self.roots) == 1

    def topological(self) -> list:
        """Labels with every parent before its children."""
        return [self.nodes[i] for i in self._order]

    # -- order ----------------------------------------------------------
    def _lt(self, i, j):
        return self._tin[i] < self._tin[j] <= self._tout[i]

    def lt(self, x, y) -> bool:
        return self._lt(self.index(x), self.index(y))

    def le(self, x, y) -> bool:
        return x == y and x in self or self.lt(x, y)

    def comparable(self, x, y) -> bool:
        i, j = self.index(x), self.index(y)
        return i == j or self._lt(i, j) or self._lt(j, i)

    def ancestors(self, x) -> frozenset:
        """Strict ancestors of ``x``."""
        out = []
        p = self._parent[self.index(x)]
        while p >= 0:
            out.append(self.nodes[p])
            p = self._parent[p]
        return frozenset(out)

    def chain_to(self, x) -> list:
        """Ancestor chain of ``x`` from its root down to ``x`` inclusive."""
        out = []
        i = self.index(x)
        while i >= 0:
            out.append(self.nodes[i])
            i = self._parent[i]
        out.reverse()
        return out

    def descendants(self, x) -> frozenset:
        """Strict descendants of ``x``."""
        i = self.index(x)
        lo, hi = self._tin[i], self._tout[i]
        return frozenset(self.nodes[j] for j in range(len(self.nodes))
                         if lo < self._tin[j] <= hi)

    @property
    def matrix(self):
        """Dense ``uint8`` matrix, ``m[i, j] == 1`` iff ``nodes[j] < nodes[i]``."""
        if self._matrix is None:
            self._matrix = _kernels.ancestor_matrix(self._parent, self._order)
        return self._matrix

    def restrict(self, subset) -> "Forest":
        """Induced suborder on ``subset``; parents become nearest kept ancestors."""
        keep = self.check_subset(subset, nonempty=False)
        labels = sorted(keep)
        idx = {x: k for k, x in enumerate(labels)}
        parent = []
        for x in labels:
            p = self._parent[self._index[x]]
            while p >= 0 and self.nodes[p] not in keep:
                p = self._parent[p]
            parent.append(-1 if p < 0 else idx[self.nodes[p]])
        return Forest(labels, parent)


class Tree(Forest):
    """A forest with exactly one root.

    For finite orders, downward-connectedness reduces to a single
    minimal node: two roots share no lower bound.
    """

    __slots__ = ()

    @property
    def root(self) -> str:
        return self.roots[0]


def as_tree(f: Forest) -> Tree:
    if isinstance(f, Tree):
        return f
    if len(f.roots) != 1:
        raise NotATree(f"expected exactly one root, found {len(f.roots)}")
    return Tree(f.nodes, f._parent)


def build_forest(nodes: Iterable[str], edges: Iterable) -> Forest:
    """Validate ``nodes`` and parent-to-child ``edges`` into a :class:`Forest`.

    Raises DuplicateNode, UnknownEndpoint, MultipleParents, CycleDetected
    or InvalidLabel; each carries a ``field`` such as ``"edges[2][1]"``.
    """
    nodes = list(nodes)
    seen = {}
    for k, x in enumerate(nodes):
        _check_label(x, field=f"nodes[{k}]")
        if x in seen:
            raise DuplicateNode(f"duplicate node {x!r}", field=f"nodes[{k}]")
        seen[x] = k
    parent_of = {}
    for k, edge in enumerate(edges):
        p, c = edge
        for side, x in ((0, p), (1, c)):
            if x not in seen:
                raise UnknownEndpoint(f"edge endpoint {x!r} is not a node",
                                      field=f"edges[{k}][{side}]")
        if p == c:
            raise CycleDetected(f"self-loop on {p!r}", field=f"edges[{k}]")
        old = parent_of.get(c)
        if old is not None and old != p:
            raise MultipleParents(f"node {c!r} has parents {old!r} and {p!r}",
                                  field=f"edges[{k}]")
        parent_of[c] = p

    labels = sorted(seen)
    idx = {x: i for i, x in enumerate(labels)}
    parent = [-1] * len(labels)
    for c, p in parent_of.items():
        parent[idx[c]] = idx[p]
    # every node must reach a root
    state = [0] * len(labels)  # 0 unvisited, 1 on current walk, 2 done
    for start in range(len(labels)):
        walk = []
        i = start
        while i >= 0 and state[i] == 0:
            state[i] = 1
            walk.append(i)
            i = parent[i]
        if i >= 0 and state[i] == 1:
            cyc = walk[walk.index(i):]
            raise CycleDetected("cycle through " + ", ".join(labels[j] for j in cyc))
        for j in walk:
            state[j] = 2
    return Forest(labels, parent)


def build_tree(nodes, edges) -> Tree:
    return as_tree(build_forest(nodes, edges))


def comparable(f: Forest, t, u) -> bool:
    return f.comparable(t, u)


_KINDS = {"<": "<", "<=": "<=", "≤": "<=", ">": ">", ">=": ">=", "≥": ">="}


def order_region(f: Forest, A, kind: str) -> frozenset:
    """Nodes standing in relation ``kind`` to every element of ``A``.

    ``kind`` is one of ``<``, ``<=``, ``>``, ``>=`` (the unicode forms are
    accepted too). For ``>`` and ``>=`` the result is empty unless ``A``
    is linearly ordered.
    """
    A = f.check_subset(A)
    try:
        kind = _KINDS[kind]
    except KeyError:
        raise ValueError(f"unknown relation {kind!r}") from None
    rel = {
        "<": lambda x, a: f.lt(x, a),
        "<=": lambda x, a: f.le(x, a),
        ">": lambda x, a: f.lt(a, x),
        ">=": lambda x, a: f.le(a, x),
    }[kind]
    if kind in (">", ">=") and not is_linear(f, A):
        return frozenset()
    return frozenset(x for x in f.nodes if all(rel(x, a) for a in A))


def paths(f: Forest) -> list:
    """Maximal chains, i.e. root-to-leaf ancestor chains, ordered by leaf."""
    return [frozenset(f.chain_to(leaf)) for leaf in f.leaves]


def paths_through(f: Forest, x) -> list:
    f.index(x)
    return [P for P in paths(f) if x in P]


# -- subset predicates ---------------------------------------------------

def is_linear(f: Forest, A) -> bool:
    A = list(A)
    return all(f.comparable(a, b) for k, a in enumerate(A) for b in A[k + 1:])


def is_antichain(f: Forest, A) -> bool:
    A = list(A)
    return all(not f.comparable(a, b) for k, a in enumerate(A) for b in A[k + 1:])


def is_downward_closed(f: Forest, A) -> bool:
    A = frozenset(A)
    return all(f.ancestors(a) <= A for a in A)


def is_upward_closed(f: Forest, A) -> bool:
    A = frozenset(A)
    return all(f.descendants(a) <= A for a in A)


def is_convex(f: Forest, A) -> bool:
    A = frozenset(A)
    for y in A:
        # z strictly below y and strictly above some x of A must be in A
        for z in f.ancestors(y):
            if z not in A and any(f.lt(x, z) for x in A):
                return False
    return True


def _extremes(f, A):
    # A must be a nonempty chain
    lo = min(A, key=f.depth)
    hi = max(A, key=f.depth)
    return lo, hi


def is_segment(f: Forest, A) -> bool:
    return bool(A) and is_linear(f, A) and is_convex(f, A)


def is_bridge(f: Forest, A) -> bool:
    """Segment test plus the spine rule: every member but the top has one child."""
    A = frozenset(A)
    if not is_segment(f, A):
        return False
    _, hi = _extremes(f, A)
    return all(len(f._children[f.index(a)]) == 1 for a in A if a != hi)


def is_bridge_by_paths(f: Forest, A) -> bool:
    """Bridge test straight from the definition: quantify over every path."""
    A = frozenset(A)
    if not is_segment(f, A):
        return False
    return all(A <= P or not (A & P) for P in paths(f))


def is_stem(f: Forest, A) -> bool:
    # a finite nonempty chain is bounded above by its maximum
    return bool(A) and is_linear(f, A) and is_downward_closed(f, A)


def is_path(f: Forest, A) -> bool:
    """A root-to-leaf chain: the ancestor chain of a leaf, nothing more."""
    A = frozenset(A)
    if not A or not all(a in f for a in A):
        return False
    top = max(A, key=f.depth)
    return not f.children(top) and len(A) == f.depth(top) + 1 and f.ancestors(top) <= A


def is_branch(f: Forest, A) -> bool:
    A = frozenset(A)
    if not is_segment(f, A):
        return False
    _, hi = _extremes(f, A)
    return not f._children[f.index(hi)]


class SubsetRole(enum.Enum):
    PATH = "Path"
    STEM = "Stem"
    SEGMENT = "Segment"
    BRIDGE = "Bridge"
    ANTICHAIN = "Antichain"
    BRANCH = "Branch"
    FURCATION = "Furcation"
    DOWNWARD_CLOSED = "DownwardClosed"
    UPWARD_CLOSED = "UpwardClosed"

    def __str__(self):
        return self.value


def classify_subset(f: Forest, A) -> frozenset:
    """Every :class:`SubsetRole` that the nonempty node set ``A`` satisfies."""
    A = f.check_subset(A)
    roles = set()
    if is_antichain(f, A):
        roles.add(SubsetRole.ANTICHAIN)
    if is_downward_closed(f, A):
        roles.add(SubsetRole.DOWNWARD_CLOSED)
    if is_upward_closed(f, A):
        roles.add(SubsetRole.UPWARD_CLOSED)
    if is_linear(f, A):
        if SubsetRole.DOWNWARD_CLOSED in roles:
            roles.add(SubsetRole.STEM)
        if is_path(f, A):
            roles.add(SubsetRole.PATH)
        if is_convex(f, A):
            roles.add(SubsetRole.SEGMENT)
            roles.add(SubsetRole.BRIDGE if is_bridge(f, A) else SubsetRole.FURCATION)
            if is_branch(f, A):
                roles.add(SubsetRole.BRANCH)
    return frozenset(roles)


@dataclass(frozen=True)
class Component:
    nodes: frozenset
    representative: str

    @classmethod
    def of(cls, nodes):
        nodes = frozenset(nodes)
        return cls(nodes, min(nodes))

    def __contains__(self, x):
        return x in self.nodes

    def __len__(self):
        return len(self.nodes)


def components(f: Forest) -> list:
    """The <-components: one per root, its whole up-set. Sorted by representative."""
    out = [Component.of({r} | f.descendants(r)) for r in f.roots]
    return sorted(out, key=lambda c: c.representative)


def sigma_component(f: Forest, t) -> frozenset:
    """Nodes ``u`` with some ``t' <= t`` and ``t' <= u``, evaluated literally."""
    f.index(t)
    lower = [s for s in f.nodes if f.le(s, t)]
    return frozenset(u for u in f.nodes if any(f.le(s, u) for s in lower))
