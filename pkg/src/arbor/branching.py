"""Undividedness, branching degrees and bars at stems.

A stem is named by its top node ``t`` and stands for ``T^{<=t}``; in a
finite tree every stem has this form. ``None`` names the empty stem,
for which only the second branching notion is defined.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .errors import (
    EmptyStemError,
    EmptyStemForBranching1,
    NotAPath,
    NotAPathOfRegion,
    PathNotThroughStem,
    StemHasNoExtension,
    TooLargeForBruteForce,
)
from .order import Forest, components, is_bridge, is_path, paths

DEFAULT_BRUTE_FORCE_CAP = 16

__all__ = [
    "stem_nodes",
    "above_stem",
    "region",
    "undivided",
    "UndividednessClasses",
    "undividedness_classes",
    "is_branching1",
    "is_branching2",
    "is_bar",
    "bars",
    "underlies",
    "n_branching1",
    "n_branching2_bruteforce",
    "bridge_initial_segment",
    "NodeBranching",
    "BranchingReport",
    "node_branching",
    "branching_report",
    "DEFAULT_BRUTE_FORCE_CAP",
]


def stem_nodes(t: Forest, s) -> frozenset:
    if s is None:
        return frozenset()
    t.index(s)
    return frozenset(t.chain_to(s))


def above_stem(t: Forest, s) -> frozenset:
    """``T^{>S}``; the whole tree for the empty stem."""
    if s is None:
        return frozenset(t.nodes)
    return t.descendants(s)


def region(t: Forest, s) -> Forest:
    """The forest ``T^{>S}``."""
    return t.restrict(above_stem(t, s))


def _require_stem(s, err=EmptyStemError):
    if s is None:
        raise err("operation is only defined for nonempty stems")


def _paths_through_stem(t, s):
    S = stem_nodes(t, s)
    return [P for P in paths(t) if S <= P]


def _check_path(t, s, A):
    A = frozenset(A)
    if not is_path(t, A):
        raise NotAPath(f"{sorted(A)} is not a path")
    if not stem_nodes(t, s) <= A:
        raise PathNotThroughStem(f"path {sorted(A)} does not contain the stem at {s!r}")
    return A


def undivided(t: Forest, s, A, B) -> bool:
    """Whether paths ``A`` and ``B`` share a node strictly above the stem."""
    _require_stem(s)
    A = _check_path(t, s, A)
    B = _check_path(t, s, B)
    return bool(A & B & above_stem(t, s))


@dataclass(frozen=True)
class UndividednessClasses:
    stem: str
    classes: tuple  # tuple of frozensets of paths
    correspondence: tuple  # (class, Component of T^{>S}) pairs

    def __len__(self):
        return len(self.classes)


def undividedness_classes(t: Forest, s) -> UndividednessClasses:
    """Partition the paths through the stem by undividedness.

    Each class is paired with the <-component of ``T^{>S}`` met by its
    paths.
    """
    _require_stem(s)
    above = above_stem(t, s)
    if not above:
        raise StemHasNoExtension(f"nothing lies above {s!r}")
    through = _paths_through_stem(t, s)
    classes = []
    for P in through:
        for cls in classes:
            if P & cls[0] & above:
                cls.append(P)
                break
        else:
            classes.append([P])
    comps = components(t.restrict(above))
    pairs = []
    for cls in classes:
        met = [c for c in comps if cls[0] & c.nodes]
        pairs.append((frozenset(cls), met[0]))
    pairs.sort(key=lambda pc: pc[1].representative)
    return UndividednessClasses(
        stem=s,
        classes=tuple(c for c, _ in pairs),
        correspondence=tuple(pairs),
    )


def is_branching1(t: Forest, s) -> bool:
    _require_stem(s, EmptyStemForBranching1)
    if not above_stem(t, s):
        return False
    return len(undividedness_classes(t, s)) > 1


def is_branching2(t: Forest, s) -> bool:
    """Every node above the stem has an incomparable node above the stem.

    A stem with nothing above it is reported as not branching.
    """
    above = above_stem(t, s)
    if not above:
        return False
    return all(any(not t.comparable(v, u) for u in above) for v in above)


def is_bar(t: Forest, s, X) -> bool:
    _require_stem(s)
    X = t.check_subset(X, nonempty=False)
    above = above_stem(t, s)
    if not X <= above:
        return False
    return all(X & P for P in _paths_through_stem(t, s))


def bars(t: Forest, s):
    """Yield every bar over the stem, by brute force over subsets of ``T^{>S}``."""
    _require_stem(s)
    above = sorted(above_stem(t, s))
    through = _paths_through_stem(t, s)
    for mask in range(1, 1 << len(above)):
        X = frozenset(x for k, x in enumerate(above) if mask >> k & 1)
        if all(X & P for P in through):
            yield X


def underlies(f: Forest, X, Y) -> bool:
    """``X <=_und Y``: each element of ``Y`` has a lower bound in ``X``."""
    X = f.check_subset(X, nonempty=False)
    Y = f.check_subset(Y, nonempty=False)
    return all(any(f.le(v, u) for v in X) for u in Y)


def n_branching1(t: Forest, s) -> int:
    """Number of undividedness classes, i.e. of <-components of ``T^{>S}``."""
    _require_stem(s, EmptyStemForBranching1)
    above = above_stem(t, s)
    if not above:
        return 0
    return len(undividedness_classes(t, s))


def _region_masks(f: Forest):
    nodes = f.nodes
    m = len(nodes)
    up = np.zeros(m, dtype=np.uint64)
    comp = np.zeros(m, dtype=np.uint64)
    for i in range(m):
        for j in range(m):
            if i == j or f._lt(i, j):
                up[i] |= np.uint64(1 << j)
            if i == j or f._lt(i, j) or f._lt(j, i):
                comp[i] |= np.uint64(1 << j)
    return up, comp


def n_branching2_bruteforce(t: Forest, s, cap: int = DEFAULT_BRUTE_FORCE_CAP):
    """The ``n`` for which the tree is n-branching at the second sense, or None.

    Every antichain ``X`` of ``T^{>S}`` (the empty one included) must
    be underlain by an antichain of size exactly ``n``; all antichains
    are enumerated. Returns None when no single ``n`` works.
    """
    above = above_stem(t, s)
    limit = min(cap, _kernels.MAX_BRUTE_FORCE)
    if len(above) > limit:
        raise TooLargeForBruteForce(f"{len(above)} nodes above the stem, cap is {limit}")
    up, comp = _region_masks(t.restrict(above))
    ok = _kernels.branching2_sizes(up, comp)
    sizes = [n for n, flag in enumerate(ok) if flag]
    return sizes[0] if len(sizes) == 1 else None


def _initial_bridge_run(reg: Forest, P, L):
    """Initial bridge of path ``P`` of ``reg`` built from a finite underlying antichain ``L``.

    For each ``w`` in ``L`` pick the node of ``P`` lying below both ``w``
    and ``u_P`` (the member of ``L`` on ``P``), falling back to ``u_P``;
    the least picked node tops the segment.
    """
    (u_p,) = [w for w in L if w in P]
    picked = []
    for w in L:
        below = [x for x in P if reg.le(x, w) and reg.le(x, u_p)]
        picked.append(max(below, key=reg.depth) if below else u_p)
    top = min(picked, key=reg.depth)
    return frozenset(x for x in P if reg.le(x, top))


def bridge_initial_segment(t: Forest, s, P) -> frozenset:
    """The maximal initial segment of ``P`` that is a bridge of ``T^{>S}``.

    ``P`` must be a path of the forest ``T^{>S}``.
    """
    reg = region(t, s)
    P = frozenset(P)
    if not is_path(reg, P):
        raise NotAPathOfRegion(f"{sorted(P)} is not a path of the region above {s!r}")
    # the region's roots form an n-element antichain underlying every maximal antichain
    seed = _initial_bridge_run(reg, P, reg.roots)
    chain = sorted(P, key=reg.depth)
    seg = [chain[0]]
    for x in chain[1:]:
        if len(reg.children(seg[-1])) != 1:
            break
        seg.append(x)
    out = frozenset(seg)
    assert seed <= out and is_bridge(reg, out)
    return out


@dataclass(frozen=True)
class NodeBranching:
    children_count: int
    branching1: bool
    branching2: bool
    n_branching1: int
    n_branching2: int | None  # None would mean infinitely branching

    def to_dict(self):
        return {
            "children_count": self.children_count,
            "branching1": self.branching1,
            "branching2": self.branching2,
            "n_branching1": self.n_branching1,
            "n_branching2": self.n_branching2,
        }


@dataclass(frozen=True)
class BranchingReport:
    nodes: dict = field(default_factory=dict)  # label -> NodeBranching
    n_branching2_at_empty: int | None = None
    is_finitely_branching2: bool = True
    is_condensed_candidate: bool = True

    def to_dict(self):
        return {
            "nodes": {x: nb.to_dict() for x, nb in sorted(self.nodes.items())},
            "n_branching2_at_empty": self.n_branching2_at_empty,
            "is_finitely_branching2": self.is_finitely_branching2,
            "is_condensed_candidate": self.is_condensed_candidate,
        }


def node_branching(t: Forest, s, cap: int = DEFAULT_BRUTE_FORCE_CAP) -> NodeBranching:
    n1 = n_branching1(t, s)
    try:
        n2 = n_branching2_bruteforce(t, s, cap)
    except TooLargeForBruteForce:
        # finite trees are n-branching in both senses for the same n
        n2 = n1
    return NodeBranching(
        children_count=len(t.children(s)),
        branching1=is_branching1(t, s),
        branching2=is_branching2(t, s),
        n_branching1=n1,
        n_branching2=n2,
    )


def branching_report(t: Forest, stems=None, cap: int = DEFAULT_BRUTE_FORCE_CAP) -> BranchingReport:
    """Per-node branching summary; ``stems`` restricts which nodes are reported.

    The second-sense degree is computed by brute force when ``T^{>S}``
    has at most ``cap`` nodes and taken from the first-sense degree
    beyond that.
    """
    stems = t.nodes if stems is None else list(stems)
    nodes = {s: node_branching(t, s, cap) for s in stems}
    try:
        at_empty = n_branching2_bruteforce(t, None, cap)
    except TooLargeForBruteForce:
        at_empty = len(t.roots)
    finite = at_empty is not None and all(nb.n_branching2 is not None for nb in nodes.values())
    candidate = all(nb.branching2 for s, nb in nodes.items() if t.children(s))
    return BranchingReport(nodes, at_empty, finite, candidate)

