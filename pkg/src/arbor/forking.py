"""Condensed extensions of a source tree, their projection onto it, and the forking verifier.

An extension node is a 0/1 function on an ancestor chain ``T^{<=t}``,
stored as the target ``t`` plus a bit tuple ordered root to target.
Its label is ``"<target>:<bits>"``.
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass, field
from itertools import product

from .condense import bridge_partition, is_condensed
from .errors import (
    BudgetExceeded,
    IncompleteSigma,
    NotAPath,
    SearchCapExceededWithoutWitness,
    UnknownComponent,
    UnknownExtNode,
    UnknownNode,
)
from .order import Component, Forest, Tree, as_tree, components, is_path, paths

__all__ = [
    "Variant",
    "ExtNode",
    "Extension",
    "ForkingCandidate",
    "ForkingVerdict",
    "DEFAULT_BUDGET",
    "default_budget",
    "forced_nodes",
    "predicted_size",
    "build_extension",
    "sigma",
    "project_path",
    "lift_path",
    "component_isomorphism",
    "count_full_components",
    "approx_class_count",
    "embedded_copy",
    "short_label",
    "extension_candidate",
    "verify_forking",
]

DEFAULT_BUDGET = 100_000


class Variant(enum.Enum):
    FULL = "full"
    REFINED = "refined"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class ExtNode:
    target: str
    bits: tuple  # one bit per node of T^{<=target}, root first

    @property
    def label(self) -> str:
        return f"{self.target}:{''.join(map(str, self.bits))}"

    @classmethod
    def parse(cls, label: str) -> "ExtNode":
        target, sep, bits = label.rpartition(":")
        if not sep or not target or not bits or set(bits) - {"0", "1"}:
            raise UnknownExtNode(f"malformed extension label {label!r}")
        return cls(target, tuple(int(b) for b in bits))

    def bit_map(self, t: Forest) -> dict:
        return dict(zip(t.chain_to(self.target), self.bits))


@dataclass(frozen=True)
class Extension:
    source: Tree
    forest: Forest
    sigma: dict  # label -> source node
    variant: Variant
    ext_nodes: dict = field(repr=False)  # label -> ExtNode

    def __len__(self):
        return len(self.forest)


def default_budget() -> int:
    raw = os.environ.get("ARBOR_BUDGET")
    return int(raw) if raw else DEFAULT_BUDGET


def forced_nodes(t: Forest, variant: Variant) -> frozenset:
    """Positions fixed to 1: the least node of each maximal bridge, Refined only."""
    if Variant(variant) is Variant.FULL:
        return frozenset()
    return frozenset(b.anchor for b in bridge_partition(t))


def predicted_size(t: Forest, variant: Variant) -> int:
    forced = forced_nodes(t, variant)
    free = {}
    total = 0
    for x in t.topological():
        p = t.parent(x)
        free[x] = (free[p] if p is not None else 0) + (x not in forced)
        total += 1 << free[x]
    return total


def build_extension(t: Tree, variant=Variant.REFINED, budget: int | None = None) -> Extension:
    """All 0/1 functions on ancestor chains, ordered by extension.

    Refined keeps only those that are 1 at every least node of a maximal
    bridge. The predicted size is checked against ``budget`` before
    anything is allocated.
    """
    variant = Variant(variant)
    budget = default_budget() if budget is None else budget
    want = predicted_size(t, variant)
    if want > budget:
        raise BudgetExceeded(want, budget)
    forced = forced_nodes(t, variant)
    by_target = {}
    parent_of = {}
    for x in t.topological():
        choices = (1,) if x in forced else (0, 1)
        p = t.parent(x)
        prefixes = by_target[p] if p is not None else [()]
        here = []
        for pre in prefixes:
            for b in choices:
                bits = pre + (b,)
                here.append(bits)
                if p is not None:
                    parent_of[ExtNode(x, bits).label] = ExtNode(p, pre).label
        by_target[x] = here
    ext_nodes = {}
    for x, all_bits in by_target.items():
        for bits in all_bits:
            node = ExtNode(x, bits)
            ext_nodes[node.label] = node
    labels = sorted(ext_nodes)
    idx = {lab: i for i, lab in enumerate(labels)}
    parent = [idx[parent_of[lab]] if lab in parent_of else -1 for lab in labels]
    forest = Forest(labels, parent)
    if len(forest.roots) == 1:
        forest = as_tree(forest)
    sig = {lab: n.target for lab, n in ext_nodes.items()}
    return Extension(t, forest, sig, variant, ext_nodes)


def _ext_label(f) -> str:
    return f.label if isinstance(f, ExtNode) else f


def sigma(e: Extension, f) -> str:
    lab = _ext_label(f)
    try:
        return e.sigma[lab]
    except KeyError:
        raise UnknownExtNode(f"{lab!r} is not a node of the extension") from None


def short_label(e: Extension, f) -> str:
    """Target followed by its free bits only, as in ``u0`` or ``w011``."""
    node = e.ext_nodes[_ext_label(f)]
    forced = forced_nodes(e.source, e.variant)
    chain = e.source.chain_to(node.target)
    free = "".join(str(b) for x, b in zip(chain, node.bits) if x not in forced)
    return node.target + free


def project_path(e: Extension, P) -> frozenset:
    """Image of an extension path; checked to be a source path met isomorphically."""
    P = frozenset(_ext_label(f) for f in P)
    if not is_path(e.forest, P):
        raise NotAPath(f"{sorted(P)} is not a path of the extension")
    image = frozenset(e.sigma[f] for f in P)
    if len(image) != len(P):
        raise AssertionError("projection is not injective on the path")
    for f in P:
        for g in P:
            if e.forest.lt(f, g) and not e.source.lt(e.sigma[f], e.sigma[g]):
                raise AssertionError("projection does not preserve the order on the path")
    if not is_path(e.source, image):
        raise AssertionError("projection of a path is not a source path")
    return image


def _resolve_component(e: Extension, c) -> Component:
    comps = components(e.forest)
    if isinstance(c, Component):
        if c in comps:
            return c
    else:
        for comp in comps:
            if c in comp:
                return comp
    raise UnknownComponent(f"{c!r} is not a component of the extension")


def _chain_bits(e: Extension, P):
    src = e.source
    top = max(P, key=src.depth)
    return src.chain_to(top)


def _lift_bits(e: Extension, comp: Component, P) -> dict:
    """A 0/1 function on ``P`` whose restrictions form a path of ``comp``.

    Agree with a reference path of ``comp`` on the shared stem, then
    set each further bit to 0 unless it is forced.
    """
    src = e.source
    leaf = min(x for x in comp.nodes if not e.forest.children(x))
    ref = e.ext_nodes[leaf]
    xi = ref.bit_map(src)
    forced = forced_nodes(src, e.variant)
    chi = {}
    shared = True
    for x in _chain_bits(e, P):
        shared = shared and x in xi
        chi[x] = xi[x] if shared else (1 if x in forced else 0)
    return chi


def lift_path(e: Extension, component, P) -> frozenset:
    P = frozenset(P)
    if not is_path(e.source, P):
        raise NotAPath(f"{sorted(P)} is not a path of the source")
    comp = _resolve_component(e, component)
    chi = _lift_bits(e, comp, P)
    chain = _chain_bits(e, P)
    out = frozenset(
        ExtNode(x, tuple(chi[y] for y in chain[:k + 1])).label for k, x in enumerate(chain)
    )
    if not out <= comp.nodes:
        raise AssertionError("lifted path left the requested component")
    return out


def component_isomorphism(e: Extension, c1, c2) -> dict:
    """An explicit isomorphism between two components of the extension.

    Lift one source path ``P`` into each component, giving bit functions
    ``xi0`` and ``xi1`` on ``P``. A node is mapped by flipping its bit at
    each ``u`` in ``P`` where ``xi0(u) != xi1(u)``; bits off ``P`` stay.
    """
    a = _resolve_component(e, c1)
    b = _resolve_component(e, c2)
    P = frozenset(paths(e.source)[0])
    xi0 = _lift_bits(e, a, P)
    xi1 = _lift_bits(e, b, P)
    flip = {u for u in xi0 if xi0[u] != xi1[u]}
    src = e.source
    phi = {}
    for lab in a.nodes:
        node = e.ext_nodes[lab]
        chain = src.chain_to(node.target)
        bits = tuple(bit ^ (x in flip) for x, bit in zip(chain, node.bits))
        phi[lab] = ExtNode(node.target, bits).label
    f = e.forest
    if set(phi.values()) != set(b.nodes) or len(set(phi.values())) != len(phi):
        raise AssertionError("component map is not a bijection")
    for lab in a.nodes:
        p = f.parent(lab)
        if (phi[p] if p is not None else None) != f.parent(phi[lab]):
            raise AssertionError("component map does not preserve the order")
    return phi


def count_full_components(t: Tree, budget: int | None = None) -> int:
    return len(components(build_extension(t, Variant.FULL, budget).forest))


def approx_class_count(t: Tree, max_nodes: int = 12) -> int:
    """Classes of total 0/1 functions on ``t`` that agree on some stem, by brute force."""
    n = len(t)
    if n > max_nodes:
        raise ValueError(f"{n} nodes exceeds the brute-force limit {max_nodes}")
    stems = [t.chain_to(x) for x in t.nodes]
    reps = []
    for values in product((0, 1), repeat=n):
        chi = dict(zip(t.nodes, values))
        for r in reps:
            if any(all(chi[x] == r[x] for x in s) for s in stems):
                break
        else:
            reps.append(chi)
    return len(reps)


def embedded_copy(e: Extension, chi: dict) -> frozenset:
    """Restrictions of a total function ``chi`` to each ancestor chain."""
    src = e.source
    out = set()
    for x in src.nodes:
        node = ExtNode(x, tuple(chi[y] for y in src.chain_to(x)))
        if node.label not in e.ext_nodes:
            raise UnknownExtNode(f"{node.label!r} is not in the extension")
        out.add(node.label)
    return frozenset(out)


@dataclass(frozen=True)
class ForkingCandidate:
    candidate: Tree
    sigma_c: dict


def extension_candidate(e: Extension, component=None) -> ForkingCandidate:
    """One component of the extension, with the projection, as a candidate."""
    comps = components(e.forest)
    comp = comps[0] if component is None else _resolve_component(e, component)
    tree = as_tree(e.forest.restrict(comp.nodes))
    return ForkingCandidate(tree, {x: e.sigma[x] for x in comp.nodes})


@dataclass(frozen=True)
class ForkingVerdict:
    cond1_condensed: bool
    cond2_order_preserving_onto: bool
    cond3_path_isomorphic: bool
    cond4_path_cover: bool
    cond5_extension: bool
    witness: frozenset | None = None
    violations: tuple = ()

    @property
    def is_forking(self) -> bool:
        return (self.cond1_condensed and self.cond2_order_preserving_onto
                and self.cond3_path_isomorphic and self.cond4_path_cover)

    @property
    def is_extension(self) -> bool:
        return self.is_forking and self.cond5_extension

    def to_dict(self):
        return {
            "cond1_condensed": self.cond1_condensed,
            "cond2_order_preserving_onto": self.cond2_order_preserving_onto,
            "cond3_path_isomorphic": self.cond3_path_isomorphic,
            "cond4_path_cover": self.cond4_path_cover,
            "cond5_extension": self.cond5_extension,
            "witness": sorted(self.witness) if self.witness is not None else None,
            "is_forking": self.is_forking,
            "is_extension": self.is_extension,
            "violations": list(self.violations),
        }


def _iso_on(t: Tree, c: Tree, sig: dict, W) -> bool:
    """``sig`` restricted to ``W`` is an order isomorphism onto ``t``."""
    W = list(W)
    if len(W) != len(t) or {sig[w] for w in W} != set(t.nodes):
        return False
    return all(
        c.lt(x, y) == t.lt(sig[x], sig[y]) for x in W for y in W if x != y
    )


def _search_embedding(t: Tree, c: Tree, sig: dict):
    pre = {}
    for x, s in sig.items():
        pre.setdefault(s, []).append(x)
    order = t.topological()
    chosen = {}

    def fits(s, x):
        for s2, x2 in chosen.items():
            if c.lt(x2, x) != t.lt(s2, s) or c.lt(x, x2) != t.lt(s, s2):
                return False
        return True

    def go(k):
        if k == len(order):
            return True
        s = order[k]
        for x in sorted(pre.get(s, ())):
            if fits(s, x):
                chosen[s] = x
                if go(k + 1):
                    return True
                del chosen[s]
        return False

    return frozenset(chosen.values()) if go(0) else None


def verify_forking(t: Tree, cand: ForkingCandidate, subtree_search_cap: int = 20,
                   witness=None) -> ForkingVerdict:
    """Check each forking condition independently; the fifth by search or witness.

    The fifth asks for a node set of the candidate on which the map is an
    order isomorphism onto the source.
    """
    c = cand.candidate
    sig = dict(cand.sigma_c)
    missing = set(c.nodes) - set(sig)
    if missing:
        raise IncompleteSigma(f"sigma is undefined on {sorted(missing)}")
    extra = set(sig) - set(c.nodes)
    if extra:
        raise IncompleteSigma(f"sigma is defined on non-nodes {sorted(extra)}")
    for x, s in sig.items():
        if s not in t:
            raise UnknownNode(f"sigma sends {x!r} to unknown node {s!r}")
    if witness is None and len(c) > subtree_search_cap:
        raise SearchCapExceededWithoutWitness(
            f"candidate has {len(c)} nodes, cap is {subtree_search_cap}; supply a witness")

    bad = []
    c1 = is_condensed(c)
    if not c1:
        bad.append("candidate is not condensed")

    c2 = True
    for p, x in c.edges:
        if not t.lt(sig[p], sig[x]):
            c2 = False
            bad.append(f"{p!r} < {x!r} but sigma gives {sig[p]!r}, {sig[x]!r}")
    unhit = set(t.nodes) - set(sig.values())
    if unhit:
        c2 = False
        bad.append(f"sigma misses {sorted(unhit)}")

    source_paths = set(paths(t))
    images = set()
    c3 = True
    for P in paths(c):
        img = frozenset(sig[x] for x in P)
        images.add(img)
        if len(img) != len(P) or img not in source_paths:
            c3 = False
            bad.append(f"path {sorted(P)} maps to {sorted(img)}, not a path copy")
    missed = source_paths - images
    c4 = not missed
    for P in sorted(missed, key=sorted):
        bad.append(f"source path {sorted(P)} is not an image")

    if witness is not None:
        W = frozenset(witness)
        if not W <= set(c.nodes):
            raise UnknownNode(f"witness nodes {sorted(W - set(c.nodes))} are not in the candidate")
        found = W if _iso_on(t, c, sig, W) else None
        if found is None:
            bad.append("supplied witness is not mapped isomorphically onto the source")
    else:
        found = _search_embedding(t, c, sig)
        if found is None:
            bad.append("no node set is mapped isomorphically onto the source")
    return ForkingVerdict(c1, c2, c3, c4, found is not None, found, tuple(bad))
