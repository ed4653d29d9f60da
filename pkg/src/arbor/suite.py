"""Registry of checkable properties and a seeded runner over random trees.

Each property takes a tree and a seeded RNG and returns None on success
or a short description of the first violation found.
"""

from __future__ import annotations

import contextlib
import random
from dataclasses import dataclass, field
from itertools import combinations

from . import branching as B
from . import condense as C
from . import forking as K
from . import homeo as H
from . import order as O
from .errors import NotHomeomorphic
from .fixtures import perfect_binary
from .generate import random_trees
from .io import TreeDocument, serialize

__all__ = [
    "Proposition",
    "PropResult",
    "SuiteReport",
    "REGISTRY",
    "register",
    "run_suite",
    "spine_mutation",
]

SUBSET_SAMPLES = 160
EXHAUSTIVE_SUBSETS = 8  # enumerate every subset up to this many nodes


@dataclass(frozen=True)
class Proposition:
    id: str
    module: str
    statement: str
    check: object = field(repr=False)


REGISTRY: dict = {}


def register(pid, module, statement):
    def deco(fn):
        if pid in REGISTRY:
            raise ValueError(f"duplicate proposition id {pid!r}")
        REGISTRY[pid] = Proposition(pid, module, statement, fn)
        return fn
    return deco


@contextlib.contextmanager
def spine_mutation(slack=1):
    """Temporarily break the maximal-bridge walk by ``slack`` nodes."""
    old = C._SPINE_SLACK
    C._SPINE_SLACK = slack
    try:
        yield
    finally:
        C._SPINE_SLACK = old


# -- helpers ---------------------------------------------------------------

def _subsets(nodes, rng, nonempty=True):
    nodes = sorted(nodes)
    n = len(nodes)
    if n <= EXHAUSTIVE_SUBSETS:
        start = 1 if nonempty else 0
        return [frozenset(x for k, x in enumerate(nodes) if m >> k & 1)
                for m in range(start, 1 << n)]
    out = set()
    while len(out) < SUBSET_SAMPLES:
        s = frozenset(x for x in nodes if rng.random() < 0.5)
        if s or not nonempty:
            out.add(s)
    return sorted(out, key=sorted)


def _segments(t):
    """Every convex chain ``[x, y]`` with ``x <= y``."""
    out = []
    for y in t.nodes:
        chain = t.chain_to(y)
        for k in range(len(chain)):
            out.append(frozenset(chain[k:]))
    return out


def _stems(t):
    return [s for s in t.nodes if B.above_stem(t, s)]


def _antichains(t):
    nodes = list(t.nodes)
    out = []

    def go(k, chosen):
        if k == len(nodes):
            out.append(frozenset(chosen))
            return
        go(k + 1, chosen)
        x = nodes[k]
        if all(not t.comparable(x, y) for y in chosen):
            chosen.append(x)
            go(k + 1, chosen)
            chosen.pop()

    go(0, [])
    return out


def _random_refinement(t, rng):
    ins = []
    k = 0
    for p, c in t.edges:
        if len(t.children(p)) == 1 and rng.random() < 0.5:
            chain = []
            for _ in range(rng.randint(1, 2)):
                while f"r{k}" in t:
                    k += 1
                chain.append(f"r{k}")
                k += 1
            ins.append((p, c, chain))
    return H.refine(t, H.RefinementSpec.of(*ins))


def _check(cond, msg):
    return None if cond else msg


# -- order-core ------------------------------------------------------------

@register("component-partition", "order-core",
          "components partition the forest and each equals the closure set of its members")
def _p_components(t, rng):
    forests = [t] + [B.region(t, s) for s in _stems(t)]
    for f in forests:
        comps = O.components(f)
        seen = set()
        for c in comps:
            if seen & c.nodes:
                return f"components overlap in {sorted(f.nodes)}"
            seen |= c.nodes
            for x in c.nodes:
                if O.sigma_component(f, x) != c.nodes:
                    return f"closure set of {x!r} differs from its component"
        if seen != set(f.nodes):
            return "components do not cover the forest"
    return None


@register("path-intersection-stem", "order-core",
          "two distinct paths meet in a stem")
def _p_path_meet(t, rng):
    for P, Q in combinations(O.paths(t), 2):
        if not O.is_stem(t, P & Q):
            return f"{sorted(P)} and {sorted(Q)} meet in {sorted(P & Q)}"
    return None


@register("maximal-antichain-path", "order-core",
          "a maximal antichain meets every path in exactly one node")
def _p_max_antichain(t, rng):
    ps = O.paths(t)
    for X in _antichains(t):
        if not X or any(all(not t.comparable(x, y) for y in X) for x in t.nodes if x not in X):
            continue
        for P in ps:
            if len(X & P) != 1:
                return f"maximal antichain {sorted(X)} meets {sorted(P)} in {len(X & P)} nodes"
    return None


@register("order-region-duality", "order-core",
          "x is below y exactly when y is above x")
def _p_region(t, rng):
    for x in t.nodes:
        for y in t.nodes:
            if (x in O.order_region(t, {y}, "<")) != (y in O.order_region(t, {x}, ">")):
                return f"region duality fails for {x!r}, {y!r}"
    return None


@register("bridge-oracle", "order-core",
          "the single-child rule for bridges agrees with quantifying over paths")
def _p_bridge_oracle(t, rng):
    for A in set(_segments(t)) | set(_subsets(t.nodes, rng)):
        if O.is_bridge(t, A) != O.is_bridge_by_paths(t, A):
            return f"is_bridge disagrees with path check on {sorted(A)}"
    return None


@register("maximal-bridge-beta", "condense",
          "the walked maximal bridge equals the comparability-profile class")
def _p_beta(t, rng):
    for x in t.nodes:
        walked = C.maximal_bridge(t, x).nodes
        literal = frozenset(y for y in t.nodes if C.beta(t, x, y))
        if walked != literal:
            return f"maximal bridge of {x!r} is {sorted(walked)}, formula gives {sorted(literal)}"
    classes = set(C.beta_classes(t))
    walked = {b.nodes for b in C.bridge_partition(t)}
    return _check(classes == walked, "kernel classes differ from the bridge partition")


# -- branching -------------------------------------------------------------

@register("undivided-equivalence", "branching",
          "undividedness at a stem is an equivalence relation on the paths through it")
def _p_undivided(t, rng):
    for s in _stems(t):
        through = B._paths_through_stem(t, s)
        rel = {(i, j): B.undivided(t, s, P, Q)
               for i, P in enumerate(through) for j, Q in enumerate(through)}
        n = len(through)
        for i in range(n):
            if not rel[i, i]:
                return f"not reflexive at {s!r}"
            for j in range(n):
                if rel[i, j] != rel[j, i]:
                    return f"not symmetric at {s!r}"
                for k in range(n):
                    if rel[i, j] and rel[j, k] and not rel[i, k]:
                        return f"not transitive at {s!r}"
    return None


@register("class-component-bijection", "branching",
          "undividedness classes correspond one to one with components above the stem")
def _p_class_component(t, rng):
    for s in _stems(t):
        uc = B.undividedness_classes(t, s)
        comps = O.components(B.region(t, s))
        matched = [c for _, c in uc.correspondence]
        if sorted(matched, key=lambda c: c.representative) != comps:
            return f"classes at {s!r} do not match components one to one"
        above = B.above_stem(t, s)
        for cls, comp in uc.correspondence:
            union = frozenset().union(*cls) & above
            if union != comp.nodes:
                return f"class union at {s!r} differs from component {sorted(comp.nodes)}"
    return None


@register("branching1-implies-branching2", "branching",
          "a first-sense branching stem is second-sense branching")
def _p_b1_b2(t, rng):
    for s in t.nodes:
        if B.is_branching1(t, s) and not B.is_branching2(t, s):
            return f"branching1 but not branching2 at {s!r}"
    return None


@register("bar-criterion", "branching",
          "a stem with nodes above it is second-sense branching iff every bar has two or more nodes")
def _p_bar(t, rng):
    for s in _stems(t):
        small = any(len(X) < 2 for X in B.bars(t, s))
        if B.is_branching2(t, s) == small:
            return f"bar criterion fails at {s!r}"
    return None


@register("n2-implies-n1", "branching",
          "n-branching in the second sense implies n-branching in the first")
def _p_n2_n1(t, rng):
    for s in t.nodes:
        n2 = B.n_branching2_bruteforce(t, s)
        if n2 is not None and B.n_branching1(t, s) != n2:
            return f"n2={n2} but n1={B.n_branching1(t, s)} at {s!r}"
    return None


@register("finite-coincidence", "branching",
          "on finite trees both branching degrees coincide at every stem")
def _p_coincide(t, rng):
    for s in t.nodes:
        n1 = B.n_branching1(t, s)
        n2 = B.n_branching2_bruteforce(t, s)
        if n1 != n2:
            return f"n1={n1}, n2={n2} at {s!r}"
    return _check(B.n_branching2_bruteforce(t, None) == len(t.roots),
                  "degree at the empty stem is not the root count")


@register("bridge-initial-segment", "branching",
          "every path above a stem starts with a maximal initial segment that is a bridge")
def _p_initial_segment(t, rng):
    for s in _stems(t):
        reg = B.region(t, s)
        for P in O.paths(reg):
            seg = B.bridge_initial_segment(t, s, P)
            chain = sorted(P, key=reg.depth)
            k = len(seg)
            if frozenset(chain[:k]) != seg or not O.is_bridge_by_paths(reg, seg):
                return f"bad initial segment {sorted(seg)} at {s!r}"
            if k < len(chain) and O.is_bridge_by_paths(reg, frozenset(chain[:k + 1])):
                return f"initial segment {sorted(seg)} at {s!r} is not maximal"
    return None


# -- condense --------------------------------------------------------------

def _bridges(t):
    return [A for A in _segments(t) if O.is_bridge_by_paths(t, A)]


@register("bridge-union", "condense",
          "bridges meeting a common bridge have a bridge as union")
def _p_bridge_union(t, rng):
    brs = _bridges(t)
    for a, b in combinations(brs, 2):
        if a & b and not O.is_bridge_by_paths(t, a | b):
            return f"union of bridges {sorted(a)}, {sorted(b)} is not a bridge"
    return None


@register("bridge-partition", "condense",
          "maximal bridges partition the tree and each bridge lies in exactly one")
def _p_bridge_partition(t, rng):
    maxi = [b.nodes for b in C.bridge_partition(t)]
    if sum(map(len, maxi)) != len(t) or frozenset().union(*maxi) != set(t.nodes):
        return "maximal bridges do not partition the nodes"
    brs = _bridges(t)
    for A in brs:
        if sum(1 for M in maxi if A <= M) != 1:
            return f"bridge {sorted(A)} is not in exactly one maximal bridge"
    for M in maxi:
        if any(M < A for A in brs):
            return f"{sorted(M)} is not maximal"
    return None


@register("order-transfer", "condense",
          "strict order and comparability pass to maximal bridges and back")
def _p_order_transfer(t, rng):
    q = C.condensation(t)
    qt = q.quotient_tree
    for x in t.nodes:
        for y in t.nodes:
            bx, by = q.class_of[x], q.class_of[y]
            if t.lt(x, y) and bx != by:
                if not all(t.lt(a, b) for a in q.members_of[bx].nodes for b in q.members_of[by].nodes):
                    return f"{x!r} < {y!r} but their bridges are not ordered"
            if not t.comparable(x, y):
                if any(t.comparable(a, b) for a in q.members_of[bx].nodes for b in q.members_of[by].nodes):
                    return f"{x!r}, {y!r} incomparable but bridge members are comparable"
            if t.comparable(x, y) != qt.comparable(bx, by):
                return f"comparability of {x!r}, {y!r} not reflected in the quotient"
    return None


@register("four-way-equivalence", "condense",
          "shared bridge, equal maximal bridge, equal path family and equal profile agree")
def _p_four_way(t, rng):
    fam = {x: C.path_family(t, x) for x in t.nodes}
    for x in t.nodes:
        for y in t.nodes:
            lo, hi = (x, y) if t.le(x, y) else (y, x)
            if t.comparable(x, y):
                hull = frozenset(z for z in t.chain_to(hi) if t.le(lo, z))
                c1 = O.is_bridge_by_paths(t, hull)
            else:
                c1 = False
            c2 = C.maximal_bridge(t, x).nodes == C.maximal_bridge(t, y).nodes
            c3 = fam[x] == fam[y]
            c4 = C.beta(t, x, y)
            if not c1 == c2 == c3 == c4:
                return f"equivalence fails at {x!r}, {y!r}: {(c1, c2, c3, c4)}"
    return None


@register("condensation-is-tree", "condense",
          "the condensation is a tree ordered exactly as its bridges")
def _p_cond_tree(t, rng):
    q = C.condensation(t)
    qt = q.quotient_tree
    if not qt.is_tree:
        return "condensation has more than one root"
    for a in qt.nodes:
        for b in qt.nodes:
            lifted = a != b and all(t.lt(x, y) for x in q.members_of[a].nodes
                                    for y in q.members_of[b].nodes)
            if qt.lt(a, b) != lifted:
                return f"quotient order differs from bridge order at {a!r}, {b!r}"
    return _check(C.is_well_founded(qt), "condensation is not well-founded")


@register("condensation-idempotent", "condense",
          "bridges of a condensation are single nodes, so condensing again changes nothing")
def _p_idempotent(t, rng):
    qt = C.condensation(t).quotient_tree
    if not all(len(b) == 1 for b in C.bridge_partition(qt)):
        return "condensation has a bridge with several nodes"
    return _check(H.isomorphic(C.condensation(qt).quotient_tree, qt),
                  "second condensation is not isomorphic to the first")


@register("path-family-isomorphism", "condense",
          "sending a bridge to its path family is an isomorphism onto reverse inclusion")
def _p_path_family(t, rng):
    q = C.condensation(t)
    qt = q.quotient_tree
    fam = {y: C.path_family(t, y) for y in qt.nodes}
    if len(set(fam.values())) != len(fam):
        return "path families are not distinct across bridges"
    for a in qt.nodes:
        for b in qt.nodes:
            if qt.lt(a, b) != (fam[a] > fam[b]):
                return f"order and family inclusion differ at {a!r}, {b!r}"
    return None


def _transfer(check_src, check_dst, image):
    def run(t, rng):
        q = C.condensation(t)
        src, dst = (t, q.quotient_tree) if image else (q.quotient_tree, t)
        for X in _subsets(src.nodes, rng):
            if check_src(src, X):
                Y = C.quotient_image(q, X) if image else C.quotient_preimage(q, X)
                if not check_dst(dst, Y):
                    return f"{sorted(X)} keeps the property but {sorted(Y)} does not"
        return None
    return run


for _name, _pred in [("antichain", O.is_antichain), ("linear", O.is_linear),
                     ("path", O.is_path), ("convex", O.is_convex),
                     ("downward-closed", O.is_downward_closed),
                     ("upward-closed", O.is_upward_closed)]:
    register(f"image-{_name}", "condense",
             f"a {_name} set of the tree has a {_name} image in the condensation")(
        _transfer(_pred, _pred, image=True))
    if _name != "antichain":
        register(f"preimage-{_name}", "condense",
                 f"a {_name} set of the condensation has a {_name} preimage in the tree")(
            _transfer(_pred, _pred, image=False))


@register("singular-greatest", "condense",
          "a path is singular iff its image has a greatest node; finite paths are singular")
def _p_singular(t, rng):
    q = C.condensation(t)
    for P in O.paths(t):
        pc = C.classify_path(t, P, q)
        if pc.kind is not C.PathClass.SINGULAR:
            return f"finite path {sorted(P)} classified as emergent"
    return None


@register("condensed-equivalences", "condense",
          "single-node bridges, distinct path families, isomorphism with the condensation "
          "and branching non-leaves all agree")
def _p_condensed_eq(t, rng):
    for tree in (t, C.condensation(t).quotient_tree):
        flags = (
            C.is_condensed(tree),
            C.is_condensed_by_paths(tree),
            H.isomorphic(tree, C.condensation(tree).quotient_tree),
            all(B.is_branching2(tree, s) for s in tree.nodes if tree.children(s)),
        )
        if len(set(flags)) != 1:
            return f"condensedness criteria disagree: {flags}"
    return None


@register("nonleaf-preimage", "condense",
          "a non-leaf quotient node pulls back to a final segment of a branching stem")
def _p_nonleaf(t, rng):
    return _check(C.nonleaf_preimage_check(t), "non-leaf preimage check failed")


# -- homeo -----------------------------------------------------------------

@register("homeomorphism-equivalence", "homeo",
          "trees are homeomorphic iff their condensations are isomorphic iff a common refinement exists")
def _p_homeo(t, rng):
    r = _random_refinement(t, rng)
    other = next(random_trees(1, rng.getrandbits(32), max_nodes=len(t) + 2))
    for a, b in ((t, r), (t, other), (r, t)):
        iso = H.isomorphic(C.condensation(a).quotient_tree, C.condensation(b).quotient_tree)
        if H.homeomorphic(a, b) != iso:
            return "homeomorphic disagrees with condensation isomorphism"
        try:
            w = H.common_refinement_witness(a, b)
        except NotHomeomorphic:
            w = None
        if (w is not None) != iso:
            return "common refinement found for non-isomorphic condensations or missed for isomorphic ones"
        if w is not None and not (H.is_refinement_of(w, a) and H.is_refinement_of(w, b)):
            return "witness is not a refinement of both trees"
    abstraction = H.homeomorphic_abstraction(t, [b.nodes for b in C.bridge_partition(t)])
    if not H.isomorphic(abstraction.quotient_tree, C.condensation(t).quotient_tree):
        return "abstraction by maximal bridges differs from the condensation"
    # split every maximal bridge into single nodes: a finer abstraction
    fine = H.homeomorphic_abstraction(t, [{x} for x in t.nodes])
    return _check(H.homeomorphic(fine.quotient_tree, t), "finest abstraction is not homeomorphic")


@register("refinement-invariance", "homeo",
          "refining a tree leaves its condensation unchanged up to isomorphism")
def _p_refine(t, rng):
    r = _random_refinement(t, rng)
    if not H.isomorphic(C.condensation(r).quotient_tree, C.condensation(t).quotient_tree):
        return "refinement changed the condensation"
    return _check(H.is_refinement_of(r, t), "refinement not recognised as one")


# -- forking ---------------------------------------------------------------

def _extensions(t):
    return [K.build_extension(t, v) for v in (K.Variant.REFINED, K.Variant.FULL)]


@register("extension-condensed", "forking",
          "both extension variants are condensed forests")
def _p_ext_condensed(t, rng):
    for e in _extensions(t):
        if not C.is_condensed(e.forest):
            return f"{e.variant} extension is not condensed"
    return None


@register("sigma-properties", "forking",
          "the projection is order preserving and onto, maps paths isomorphically and hits every path")
def _p_sigma(t, rng):
    for e in _extensions(t):
        f = e.forest
        for g in f.nodes:
            for h in f.ancestors(g):
                if not t.lt(K.sigma(e, h), K.sigma(e, g)):
                    return f"projection not order preserving at {h!r} < {g!r}"
        if set(e.sigma.values()) != set(t.nodes):
            return "projection is not onto"
        hit = {K.project_path(e, P) for P in O.paths(f)}
        if hit != set(O.paths(t)):
            return f"{e.variant} extension paths do not project onto all source paths"
    return None


@register("path-lifting", "forking",
          "every source path lifts into every component")
def _p_lift(t, rng):
    for e in _extensions(t):
        for comp in O.components(e.forest):
            for P in O.paths(t):
                L = K.lift_path(e, comp, P)
                if not L <= comp.nodes or K.project_path(e, L) != P:
                    return f"lift of {sorted(P)} is wrong in {e.variant}"
    return None


@register("component-isomorphism", "forking",
          "any two components of an extension are isomorphic via the bit-flip map")
def _p_comp_iso(t, rng):
    for e in _extensions(t):
        comps = O.components(e.forest)
        for a in comps:
            for b in comps:
                phi = K.component_isomorphism(e, a, b)
                if a == b and any(k != v for k, v in phi.items()):
                    return "map from a component to itself is not the identity"
    return None


@register("refined-identity", "forking",
          "the refined extension of a condensed tree is isomorphic to it")
def _p_refined_identity(t, rng):
    for tree in (t, C.condensation(t).quotient_tree):
        if C.is_condensed(tree):
            e = K.build_extension(tree, K.Variant.REFINED)
            if not H.isomorphic(e.forest, tree):
                return "refined extension of a condensed tree differs from it"
    return None


@register("embedded-copies", "forking",
          "restrictions of one total bit assignment form a copy of the source")
def _p_copies(t, rng):
    e = K.build_extension(t, K.Variant.FULL)
    for _ in range(3):
        chi = {x: rng.randint(0, 1) for x in t.nodes}
        copy = K.embedded_copy(e, chi)
        sub = e.forest.restrict(copy)
        for x in t.nodes:
            for y in t.nodes:
                fx = K.ExtNode(x, tuple(chi[z] for z in t.chain_to(x))).label
                fy = K.ExtNode(y, tuple(chi[z] for z in t.chain_to(y))).label
                if t.lt(x, y) != sub.lt(fx, fy):
                    return "copy is not order isomorphic to the source"
    return None


@register("verifier-soundness", "forking",
          "an extension component verifies as an extension; moving one node to another depth breaks it")
def _p_verifier(t, rng):
    e = K.build_extension(t, K.Variant.REFINED)
    cand = K.extension_candidate(e)
    chi = {x: 1 for x in t.nodes}
    witness = None
    if len(cand.candidate) > 20:
        witness = K.embedded_copy(e, chi) & frozenset(cand.candidate.nodes)
    v = K.verify_forking(t, cand, witness=witness)
    if not v.is_extension:
        return f"component rejected: {list(v.violations)}"
    depths = {t.depth(x) for x in t.nodes}
    if len(depths) < 2:
        return None
    x = rng.choice(sorted(cand.sigma_c))
    d = t.depth(cand.sigma_c[x])
    targets = sorted(y for y in t.nodes if t.depth(y) != d)
    bad = dict(cand.sigma_c)
    bad[x] = rng.choice(targets)
    v = K.verify_forking(t, K.ForkingCandidate(cand.candidate, bad), witness=witness)
    return _check(not v.is_forking, f"mutating {x!r} went undetected")


@register("full-two-components", "forking",
          "the full extension of a rooted tree has exactly two components")
def _p_two(t, rng):
    n = K.count_full_components(t)
    if n != 2:
        return f"full extension has {n} components"
    if len(t) <= 10 and K.approx_class_count(t) != 2:
        return "agreement-on-a-stem classes do not number two"
    return None


@register("refined-chain-law", "forking",
          "the refined extension of an n-chain is a perfect binary tree with 2^n - 1 nodes")
def _p_chain(t, rng):
    n = len(t)
    ch = O.build_tree([f"c{k}" for k in range(n)], [(f"c{k}", f"c{k + 1}") for k in range(n - 1)])
    e = K.build_extension(ch, K.Variant.REFINED)
    if len(e) != 2 ** n - 1:
        return f"{len(e)} nodes for a {n}-chain"
    return _check(H.isomorphic(e.forest, perfect_binary(n)), "not a perfect binary tree")


# -- runner ----------------------------------------------------------------

@dataclass
class PropResult:
    id: str
    passed: int = 0
    failed: int = 0
    message: str | None = None
    counterexample: str | None = None  # serialized document of the first failure

    def to_dict(self):
        return {"id": self.id, "passed": self.passed, "failed": self.failed,
                "message": self.message, "counterexample": self.counterexample}


@dataclass
class SuiteReport:
    samples: int
    seed: int
    results: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(r.failed == 0 for r in self.results.values())

    def to_dict(self):
        return {"samples": self.samples, "seed": self.seed, "ok": self.ok,
                "results": [r.to_dict() for r in self.results.values()]}


def run_suite(scope=None, samples: int = 500, seed: int = 0, max_nodes: int = 12,
              mutation: bool = False, trees=None) -> SuiteReport:
    """Run the selected properties over ``samples`` seeded random trees."""
    from .errors import UnknownPropositionId

    ids = list(REGISTRY) if not scope else list(scope)
    unknown = [p for p in ids if p not in REGISTRY]
    if unknown:
        raise UnknownPropositionId(f"unknown proposition ids {unknown}")
    corpus = list(trees) if trees is not None else list(random_trees(samples, seed, max_nodes))
    report = SuiteReport(len(corpus), seed, {p: PropResult(p) for p in ids})
    ctx = spine_mutation() if mutation else contextlib.nullcontext()
    with ctx:
        for k, t in enumerate(corpus):
            for p in ids:
                rng = random.Random(f"{seed}:{k}:{p}")
                try:
                    msg = REGISTRY[p].check(t, rng)
                except Exception as exc:  # a crash counts as a failure with its message
                    msg = f"{type(exc).__name__}: {exc}"
                res = report.results[p]
                if msg is None:
                    res.passed += 1
                else:
                    res.failed += 1
                    if res.counterexample is None:
                        res.message = msg
                        res.counterexample = serialize(
                            TreeDocument(f"counterexample-{p}", t, {"seed": str(seed), "sample": str(k)}))
    return report
