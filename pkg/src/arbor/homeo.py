"""Refinements, homeomorphic abstractions, isomorphism and homeomorphism of trees."""

from __future__ import annotations

from dataclasses import dataclass, field

from .condense import Quotient, condensation, maximal_bridge, quotient_by
from .errors import LabelCollision, NotAnEdge, NotHomeomorphic, NotWithinBridge
from .order import Forest, Tree, as_tree, build_forest

__all__ = [
    "Insertion",
    "RefinementSpec",
    "BridgePartition",
    "CanonicalForm",
    "refine",
    "homeomorphic_abstraction",
    "canonical_form",
    "subtree_classes",
    "isomorphic",
    "isomorphism",
    "homeomorphic",
    "is_refinement_of",
    "common_refinement_witness",
    "with_bridge_lengths",
]


@dataclass(frozen=True)
class Insertion:
    lower: str
    upper: str
    chain: tuple  # fresh labels, bottom to top


@dataclass(frozen=True)
class RefinementSpec:
    insertions: tuple = ()

    @classmethod
    def of(cls, *triples):
        return cls(tuple(Insertion(lo, up, tuple(ch)) for lo, up, ch in triples))


@dataclass(frozen=True)
class BridgePartition:
    cells: tuple = field(default=())


@dataclass(frozen=True)
class CanonicalForm:
    code: str

    def __str__(self):
        return self.code


def refine(t: Tree, spec: RefinementSpec) -> Tree:
    """Splice each insertion chain between ``lower`` and its child ``upper``.

    Both endpoints must already lie in one maximal bridge. Several
    insertions on the same edge are stacked in the order given.
    """
    taken = set(t.nodes)
    spliced = {}  # upper -> list of new labels, bottom to top
    for ins in spec.insertions:
        t.index(ins.lower)
        t.index(ins.upper)
        if t.parent(ins.upper) != ins.lower:
            raise NotAnEdge(f"{ins.upper!r} is not a child of {ins.lower!r}")
        if ins.upper not in maximal_bridge(t, ins.lower):
            raise NotWithinBridge(
                f"{ins.lower!r} and {ins.upper!r} lie in different maximal bridges")
        for x in ins.chain:
            if x in taken:
                raise LabelCollision(f"label {x!r} is already in use")
            taken.add(x)
        spliced.setdefault(ins.upper, []).extend(ins.chain)
    edges = []
    for p, c in t.edges:
        chain = spliced.get(c, [])
        prev = p
        for x in chain:
            edges.append((prev, x))
            prev = x
        edges.append((prev, c))
    return as_tree(build_forest(sorted(taken), edges))


def homeomorphic_abstraction(t: Tree, p) -> Quotient:
    cells = p.cells if isinstance(p, BridgePartition) else p
    return quotient_by(t, cells)


def subtree_classes(t: Forest, table: dict | None = None) -> dict:
    """Map each node to an integer naming its rooted subtree up to isomorphism.

    Passing the same ``table`` for two forests makes their ids comparable.
    """
    table = {} if table is None else table
    ids = {}
    for x in reversed(t.topological()):
        key = tuple(sorted(ids[c] for c in t.children(x)))
        ids[x] = table.setdefault(key, len(table))
    return ids


def canonical_form(t: Forest) -> CanonicalForm:
    """Nested-parenthesis code with children sorted; one entry per root for forests."""
    codes = {}
    for x in reversed(t.topological()):
        codes[x] = "(" + "".join(sorted(codes[c] for c in t.children(x))) + ")"
    return CanonicalForm("".join(sorted(codes[r] for r in t.roots)))


def isomorphic(a: Forest, b: Forest) -> bool:
    return canonical_form(a) == canonical_form(b)


def isomorphism(a: Tree, b: Tree):
    """Return an order isomorphism ``{a node: b node}``, or None."""
    table = {}
    ia = subtree_classes(a, table)
    ib = subtree_classes(b, table)
    if len(a) != len(b) or ia[a.root] != ib[b.root]:
        return None
    mapping = {a.root: b.root}
    stack = [a.root]
    while stack:
        x = stack.pop()
        y = mapping[x]
        xs = sorted(a.children(x), key=lambda c: (ia[c], c))
        ys = sorted(b.children(y), key=lambda c: (ib[c], c))
        for cx, cy in zip(xs, ys):
            mapping[cx] = cy
            stack.append(cx)
    return mapping


def homeomorphic(a: Tree, b: Tree) -> bool:
    """Trees are homeomorphic iff their condensations are isomorphic."""
    return isomorphic(condensation(a).quotient_tree, condensation(b).quotient_tree)


def _bipartite_perfect(left, right, ok):
    # Kuhn's augmenting paths; ok(l, r) says the pair may be matched
    if len(left) != len(right):
        return False
    match = {}

    def augment(l, seen):
        for r in right:
            if r in seen or not ok(l, r):
                continue
            seen.add(r)
            if r not in match or augment(match[r], seen):
                match[r] = l
                return True
        return False

    return all(augment(l, set()) for l in left)


def is_refinement_of(candidate: Tree, x: Tree) -> bool:
    """Whether ``candidate`` is, up to isomorphism, a refinement of ``x``.

    The condensations must be isomorphic through a map under which every
    bridge of ``candidate`` is at least as long as its partner in ``x``.
    """
    qc, qx = condensation(candidate), condensation(x)
    tc, tx = qc.quotient_tree, qx.quotient_tree
    table = {}
    ic = subtree_classes(tc, table)
    ix = subtree_classes(tx, table)
    if len(tc) != len(tx) or ic[tc.root] != ix[tx.root]:
        return False
    by_class = {}
    for v in tx.nodes:
        by_class.setdefault(ix[v], []).append(v)
    fits = {}
    for u in reversed(tc.topological()):
        for v in by_class.get(ic[u], []):
            fits[u, v] = (
                len(qc.members_of[u]) >= len(qx.members_of[v])
                and _bipartite_perfect(tc.children(u), tx.children(v),
                                       lambda l, r: fits.get((l, r), False))
            )
    return fits[tc.root, tx.root]


def with_bridge_lengths(q: Quotient, lengths: dict, prefix="") -> Tree:
    """Expand each quotient node into a chain of the given length.

    Node ``y`` becomes ``prefix+y``, ``prefix+y+'.1'``, ... bottom to top.
    """
    qt = q.quotient_tree

    def chain(y):
        return [f"{prefix}{y}"] + [f"{prefix}{y}.{k}" for k in range(1, lengths[y])]

    chains = {y: chain(y) for y in qt.nodes}
    nodes = [x for c in chains.values() for x in c]
    edges = []
    for y, c in chains.items():
        edges.extend(zip(c, c[1:]))
        p = qt.parent(y)
        if p is not None:
            edges.append((chains[p][-1], c[0]))
    return as_tree(build_forest(nodes, edges))


def common_refinement_witness(a: Tree, b: Tree) -> Tree:
    """A tree isomorphic to refinements of both ``a`` and ``b``.

    Bridges matched by an isomorphism of the condensations are kept when
    their lengths agree and concatenated otherwise.
    """
    qa, qb = condensation(a), condensation(b)
    f = isomorphism(qa.quotient_tree, qb.quotient_tree)
    if f is None:
        raise NotHomeomorphic("condensations are not isomorphic")
    taken = set(a.nodes)
    extra = {}  # top node of a bridge of a -> labels appended above it
    for y, bridge in qa.members_of.items():
        la, lb = len(bridge), len(qb.members_of[f[y]])
        if la == lb:
            continue
        top = max(bridge.nodes, key=a.depth)
        labels = []
        k = 1
        while len(labels) < lb:
            lab = f"{top}+{k}"
            k += 1
            if lab not in taken:
                taken.add(lab)
                labels.append(lab)
        extra[top] = labels
    edges = []
    for top, labels in extra.items():
        edges.extend(zip([top] + labels, labels))
    for p, c in a.edges:
        edges.append((extra[p][-1] if p in extra else p, c))
    out = as_tree(build_forest(sorted(taken), edges))
    if not (is_refinement_of(out, a) and is_refinement_of(out, b)):
        raise AssertionError("witness failed refinement verification")
    return out
