"""Reference trees used throughout the tests and the CLI."""

from __future__ import annotations

from .order import Tree, build_tree

__all__ = [
    "six_bridge_tree",
    "six_bridge_bridges",
    "fork_tree",
    "trident_tree",
    "trident_candidates",
    "chain",
    "cherry",
    "single",
    "perfect_binary",
]

SIX_BRIDGE_LENGTHS = {"t1": 3, "t2": 2, "t3": 2, "t4": 2, "t5": 2, "t6": 2}
SIX_BRIDGE_SHAPE = [("t1", "t2"), ("t1", "t3"), ("t2", "t4"), ("t2", "t5"), ("t2", "t6")]


def six_bridge_bridges() -> dict:
    """Bridge name -> its nodes, bottom to top (``t1``, ``t1.1``, ...)."""
    return {b: [b] + [f"{b}.{k}" for k in range(1, n)] for b, n in SIX_BRIDGE_LENGTHS.items()}


def six_bridge_tree() -> Tree:
    """Six chains glued in a 1-2-3 shape; condenses to six nodes."""
    br = six_bridge_bridges()
    edges = []
    for chain_nodes in br.values():
        edges.extend(zip(chain_nodes, chain_nodes[1:]))
    for lo, hi in SIX_BRIDGE_SHAPE:
        edges.append((br[lo][-1], br[hi][0]))
    return build_tree([x for c in br.values() for x in c], edges)


def fork_tree() -> Tree:
    return build_tree(["t", "u", "v", "w"], [("t", "u"), ("u", "v"), ("u", "w")])


def trident_tree() -> Tree:
    return build_tree(["t", "u", "x", "y", "z"],
                      [("t", "u"), ("u", "x"), ("u", "y"), ("u", "z")])


def _candidate(left, right):
    nodes = ["t", "u0", "u1"] + [f"{a}0" for a in left] + [f"{a}1" for a in right]
    edges = [("t", "u0"), ("t", "u1")]
    edges += [("u0", f"{a}0") for a in left] + [("u1", f"{a}1") for a in right]
    tree = build_tree(nodes, edges)
    sigma = {x: x[0] for x in nodes}  # erase the subscript
    return tree, sigma


def trident_candidates() -> dict:
    """The two seven-node forkings of :func:`trident_tree`, each with its map."""
    return {"c1": _candidate("xy", "xz"), "c2": _candidate("xy", "yz")}


def chain(n: int, prefix: str = "c") -> Tree:
    nodes = [f"{prefix}{k}" for k in range(n)]
    return build_tree(nodes, list(zip(nodes, nodes[1:])))


def single(label: str = "a") -> Tree:
    return build_tree([label], [])


def cherry() -> Tree:
    return build_tree(["r", "a", "b"], [("r", "a"), ("r", "b")])


def perfect_binary(depth: int) -> Tree:
    """Heap-numbered perfect binary tree with ``2**depth - 1`` nodes."""
    n = (1 << depth) - 1
    nodes = [f"h{k}" for k in range(1, n + 1)]
    edges = [(f"h{k // 2}", f"h{k}") for k in range(2, n + 1)]
    return build_tree(nodes, edges)
