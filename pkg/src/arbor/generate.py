"""Seeded random rooted trees."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import InvalidConfig
from .io import TreeDocument
from .order import Tree, build_tree

__all__ = ["GeneratorConfig", "generate_tree", "random_trees", "random_corpus"]


@dataclass(frozen=True)
class GeneratorConfig:
    min_nodes: int = 1
    max_nodes: int = 12
    weights: tuple = (0.35, 0.3, 0.2, 0.15)  # P(k children), k = 0, 1, ...
    seed: int = 0

    def validate(self):
        if not 1 <= self.min_nodes <= self.max_nodes:
            raise InvalidConfig(f"bad node range {self.min_nodes}..{self.max_nodes}")
        if not 0 <= self.seed < 1 << 64:
            raise InvalidConfig("seed must be an unsigned 64-bit integer")
        w = tuple(self.weights)
        if not w or any(x < 0 for x in w) or sum(w) <= 0:
            raise InvalidConfig(f"bad shape weights {w}")
        if self.max_nodes > 1 and sum(w[1:]) <= 0 and self.min_nodes > 1:
            raise InvalidConfig("weights allow no children but more than one node is required")
        return self


def _tree(rng: random.Random, n: int, weights) -> Tree:
    ks = list(range(len(weights)))
    grow_w = list(weights[1:]) if sum(weights[1:]) > 0 else [1.0]
    grow_k = ks[1:] if sum(weights[1:]) > 0 else [1]
    edges = []
    queue = [0]
    count = 1
    while queue and count < n:
        x = queue.pop(0)
        k = rng.choices(ks, weights)[0]
        if k == 0 and not queue:
            # keep growing until the drawn size is reached
            k = rng.choices(grow_k, grow_w)[0]
        k = min(k, n - count)
        for _ in range(k):
            edges.append((f"n{x}", f"n{count}"))
            queue.append(count)
            count += 1
    return build_tree([f"n{i}" for i in range(count)], edges)


def generate_tree(cfg: GeneratorConfig) -> TreeDocument:
    cfg.validate()
    rng = random.Random(cfg.seed)
    n = rng.randint(cfg.min_nodes, cfg.max_nodes)
    t = _tree(rng, n, tuple(cfg.weights))
    return TreeDocument(f"random-{cfg.seed}", t, {"seed": str(cfg.seed)})


def random_trees(count: int, seed: int = 0, max_nodes: int = 12, min_nodes: int = 1):
    """Yield ``count`` trees with per-sample shape weights, all from one seed."""
    rng = random.Random(seed)
    for _ in range(count):
        k = rng.randint(2, 4)
        weights = tuple(rng.random() + (0.3 if j == 0 else 0.0) for j in range(k + 1))
        cfg = GeneratorConfig(min_nodes, max_nodes, weights, rng.getrandbits(64))
        yield generate_tree(cfg).tree


def random_corpus(count: int, seed: int = 0, max_nodes: int = 12) -> list:
    return list(random_trees(count, seed, max_nodes))
