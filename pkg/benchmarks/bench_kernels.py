"""Compare the compiled and pure-Python kernels on the same inputs.

Run with ``python3 benchmarks/bench_kernels.py [--nodes N] [--repeat R]``.
"""

import argparse
import timeit

import numpy as np

from arbor import _kernels
from arbor.branching import _region_masks
from arbor.generate import GeneratorConfig, generate_tree


def inputs(nodes, seed):
    t = generate_tree(GeneratorConfig(nodes, nodes, (0.3, 0.3, 0.4), seed)).tree
    parent = np.array(t._parent, dtype=np.int64)
    order = np.array(t._order, dtype=np.int64)
    return t, parent, order


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--nodes", type=int, default=400, help="tree size for the matrix kernels")
    ap.add_argument("--brute", type=int, default=16, help="region size for the antichain kernel")
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    t, parent, order = inputs(args.nodes, args.seed)
    small = inputs(args.brute, args.seed)[0]
    up, comp = _region_masks(small)
    anc = _kernels.backends()["python"].ancestor_matrix(parent, order)

    cases = {
        f"ancestor_matrix n={args.nodes}": lambda k: k.ancestor_matrix(parent, order),
        f"comparability_classes n={args.nodes}": lambda k: k.comparability_classes(anc),
        f"branching2_sizes m={args.brute}": lambda k: k.branching2_sizes(up, comp),
    }
    backends = _kernels.backends()
    print(f"{'kernel':<34}" + "".join(f"{name:>12}" for name in backends) + f"{'speedup':>10}")
    for label, fn in cases.items():
        times = {}
        for name, mod in backends.items():
            times[name] = min(timeit.repeat(lambda: fn(mod), number=1, repeat=args.repeat))
        row = f"{label:<34}" + "".join(f"{times[n] * 1e3:>10.2f}ms" for n in backends)
        if "cython" in times:
            row += f"{times['python'] / times['cython']:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
