"""Pure-Python implementations of the hot kernels.

Same contracts as the compiled ``_ckernels`` module; used when the
extension is unavailable or ``ARBOR_PURE_PYTHON`` is set.
"""

import numpy as np

MAX_BRUTE_FORCE = 20


def ancestor_matrix(parent, order):
    """Return ``m`` with ``m[i, j] == 1`` iff node ``j`` is a strict ancestor of ``i``.

    ``parent[i]`` is ``-1`` for roots; ``order`` lists every index with
    parents before children.
    """
    n = len(parent)
    m = np.zeros((n, n), dtype=np.uint8)
    for i in order:
        p = parent[i]
        if p >= 0:
            m[i] = m[p]
            m[i, p] = 1
    return m


def comparability_classes(anc):
    """Group nodes whose comparability rows coincide.

    Returns ``rep`` where ``rep[i]`` is the least index with the same
    row as ``i``. The row of ``i`` is the set of ``z`` with ``z`` equal,
    above or below ``i``.
    """
    n = anc.shape[0]
    comp = anc | anc.T
    np.fill_diagonal(comp, 1)
    rep = np.empty(n, dtype=np.int64)
    seen = {}
    for i in range(n):
        rep[i] = seen.setdefault(comp[i].tobytes(), i)
    return rep


def _antichains(comp, m):
    # (mask, size, upward closure) for every antichain, the empty one included
    out = []
    stack = [(0, 0, 0, 0)]
    while stack:
        start, mask, size, up = stack.pop()
        out.append((mask, size, up))
        for i in range(start, m):
            if not comp[i] & mask:
                stack.append((i + 1, mask | (1 << i), size + 1, up))
    return out


def branching2_sizes(up, comp):
    """Decide, for each ``k``, whether every antichain is underlain by one of size ``k``.

    ``up[i]`` is the bitmask of nodes at or above ``i`` and ``comp[i]``
    the bitmask of nodes comparable to ``i`` (itself included). Returns
    a ``uint8`` array ``ok`` of length ``m + 1``.
    """
    m = len(up)
    if m > MAX_BRUTE_FORCE:
        raise ValueError(f"{m} nodes exceeds brute-force limit {MAX_BRUTE_FORCE}")
    up = [int(x) for x in up]
    comp = [int(x) for x in comp]
    chains = []
    for mask, size, _ in _antichains(comp, m):
        closure = 0
        rest = mask
        while rest:
            low = rest & -rest
            closure |= up[low.bit_length() - 1]
            rest ^= low
        chains.append((mask, size, closure))

    full = 1 << m
    reach = np.zeros((m + 1, full), dtype=bool)
    for _, size, closure in chains:
        reach[size, closure] = True
    idx = np.arange(full)
    for b in range(m):
        lo = idx[((idx >> b) & 1) == 0]
        reach[:, lo] |= reach[:, lo | (1 << b)]
    masks = np.fromiter((c[0] for c in chains), dtype=np.int64, count=len(chains))
    return reach[:, masks].all(axis=1).astype(np.uint8)
