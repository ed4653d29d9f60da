import numpy as np
import pytest
from hypothesis import given

from arbor import _kernels
from arbor.branching import _region_masks
from conftest import trees

BACKENDS = _kernels.backends()


def test_backend_selected():
    assert _kernels.BACKEND in BACKENDS


@pytest.mark.skipif(len(BACKENDS) < 2, reason="compiled backend not built")
@given(trees(max_nodes=12))
def test_backends_agree(t):
    py, cy = BACKENDS["python"], BACKENDS["cython"]
    parent = np.array(t._parent, dtype=np.int64)
    order = np.array(t._order, dtype=np.int64)
    a, b = py.ancestor_matrix(parent, order), cy.ancestor_matrix(parent, order)
    assert np.array_equal(a, b)
    assert np.array_equal(py.comparability_classes(a), cy.comparability_classes(a))
    up, comp = _region_masks(t)
    assert np.array_equal(py.branching2_sizes(up, comp), cy.branching2_sizes(up, comp))


def test_matrix_semantics():
    from arbor import fixtures as F
    t = F.fork_tree()
    m = t.matrix
    i, j = t.index("v"), t.index("t")
    assert m[i, j] == 1 and m[j, i] == 0 and m[i, i] == 0


def test_brute_force_limit():
    py = BACKENDS["python"]
    n = py.MAX_BRUTE_FORCE + 1
    with pytest.raises(ValueError):
        py.branching2_sizes(np.zeros(n, dtype=np.uint64), np.zeros(n, dtype=np.uint64))
