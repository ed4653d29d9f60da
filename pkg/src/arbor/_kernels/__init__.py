"""Hot kernels, compiled when available.

The Cython module ``_ckernels`` is used if it was built and the
environment variable ``ARBOR_PURE_PYTHON`` is unset or ``0``; otherwise
the pure-Python ``_pykernels`` module is used. ``BACKEND`` names the
active choice.
"""

import os

from . import _pykernels

if os.environ.get("ARBOR_PURE_PYTHON", "0") not in ("", "0"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        _impl = _pykernels

BACKEND = "cython" if _impl is not _pykernels else "python"

ancestor_matrix = _impl.ancestor_matrix
comparability_classes = _impl.comparability_classes
branching2_sizes = _impl.branching2_sizes
MAX_BRUTE_FORCE = _impl.MAX_BRUTE_FORCE


def backends():
    """Return ``{name: module}`` for every importable backend."""
    found = {"python": _pykernels}
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        found["cython"] = _ckernels
    return found
