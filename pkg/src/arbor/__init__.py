"""Finite order-theoretic trees: branching, condensation, homeomorphism and condensed extensions."""

from ._kernels import BACKEND
from .branching import (
    branching_report,
    is_branching1,
    is_branching2,
    n_branching1,
    n_branching2_bruteforce,
    undividedness_classes,
)
from .condense import bridge_partition, condensation, is_condensed, maximal_bridge
from .errors import ArborError
from .forking import Variant, build_extension, verify_forking
from .homeo import canonical_form, homeomorphic, isomorphic
from .io import TreeDocument, emit_dot, parse_document, serialize
from .order import Forest, Tree, build_forest, build_tree, components, paths

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "ArborError",
    "Forest",
    "Tree",
    "TreeDocument",
    "Variant",
    "branching_report",
    "bridge_partition",
    "build_extension",
    "build_forest",
    "build_tree",
    "canonical_form",
    "components",
    "condensation",
    "emit_dot",
    "homeomorphic",
    "is_branching1",
    "is_branching2",
    "is_condensed",
    "isomorphic",
    "maximal_bridge",
    "n_branching1",
    "n_branching2_bruteforce",
    "parse_document",
    "paths",
    "serialize",
    "undividedness_classes",
    "verify_forking",
]
