"""JSON documents and Graphviz output."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import SchemaError
from .order import Forest, as_tree, build_forest

__all__ = [
    "TreeDocument",
    "parse_document",
    "load_document",
    "serialize",
    "parse_mapping",
    "parse_node_list",
    "emit_dot",
]


@dataclass(frozen=True)
class TreeDocument:
    name: str
    forest: Forest
    metadata: dict = field(default_factory=dict)

    @property
    def tree(self):
        return as_tree(self.forest)


def _loads(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc.msg}", field=f"line {exc.lineno} col {exc.colno}") from None


def parse_document(text: str) -> TreeDocument:
    """Parse ``{"nodes": [...], "edges": [[parent, child], ...]}``.

    Optional keys are ``name`` (string) and ``metadata`` (string map).
    """
    raw = _loads(text)
    if not isinstance(raw, dict):
        raise SchemaError("document must be a JSON object")
    unknown = set(raw) - {"name", "nodes", "edges", "metadata"}
    if unknown:
        raise SchemaError(f"unknown keys {sorted(unknown)}")
    nodes = raw.get("nodes")
    if not isinstance(nodes, list):
        raise SchemaError("expected a list", field="nodes")
    edges = raw.get("edges", [])
    if not isinstance(edges, list):
        raise SchemaError("expected a list", field="edges")
    for k, e in enumerate(edges):
        if not (isinstance(e, list) and len(e) == 2):
            raise SchemaError("edge must be a [parent, child] pair", field=f"edges[{k}]")
    name = raw.get("name", "")
    if not isinstance(name, str):
        raise SchemaError("expected a string", field="name")
    meta = raw.get("metadata", {})
    if not isinstance(meta, dict) or not all(
            isinstance(k, str) and isinstance(v, str) for k, v in meta.items()):
        raise SchemaError("expected a map of strings", field="metadata")
    forest = build_forest(nodes, [tuple(e) for e in edges])
    if len(forest.roots) == 1:
        forest = as_tree(forest)
    return TreeDocument(name, forest, dict(meta))


def load_document(path) -> TreeDocument:
    with open(path, encoding="utf-8") as fh:
        return parse_document(fh.read())


def serialize(doc: TreeDocument) -> str:
    """Canonical JSON: sorted nodes and edges, two-space indent, trailing newline."""
    out = {
        "name": doc.name,
        "nodes": list(doc.forest.nodes),
        "edges": [list(e) for e in sorted(doc.forest.edges)],
        "metadata": dict(sorted(doc.metadata.items())),
    }
    return json.dumps(out, indent=2) + "\n"


def parse_mapping(text: str) -> dict:
    """A JSON object of string to string, e.g. a node map."""
    raw = _loads(text)
    if not isinstance(raw, dict) or not all(
            isinstance(k, str) and isinstance(v, str) for k, v in raw.items()):
        raise SchemaError("expected an object mapping strings to strings")
    return raw


def parse_node_list(text: str) -> list:
    """A JSON list of labels, or a tree document whose nodes are taken."""
    raw = _loads(text)
    if isinstance(raw, dict):
        raw = raw.get("nodes")
    if not isinstance(raw, list) or not all(isinstance(x, str) for x in raw):
        raise SchemaError("expected a list of node labels")
    return raw


def _quote(s):
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def emit_dot(f: Forest, labels: dict | None = None, name: str = "T") -> str:
    """Deterministic DOT digraph with parent -> child edges."""
    lines = [f"digraph {_quote(name)} {{"]
    for x in f.nodes:
        if labels and x in labels:
            lines.append(f"  {_quote(x)} [label={_quote(labels[x])}];")
        else:
            lines.append(f"  {_quote(x)};")
    for p, c in sorted(f.edges):
        lines.append(f"  {_quote(p)} -> {_quote(c)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
