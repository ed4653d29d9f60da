"""Command-line interface: ``arbor <command> ...``.

Exit status is 0 on success or a true verdict, 1 on a false verdict and
2 on usage or validation errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import branching as B
from . import condense as C
from . import forking as K
from . import homeo as H
from .errors import ArborError, InvalidConfig
from .generate import GeneratorConfig, generate_tree
from .io import TreeDocument, emit_dot, load_document, parse_mapping, parse_node_list, serialize
from .suite import REGISTRY, run_suite


def _read(path):
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(path, text):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _emit(obj):
    print(json.dumps(obj, indent=2, sort_keys=False))


def cmd_validate(args):
    doc = load_document(args.tree)
    f = doc.forest
    _emit({"name": doc.name, "nodes": len(f), "edges": len(f.edges),
           "roots": list(f.roots), "is_tree": f.is_tree})
    return 0


def cmd_branching(args):
    t = load_document(args.tree).tree
    stems = None if args.stem is None else [args.stem]
    if stems:
        t.index(args.stem)
    _emit(B.branching_report(t, stems, cap=args.cap).to_dict())
    return 0


def cmd_condense(args):
    t = load_document(args.tree).tree
    q = C.condensation(t)
    if args.dot:
        _write(args.dot, emit_dot(q.quotient_tree, name="condensation"))
    _emit({
        "is_condensed": C.is_condensed(t),
        "bridges": {y: sorted(b.nodes, key=t.depth) for y, b in sorted(q.members_of.items())},
        "quotient_edges": [list(e) for e in sorted(q.quotient_tree.edges)],
    })
    return 0


def cmd_homeo(args):
    a = load_document(args.a).tree
    b = load_document(args.b).tree
    ok = H.homeomorphic(a, b)
    out = {"homeomorphic": ok,
           "condensation_a": str(H.canonical_form(C.condensation(a).quotient_tree)),
           "condensation_b": str(H.canonical_form(C.condensation(b).quotient_tree))}
    if ok and args.witness:
        w = H.common_refinement_witness(a, b)
        _write(args.witness, serialize(TreeDocument("common-refinement", w)))
        out["witness_nodes"] = len(w)
    _emit(out)
    return 0 if ok else 1


def cmd_extend(args):
    t = load_document(args.tree).tree
    e = K.build_extension(t, args.variant, args.budget)
    if args.dot:
        labels = {x: K.short_label(e, x) for x in e.forest.nodes}
        _write(args.dot, emit_dot(e.forest, labels, name=f"{e.variant}-extension"))
    comps = K.components(e.forest)
    _emit({"variant": str(e.variant), "nodes": len(e), "components": len(comps),
           "component_sizes": [len(c) for c in comps],
           "labels": {x: K.short_label(e, x) for x in e.forest.nodes}})
    return 0


def cmd_verify_forking(args):
    t = load_document(args.tree).tree
    cand = load_document(args.candidate).tree
    sig = parse_mapping(_read(args.sigma))
    witness = parse_node_list(_read(args.witness)) if args.witness else None
    v = K.verify_forking(t, K.ForkingCandidate(cand, sig), args.cap, witness)
    _emit(v.to_dict())
    return 0 if v.is_forking else 1


def _weights(text):
    try:
        return tuple(float(x) for x in text.split(","))
    except ValueError:
        raise InvalidConfig(f"weights must be comma-separated numbers, got {text!r}") from None


def cmd_generate(args):
    cfg = GeneratorConfig(args.min_nodes, args.max_nodes, _weights(args.weights), args.seed)
    text = serialize(generate_tree(cfg))
    if args.output:
        _write(args.output, text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_suite(args):
    if args.list:
        for p in REGISTRY.values():
            print(f"{p.id}\t{p.module}\t{p.statement}")
        return 0
    scope = args.props.split(",") if args.props else None
    rep = run_suite(scope, args.samples, args.seed, args.max_nodes, mutation=args.mutate)
    _emit(rep.to_dict())
    return 0 if rep.ok else 1


def cmd_dot(args):
    doc = load_document(args.tree)
    text = emit_dot(doc.forest, name=doc.name or "T")
    if args.output:
        _write(args.output, text)
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="arbor", description="Finite order-theoretic trees.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a tree document")
    p.add_argument("tree")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("branching", help="branching report per node")
    p.add_argument("tree")
    p.add_argument("--stem", help="report only the stem ending at this node")
    p.add_argument("--cap", type=int, default=B.DEFAULT_BRUTE_FORCE_CAP,
                   help="largest region handled by brute force")
    p.set_defaults(func=cmd_branching)

    p = sub.add_parser("condense", help="maximal bridges and the condensation")
    p.add_argument("tree")
    p.add_argument("--dot", help="write the condensation as DOT")
    p.set_defaults(func=cmd_condense)

    p = sub.add_parser("homeo", help="test two trees for homeomorphism")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--witness", help="write a common refinement here")
    p.set_defaults(func=cmd_homeo)

    p = sub.add_parser("extend", help="build a condensed extension")
    p.add_argument("tree")
    p.add_argument("--variant", choices=["full", "refined"], default="refined")
    p.add_argument("--budget", type=int, default=None,
                   help="node limit (default: ARBOR_BUDGET or 100000)")
    p.add_argument("--dot", help="write the extension as DOT")
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("verify-forking", help="check the forking conditions")
    p.add_argument("tree")
    p.add_argument("candidate")
    p.add_argument("sigma", help="JSON object: candidate node -> source node")
    p.add_argument("--witness", help="JSON node list on which sigma is an isomorphism")
    p.add_argument("--cap", type=int, default=20, help="largest candidate searched exhaustively")
    p.set_defaults(func=cmd_verify_forking)

    p = sub.add_parser("generate", help="random rooted tree")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--min-nodes", type=int, default=1)
    p.add_argument("--max-nodes", type=int, default=12)
    p.add_argument("--weights", default="0.35,0.3,0.2,0.15",
                   help="probabilities of 0, 1, 2, ... children")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("suite", help="run the property suite")
    p.add_argument("--props", help="comma-separated ids (default: all)")
    p.add_argument("--samples", type=int, default=500)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-nodes", type=int, default=12)
    p.add_argument("--mutate", action="store_true", help="break the bridge walk on purpose")
    p.add_argument("--list", action="store_true", help="list property ids and exit")
    p.set_defaults(func=cmd_suite)

    p = sub.add_parser("dot", help="emit a tree as DOT")
    p.add_argument("tree")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_dot)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ArborError, OSError) as exc:
        print(f"arbor: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
