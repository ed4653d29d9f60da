"""Acceptance criteria, one test each, with a PASS/FAIL line printed per criterion."""

import time

import pytest

from arbor import branching as B
from arbor import condense as C
from arbor import fixtures as F
from arbor import forking as K
from arbor.generate import random_corpus
from arbor.homeo import isomorphic
from arbor.order import components
from arbor.suite import REGISTRY, run_suite, spine_mutation
from conftest import CRITERIA_LINES, raw
from oracles import Poset

CORPUS_SIZE = 500
MAX_NODES = 12


@pytest.fixture(scope="module")
def corpus():
    return random_corpus(CORPUS_SIZE, seed=0, max_nodes=MAX_NODES)


def report(n, ok, detail, elapsed, limit):
    ok = ok and (limit is None or elapsed < limit)
    bound = f" (limit {limit}s)" if limit else ""
    line = f"CRITERION {n}: {'PASS' if ok else 'FAIL'} {detail} [{elapsed:.2f}s{bound}]"
    CRITERIA_LINES.append(line)
    print(line)
    assert ok, detail


def bridge_mismatches(trees):
    """Suite checks plus an exhaustive external oracle; returns (count, first counterexample)."""
    rep = run_suite(["maximal-bridge-beta", "bridge-oracle"], trees=trees)
    bad = sum(r.failed for r in rep.results.values())
    first = next((r.counterexample for r in rep.results.values() if r.counterexample), None)
    for t in trees:
        owner = {x: A for A in Poset(*raw(t)).maximal_bridges() for x in A}
        miss = [x for x in t.nodes if C.maximal_bridge(t, x).nodes != owner[x]]
        bad += len(miss)
        if miss and first is None:
            first = f"{sorted(t.edges)} at {miss[0]!r}"
    return bad, first


def test_criterion_1_fork_extension():
    t0 = time.perf_counter()
    t = F.fork_tree()
    ref = K.build_extension(t, K.Variant.REFINED)
    f = ref.forest
    lab = {x: K.short_label(ref, x) for x in f.nodes}
    kids = {lab[x]: sorted(lab[c] for c in f.children(x)) for x in f.nodes}
    shape = (f.is_tree and lab[f.root] == "t" and kids["t"] == ["u0", "u1"]
             and kids["u0"] == ["v0", "w0"] and kids["u1"] == ["v1", "w1"])
    full = K.build_extension(t, K.Variant.FULL)
    comps = components(full.forest)
    sizes = [len(c) for c in comps]
    iso = len(comps) == 2 and isomorphic(full.forest.restrict(comps[0].nodes),
                                         full.forest.restrict(comps[1].nodes))
    ok = len(ref) == 7 and shape and len(full) == 22 and sizes == [11, 11] and iso
    report(1, ok, f"refined={len(ref)} shape={shape} full={len(full)} components={sizes} iso={iso}",
           time.perf_counter() - t0, 1)


def test_criterion_2_trident_forkings():
    t0 = time.perf_counter()
    t = F.trident_tree()
    ref = K.build_extension(t, K.Variant.REFINED)
    v = K.verify_forking(t, K.extension_candidate(ref))
    verdicts = {}
    for key, (tree, sig) in F.trident_candidates().items():
        w = K.verify_forking(t, K.ForkingCandidate(tree, sig))
        four = all((w.cond1_condensed, w.cond2_order_preserving_onto,
                    w.cond3_path_isomorphic, w.cond4_path_cover))
        verdicts[key] = len(tree) == 7 and four and not w.cond5_extension
    ok = len(ref) == 9 and v.is_extension and all(verdicts.values()) and len(verdicts) == 2
    report(2, ok, f"refined={len(ref)} extension={v.is_extension} forkings-not-extensions={verdicts}",
           time.perf_counter() - t0, 1)


def test_criterion_3_six_bridge_condensation():
    t0 = time.perf_counter()
    t = F.six_bridge_tree()
    q = C.condensation(t)
    qt = q.quotient_tree
    lengths = sorted((len(b) for b in q.members_of.values()), reverse=True)
    edges = sorted(qt.edges)
    want = [("t1", "t2"), ("t1", "t3"), ("t2", "t4"), ("t2", "t5"), ("t2", "t6")]
    ok = len(qt) == 6 and edges == want and lengths == [3, 2, 2, 2, 2, 2]
    report(3, ok, f"nodes={len(qt)} edges={edges} bridge-lengths={lengths}",
           time.perf_counter() - t0, 1)


def test_criterion_4_oracle_equivalence(corpus):
    t0 = time.perf_counter()
    bad, first = bridge_mismatches(corpus)
    report(4, bad == 0, f"{len(corpus)} trees, {bad} mismatches", time.perf_counter() - t0, 60)


def test_criterion_5_proposition_suite(corpus):
    t0 = time.perf_counter()
    rep = run_suite(trees=corpus)
    failed = {p: r.message for p, r in rep.results.items() if r.failed}
    report(5, rep.ok, f"{len(REGISTRY)} properties on {len(corpus)} trees, failures={failed}",
           time.perf_counter() - t0, 300)


def test_criterion_6_chain_law(corpus):
    t0 = time.perf_counter()
    chains = {n: len(K.build_extension(F.chain(n), K.Variant.REFINED)) for n in range(1, 11)}
    perfect = all(isomorphic(K.build_extension(F.chain(n), K.Variant.REFINED).forest, F.perfect_binary(n))
                  for n in range(1, 11))
    law = all(chains[n] == 2 ** n - 1 for n in chains)
    two = [K.count_full_components(t) for t in corpus]
    ok = law and perfect and all(c == 2 for c in two)
    report(6, ok, f"sizes={list(chains.values())} perfect={perfect} "
                  f"full-two-components={sum(c == 2 for c in two)}/{len(two)}",
           time.perf_counter() - t0, 10)


def test_criterion_7_finite_coincidence(corpus):
    t0 = time.perf_counter()
    stems = bad = 0
    for t in corpus:
        for s in t.nodes:
            stems += 1
            bad += B.n_branching1(t, s) != B.n_branching2_bruteforce(t, s)
    report(7, bad == 0, f"{stems} stems, {bad} mismatches", time.perf_counter() - t0, None)


def test_criterion_8_mutation_sensitivity(corpus):
    t0 = time.perf_counter()
    with spine_mutation():
        bad, first = bridge_mismatches(corpus)
    clean, _ = bridge_mismatches(corpus[:50])
    ok = bad > 0 and first is not None and clean == 0
    report(8, ok, f"mutated: {bad} mismatches, counterexample present={first is not None}; restored clean",
           time.perf_counter() - t0, None)
