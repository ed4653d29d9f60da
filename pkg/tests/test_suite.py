import pytest

from arbor import condense
from arbor.errors import UnknownPropositionId
from arbor.suite import REGISTRY, run_suite, spine_mutation

MODULES = {"order-core", "condense", "branching", "homeo", "forking"}


def test_registry():
    assert len(REGISTRY) >= 40
    assert {p.module for p in REGISTRY.values()} == MODULES
    assert all(p.statement for p in REGISTRY.values())


def test_unknown_id():
    with pytest.raises(UnknownPropositionId):
        run_suite(["bridge-oracle", "nope"], samples=1)


def test_small_run_passes():
    rep = run_suite(samples=25, seed=5, max_nodes=8)
    assert rep.ok, [r.message for r in rep.results.values() if r.failed]
    assert rep.to_dict()["ok"]


def test_mutation_is_detected_and_restored():
    rep = run_suite(["maximal-bridge-beta"], samples=60, mutation=True)
    assert not rep.ok
    r = rep.results["maximal-bridge-beta"]
    assert r.failed > 0 and r.counterexample is not None
    assert condense._SPINE_SLACK == 0
    with spine_mutation():
        assert condense._SPINE_SLACK == 1
    assert condense._SPINE_SLACK == 0


def test_explicit_trees():
    from arbor.order import build_tree
    rep = run_suite(["refined-chain-law"], trees=[build_tree(["a"], [])])
    assert rep.ok
