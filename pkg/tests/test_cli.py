import json

import pytest

from arbor.cli import main


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_validate(capsys, fixture_path):
    code, out, _ = run(capsys, "validate", fixture_path("fork.json"))
    assert code == 0 and json.loads(out)["nodes"] == 4


def test_validate_rejects(capsys, fixture_path):
    code, _, err = run(capsys, "validate", fixture_path("duplicate_node.json"))
    assert code == 2 and "nodes[2]" in err
    code, _, _ = run(capsys, "validate", "missing.json")
    assert code == 2


def test_branching(capsys, fixture_path):
    code, out, _ = run(capsys, "branching", fixture_path("trident.json"), "--stem", "u")
    assert code == 0
    code, _, _ = run(capsys, "branching", fixture_path("trident.json"), "--stem", "nope")
    assert code == 2


def test_condense(capsys, fixture_path, tmp_path):
    dot = tmp_path / "c.dot"
    code, out, _ = run(capsys, "condense", fixture_path("six_bridge.json"), "--dot", dot)
    assert code == 0 and len(json.loads(out)["quotient_edges"]) == 5
    assert dot.read_text().count("->") == 5


def test_homeo(capsys, fixture_path, tmp_path):
    w = tmp_path / "w.json"
    code, out, _ = run(capsys, "homeo", fixture_path("fork.json"), fixture_path("fork.json"), "--witness", w)
    assert code == 0 and json.loads(out)["homeomorphic"] and w.exists()
    code, _, _ = run(capsys, "homeo", fixture_path("fork.json"), fixture_path("trident.json"))
    assert code == 1


def test_extend(capsys, fixture_path, tmp_path):
    code, out, _ = run(capsys, "extend", fixture_path("fork.json"), "--variant", "full")
    d = json.loads(out)
    assert code == 0 and d["nodes"] == 22 and d["component_sizes"] == [11, 11]
    code, out, _ = run(capsys, "extend", fixture_path("fork.json"), "--dot", tmp_path / "e.dot")
    assert json.loads(out)["nodes"] == 7
    code, _, err = run(capsys, "extend", fixture_path("fork.json"), "--variant", "full", "--budget", 10)
    assert code == 2 and "22" in err


def test_verify_forking(capsys, fixture_path):
    code, out, _ = run(capsys, "verify-forking", fixture_path("trident.json"),
                       fixture_path("trident_c1.json"), fixture_path("trident_c1_sigma.json"))
    d = json.loads(out)
    assert code == 0 and d["is_forking"] and not d["is_extension"]
    code, _, _ = run(capsys, "verify-forking", fixture_path("trident.json"),
                     fixture_path("trident_c2.json"), fixture_path("trident_c2_sigma.json"), "--cap", 3)
    assert code == 2


def test_generate(capsys, tmp_path):
    code, out, _ = run(capsys, "generate", "--seed", 4, "--min-nodes", 3, "--max-nodes", 5)
    assert code == 0 and 3 <= len(json.loads(out)["nodes"]) <= 5
    code, _, _ = run(capsys, "generate", "--weights", "a,b")
    assert code == 2
    out_file = tmp_path / "g.json"
    assert run(capsys, "generate", "-o", out_file)[0] == 0 and out_file.exists()


def test_dot(capsys, fixture_path):
    code, out, _ = run(capsys, "dot", fixture_path("fork.json"))
    assert code == 0 and out.count("->") == 3


def test_suite(capsys):
    code, out, _ = run(capsys, "suite", "--list")
    assert code == 0 and "bridge-oracle" in out
    code, out, _ = run(capsys, "suite", "--props", "bridge-oracle", "--samples", 20)
    assert code == 0 and json.loads(out)["ok"]
    code, out, _ = run(capsys, "suite", "--props", "maximal-bridge-beta", "--samples", 50, "--mutate")
    assert code == 1
    code, _, _ = run(capsys, "suite", "--props", "no-such-id")
    assert code == 2


def test_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["extend"])
    assert exc.value.code == 2
