from __future__ import annotations

import json
import subprocess
import sys

import pytest

from artinkit.cli import main, verify_embeddings
from artinkit.serialize import (
    FormatError,
    braid_from_json,
    braid_to_json,
    dumps,
    graph_from_json,
    graph_to_json,
    instance_from_json,
    instance_to_json,
    nfa_from_json,
    nfa_to_json,
    read_json,
    verdict_to_json,
)
from artinkit.classifier import classify
from conftest import FIXTURES


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


# exit-code contract on the fixture corpus
EXIT_CODES = [
    (("classify", FIXTURES / "b4_triangle.json"), 0),
    (("classify", FIXTURES / "one_vertex.json"), 0),
    (("classify", FIXTURES / "bad_extra_field.json"), 2),
    (("classify", FIXTURES / "bad_label.json"), 2),
    (("classify", FIXTURES / "bad_syntax.json"), 2),
    (("classify", FIXTURES / "does_not_exist.json"), 2),
    (("compile", FIXTURES / "eps_edge.json", "--group", "trivial"), 0),
    (("compile", FIXTURES / "chain.json", "--group", "free:2", "--witness-word", "s s^-1"), 0),
    (("compile", FIXTURES / "chain.json", "--group", "free:3"), 2),
    (("compile", FIXTURES / "chain.json", "--group", "free:2", "--target", "b4"), 2),
    (("compile", FIXTURES / "bad_nfa_state.json"), 2),
    (("compile", FIXTURES / "commutator_p4.json", "--group", "free:4", "--witness-word", "a b a^-1 b^-1"), 3),
    (("compile", FIXTURES / "chain.json", "--group", "free:2", "--witness-word", "s"), 3),
    (("wp", "braid", "4", "[2,2,3,3,-2,-2,-3,-3]"), 1),
    (("wp", "braid", "3", "[1,2,1,-2,-1,-2]"), 0),
    (("wp", "braid", "3", "[7]"), 2),
    (("wp", "raag", FIXTURES / "p4.json", "a b a^-1 b^-1"), 0),
    (("wp", "raag", FIXTURES / "p4.json", "a c a^-1 c^-1"), 1),
    (("wp", "raag", FIXTURES / "b3_edge.json", "s1"), 2),
    (("benois", FIXTURES / "x_inverse.json", "eps"), 0),
    (("benois", FIXTURES / "x_inverse.json", "x"), 1),
    (("benois", FIXTURES / "x_inverse.json", "w"), 2),
    (("search", FIXTURES / "missing_instance.json", "--depth", "4"), 1),
    (("verify-embeddings",), 0),
]


@pytest.mark.parametrize("argv,code", EXIT_CODES, ids=[" ".join(str(a).split("/")[-1] for a in c[0]) for c in EXIT_CODES])
def test_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


def test_classify_reports(capsys):
    _, out, _ = run(capsys, "classify", FIXTURES / "b4_triangle.json")
    assert out.splitlines()[0] == (
        "undecidable: submonoid, rational subset, fixed-target, semigroup intersection; "
        "open: identity, group, subgroup; witness: Triangle(2,3,3)"
    )
    assert run(capsys, "classify", FIXTURES / "b3_edge.json")[1].startswith("all decidable")
    assert run(capsys, "classify", FIXTURES / "one_vertex.json")[1].startswith("all decidable")
    _, out, _ = run(capsys, "classify", FIXTURES / "c4.json", "--json")
    doc = json.loads(out)
    assert doc["witness"]["pattern"] == "Square-plain"
    assert set(doc["statuses"].values()) == {"undecidable"}


def test_compile_outputs(capsys, tmp_path):
    _, out, _ = run(capsys, "compile", FIXTURES / "eps_edge.json", "--group", "trivial")
    doc = json.loads(out)
    assert doc["generators"] == [["x", "y^-1"]] and doc["target"] == ["x", "y^-1"]
    _, out, _ = run(capsys, "compile", FIXTURES / "eps_edge.json", "--group", "trivial", "--target", "b4")
    assert json.loads(out)["target"] == [2, 2, 3, 3, -2, -2, -3, -3]
    _, out, _ = run(capsys, "compile", FIXTURES / "chain.json", "--group", "free:2")
    assert len(json.loads(out)["generators"]) == 2
    dest = tmp_path / "inst.json"
    code, _, _ = run(
        capsys, "compile", FIXTURES / "commutator_p4.json", "--group", "p4",
        "--witness-word", "a b a^-1 b^-1", "--target", "b4", "-o", dest,
    )
    assert code == 0
    doc = read_json(dest)
    assert doc["witness"] == [0, 1, 2, 3] and doc["ambient"]["tag"] == "b4"
    code, out, _ = run(capsys, "search", dest, "--depth", "4")
    assert code == 0 and out.startswith("found at depth 4: [0, 1, 2, 3]")
    dest2 = tmp_path / "x.json"
    run(capsys, "compile", FIXTURES / "eps_edge.json", "--group", "trivial", "--intersection", "-o", dest2)
    assert read_json(dest2)["kind"] == "semigroup-intersection"


def test_other_reports(capsys):
    assert run(capsys, "wp", "braid", "4", "[2,2,3,3,-2,-2,-3,-3]")[1].splitlines()[0] == "nontrivial; pure"
    assert run(capsys, "verify-embeddings")[1].strip() == (
        "6/6 commutator checks match P₄ adjacency; catalog path checks pass; "
        "star embedding commutation pattern matches"
    )
    assert run(capsys, "benois", FIXTURES / "x_inverse.json", "eps")[1].splitlines()[0] == "true"
    assert verify_embeddings()[0]


def test_search_limit_exit_code(capsys, monkeypatch, tmp_path):
    dest = tmp_path / "i.json"
    dest.write_text(dumps({
        "ambient": {"tag": "b4", "strands": 4},
        "generators": [[1], [2], [3], [-1]],
        "target": [2, 2, 2, 2, 2, 2, 2, 2, 2, 2],
        "kind": "fixed-target-submonoid",
    }))
    monkeypatch.setenv("ARTINKIT_MAX_STATES", "20")
    assert run(capsys, "search", dest, "--depth", "8")[0] == 4


def test_console_script_runs():
    out = subprocess.run(
        [sys.executable, "-m", "artinkit.cli", "wp", "braid", "3", "[1,-1]"],
        capture_output=True, text=True,
    )
    assert out.returncode == 0 and out.stdout.startswith("trivial")


# round trips


@pytest.mark.parametrize("name", ["b4_triangle", "b3_edge", "one_vertex", "c4", "p4"])
def test_graph_round_trip(name):
    text = dumps(graph_to_json(graph_from_json(read_json(FIXTURES / f"{name}.json"))))
    assert dumps(graph_to_json(graph_from_json(json.loads(text)))) == text


@pytest.mark.parametrize("name", ["eps_edge", "chain", "x_inverse", "commutator_p4"])
def test_nfa_round_trip(name):
    doc = read_json(FIXTURES / f"{name}.json")
    text = dumps(nfa_to_json(nfa_from_json(doc)))
    assert text == dumps(doc)
    assert dumps(nfa_to_json(nfa_from_json(json.loads(text), normalized=True))) == text


def test_instance_and_braid_round_trip(capsys):
    for argv in (
        ("compile", FIXTURES / "chain.json", "--group", "free:2", "--witness-word", "s s^-1"),
        ("compile", FIXTURES / "commutator_p4.json", "--group", "p4", "--target", "p4"),
        ("compile", FIXTURES / "eps_edge.json", "--group", "trivial", "--target", "b4", "--intersection"),
    ):
        _, out, _ = run(capsys, *argv)
        assert dumps(instance_to_json(instance_from_json(json.loads(out)))) == out
    doc = read_json(FIXTURES / "braid_gamma0.json")
    assert braid_to_json(braid_from_json(doc)) == doc
    g = graph_from_json(read_json(FIXTURES / "b4_triangle.json"))
    text = dumps(verdict_to_json(g, classify(g)))
    assert dumps(json.loads(text)) == text


def test_loaders_reject_bad_documents():
    with pytest.raises(FormatError):
        graph_from_json(read_json(FIXTURES / "bad_extra_field.json"))
    with pytest.raises(FormatError):
        nfa_from_json({"alphabet": ["s"], "states": ["q"], "initial": "q", "finals": [], "transitions": [["q", "t", "q"]]})
    with pytest.raises(FormatError):
        instance_from_json({
            "ambient": {"tag": "b4", "strands": 4}, "generators": [[1]], "target": [1],
            "kind": "fixed-target-submonoid", "witness": [0, 0],
        })
    with pytest.raises(FormatError):
        braid_from_json({"strands": 3, "word": [3]})
