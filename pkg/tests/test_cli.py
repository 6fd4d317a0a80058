from __future__ import annotations

import json

import pytest

from selfsim_app.core.settings import AnalysisConfig, save_config
from selfsim_app.main import EXIT_INVALID, EXIT_OK, EXIT_PARSE, main


@pytest.fixture
def quick_config(tmp_path):
    return str(save_config(AnalysisConfig(monoid_identity_bound=4, monoid_bound=12, monoid_state_cap=20_000), tmp_path / "quick.json"))


def _example(tmp_path, name: str, *extra: str) -> str:
    out = str(tmp_path / f"{name}.json")
    assert main(["example", name, *extra, "--out", out]) == EXIT_OK
    return out


def test_validate(tmp_path, capsys):
    path = _example(tmp_path, "ring", "--n", "3")
    assert main(["validate", path]) == EXIT_OK
    assert "valid (4 vertices, 9 edges, group of order 3)" in capsys.readouterr().out


def test_validate_broken_cocycle(tmp_path, capsys):
    path = _example(tmp_path, "ring")
    doc = json.loads(open(path, encoding="utf-8").read())
    doc["cocycle"]["1"]["e1"] = "0"
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh)
    assert main(["validate", path]) == EXIT_INVALID
    err = capsys.readouterr().err
    assert err.startswith(path + ": ")


def test_validate_malformed(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{not json", encoding="utf-8")
    assert main(["validate", str(path)]) == EXIT_PARSE
    assert "not valid JSON" in capsys.readouterr().err


def test_quotient_is_reproducible(tmp_path):
    path = _example(tmp_path, "ring", "--n", "5")
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["quotient", path, "--out", str(a)]) == EXIT_OK
    assert main(["quotient", path, "--out", str(b)]) == EXIT_OK
    assert a.read_bytes() == b.read_bytes()
    doc = json.loads(a.read_text(encoding="utf-8"))
    assert doc["vertices"] == ["[v]", "[w1]"]


def test_classify_json(tmp_path, capsys, quick_config):
    path = _example(tmp_path, "ring")
    assert main(["--config", quick_config, "classify", path]) == EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    assert doc["name"] == "ring-2"
    assert doc["verdicts"]["simple"]["value"] == "Yes"
    assert doc["dichotomy"] == "purely infinite (Kirchberg)"


def test_classify_batch(tmp_path, capsys, quick_config):
    paths = [_example(tmp_path, "ring"), _example(tmp_path, "two-cycle")]
    assert main(["--config", quick_config, "classify", *paths, "--jobs", "2"]) == EXIT_OK
    docs = json.loads(capsys.readouterr().out)
    assert [d["name"] for d in docs] == ["ring-2", "two-cycle"]


def test_classify_text(tmp_path, capsys, quick_config):
    path = _example(tmp_path, "swapped-loops")
    assert main(["--config", quick_config, "classify", path, "--text"]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith("== swapped-loops ==")
    assert "dichotomy" in out


def test_classify_reports_bad_file_but_keeps_going(tmp_path, capsys, quick_config):
    good = _example(tmp_path, "one-loop")
    missing = str(tmp_path / "absent.json")
    assert main(["--config", quick_config, "classify", good, missing]) == EXIT_PARSE
    captured = capsys.readouterr()
    docs = json.loads(captured.out)
    assert [d["name"] for d in docs] == ["one-loop", "absent"]
    assert docs[1]["path"] == missing
    assert "cannot read" in docs[1]["error"]
    assert "absent.json" in captured.err


def test_classify_failed_file_in_text_mode(tmp_path, capsys, quick_config):
    good = _example(tmp_path, "one-loop")
    missing = str(tmp_path / "absent.json")
    assert main(["--config", quick_config, "classify", missing, good, "--text"]) == EXIT_PARSE
    out = capsys.readouterr().out
    assert out.index("== absent ==") < out.index("== one-loop ==")
    assert "!! not analysed" in out


def test_classify_rejects_unusable_monoid_bound(tmp_path, capsys):
    path = _example(tmp_path, "ring")
    assert main(["classify", path, "--monoid-bound", "3"]) == EXIT_INVALID
    captured = capsys.readouterr()
    assert captured.out == ""
    assert captured.err.startswith(path + ": monoid: ")


def test_classify_circuit_cap_fails_one_file_only(tmp_path, capsys):
    cfg = str(save_config(AnalysisConfig(monoid_identity_bound=4, monoid_bound=12, circuit_cap=0), tmp_path / "tight.json"))
    ring = _example(tmp_path, "ring")
    bare = tmp_path / "bare.json"
    bare.write_text(
        json.dumps(
            {
                "vertices": ["s", "u"],
                "edges": [{"id": "b", "d": "s", "r": "u"}],
                "group": {"elements": ["0"], "identity": "0", "table": {"0": {"0": "0"}}},
                "action": {"vertices": {"0": {"s": "s", "u": "u"}}, "edges": {"0": {"b": "b"}}},
                "cocycle": {"0": {"b": "0"}},
            }
        ),
        encoding="utf-8",
    )
    assert main(["--config", cfg, "classify", ring, str(bare), "--jobs", "2"]) == EXIT_INVALID
    captured = capsys.readouterr()
    docs = json.loads(captured.out)
    assert "elementary circuits" in docs[0]["error"]
    assert docs[1]["name"] == "bare"
    assert "verdicts" in docs[1]


def test_validate_empty_graph(tmp_path, capsys):
    path = tmp_path / "empty.json"
    path.write_text(
        json.dumps(
            {
                "vertices": [],
                "edges": [],
                "group": {"elements": ["0"], "identity": "0", "table": {"0": {"0": "0"}}},
                "action": {"vertices": {"0": {}}, "edges": {"0": {}}},
                "cocycle": {"0": {}},
            }
        ),
        encoding="utf-8",
    )
    assert main(["validate", str(path)]) == EXIT_INVALID
    assert "EmptyGraph" in capsys.readouterr().err


@pytest.mark.parametrize(
    ("name", "weights", "verdict"),
    [
        ("two-loops", None, "Group"),
        ("one-loop", {"v": "1"}, "NotGroup"),
        ("two-cycle", {"u": "1/2", "w": "1/2"}, "NotGroup"),
    ],
)
def test_trace_and_monoid(tmp_path, capsys, name, weights, verdict):
    path = _example(tmp_path, name)
    capsys.readouterr()
    assert main(["trace", path]) == EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    assert doc["graph_trace"]["exists"] is (weights is not None)
    if weights is not None:
        assert doc["graph_trace"]["weights"] == weights
    else:
        assert doc["graph_trace"]["certificate"]
    assert main(["monoid", path]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["verdict"] == verdict


def test_monoid_on_quotient_is_heuristic(tmp_path, capsys):
    path = _example(tmp_path, "ring")
    capsys.readouterr()
    assert main(["monoid", path, "--graph", "quotient"]) == EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    assert doc["verdict"] == "Group"
    assert doc["heuristic"] is True


def test_monoid_rejects_bad_bounds(tmp_path, capsys):
    path = _example(tmp_path, "two-loops")
    assert main(["monoid", path, "--identity-bound", "9", "--monoid-bound", "3"]) == EXIT_INVALID
    assert "monoid" in capsys.readouterr().err


def test_examples_listing(capsys):
    assert main(["examples"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "ring [--n N]:" in out
    assert "with-source:" in out


def test_example_errors(capsys):
    assert main(["example", "moebius"]) == EXIT_INVALID
    assert "no example named" in capsys.readouterr().err
    assert main(["example", "one-loop", "--n", "3"]) == EXIT_INVALID


def test_example_to_stdout(capsys):
    assert main(["example", "ring", "--n", "3"]) == EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    assert doc["name"] == "ring-3"
    assert doc["group"]["identity"] == "0"


def test_selfcheck(capsys, quick_config):
    assert main(["--config", quick_config, "selfcheck"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines and all(line.endswith(": ok") for line in lines)
    assert "ring-5: ok" in lines
