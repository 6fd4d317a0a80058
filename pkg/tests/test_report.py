from __future__ import annotations

import json

from selfsim_app.core.catalog import with_source
from selfsim_app.core.classifier import classify
from selfsim_app.core.document import dumps
from selfsim_app.core.report import render_text, report_to_dict


def test_json_and_text_agree(ring2):
    doc = report_to_dict(classify(ring2))
    again = json.loads(dumps(doc))
    assert again == doc
    text = render_text(doc)
    for name, v in doc["verdicts"].items():
        line = next(line for line in text.splitlines() if line.startswith(name + " "))
        assert v["value"] in line
    assert "purely infinite (Kirchberg)" in text
    assert "Farkas rows" in text


def test_witness_payloads_are_plain(ring2):
    doc = report_to_dict(classify(ring2))
    pi = doc["verdicts"]["purely_infinite"]
    assert pi["witness"] == {"kind": "g_circuit", "path": {"edges": ["f1"]}, "twist": "1"}
    assert pi["labels"] == ["Kirchberg"]
    assert doc["g_circuit"] == {"path": {"edges": ["f1"]}, "twist": "1"}
    assert doc["quotient"]["vertices"] == 2
    assert doc["quotient"]["loops"] == 2


def test_fractions_as_strings(two_cycle_ssg):
    doc = report_to_dict(classify(two_cycle_ssg))
    assert doc["trace"]["exists"]
    assert doc["trace"]["weights"] == {"u": "1/2", "w": "1/2"}
    assert doc["monoid"]["E"]["verdict"] == "NotGroup"
    assert doc["monoid"]["quotient"]["heuristic"] is True


def test_group_relations_listed(two_loops_ssg):
    doc = report_to_dict(classify(two_loops_ssg))
    m = doc["monoid"]["E"]
    assert m["verdict"] == "Group"
    assert m["relations"] == ["a_v = 2 a_v"]
    assert m["identity"] == {"v": 1}
    assert m["inverses"] == {"v": {"v": 1}}


def test_banner_in_text():
    text = render_text(report_to_dict(classify(with_source())))
    assert text.splitlines()[1].startswith("!! SourcePresent")
    assert "source-free: no" in text
