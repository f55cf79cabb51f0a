import json

import pytest

from hibitoric import jsonio
from hibitoric.errors import BadParameters
from hibitoric.grassmann import idn
from hibitoric.lattice import diamond


def test_round_trip_explicit_lattice(tmp_path):
    L = diamond()
    path = tmp_path / "d.json"
    path.write_text(json.dumps(L.to_json()))
    M = jsonio.load_lattice(str(path))
    assert M.elements == L.elements and M.poset.covers() == L.poset.covers()


def test_tuple_elements_survive_json():
    L = idn(2, 4)
    doc = json.loads(json.dumps({"elements": L.to_json()["elements"], "covers": L.to_json()["covers"]}))
    M = jsonio.load_lattice(doc)
    assert M.elements == L.elements


@pytest.mark.parametrize(
    "doc, size",
    [
        ({"type": "idn", "d": 2, "n": 5}, 10),
        ({"type": "counterexample"}, 12),
        ({"type": "chain", "k": 3}, 3),
        ({"type": "boolean", "k": 3}, 8),
        ({"type": "diamond"}, 4),
        ({"type": "tilde", "r": 5}, 8),
        ({"type": "ideals", "poset": {"elements": ["x", "y"], "covers": []}}, 4),
    ],
)
def test_shortcuts(doc, size):
    assert len(jsonio.load_lattice(doc)) == size


def test_bad_documents(tmp_path):
    with pytest.raises(BadParameters):
        jsonio.load_lattice({"type": "nope"})
    with pytest.raises(BadParameters):
        jsonio.load_lattice({"covers": []})
    with pytest.raises(BadParameters):
        jsonio.load_lattice({"type": "idn", "d": "2", "n": 5})
    with pytest.raises(BadParameters):
        jsonio.load_lattice(str(tmp_path / "missing.json"))
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    with pytest.raises(BadParameters):
        jsonio.load_lattice(str(bad))


def test_ideal_document():
    doc = {"n_vars": 3, "generators": [[0, 1]]}
    assert jsonio.is_ideal_document(doc)
    assert jsonio.load_ideal(doc).to_json() == doc


def test_report_and_markdown_are_derived_from_json():
    doc = jsonio.report("demo", {"b": [1, 2], "a": {"x": True}})
    assert doc["schema"] == 1
    text = jsonio.dumps(doc)
    assert json.loads(text) == doc
    md = jsonio.to_markdown(doc)
    assert md.startswith("# demo") and "**x**: true" in md
