"""Spec parsing and deterministic graph exports."""

import json

import pytest

from lie_ncg.catalog import catalog_entry
from lie_ncg.errors import ParseError
from lie_ncg.io import (
    export_dot,
    export_graphml,
    export_json,
    load_graph_json,
    load_spec,
    parse_spec_dict,
    spec_to_dict,
)
from lie_ncg.liealg import algebra_from_spec
from lie_ncg.ncg import build_graph

GOOD = {
    "q": 2,
    "dim": 3,
    "basis": ["x", "y", "z"],
    "brackets": [{"left": "x", "right": "y", "value": {"z": 1}}],
}


def test_parse_round_trip():
    spec = parse_spec_dict(GOOD)
    assert spec.q == 2 and spec.dim == 3
    assert spec.brackets == (("x", "y", {"z": 1}),)
    assert parse_spec_dict(spec_to_dict(spec)) == spec


def test_parse_rejects_malformed_payloads():
    with pytest.raises(ParseError):
        parse_spec_dict([1, 2])
    with pytest.raises(ParseError):
        parse_spec_dict({**GOOD, "extra": 1})
    with pytest.raises(ParseError):
        parse_spec_dict({k: v for k, v in GOOD.items() if k != "dim"})
    with pytest.raises(ParseError):
        parse_spec_dict({**GOOD, "q": "2"})
    with pytest.raises(ParseError):
        parse_spec_dict({**GOOD, "basis": [1, 2, 3]})
    with pytest.raises(ParseError):
        parse_spec_dict({**GOOD, "brackets": [{"left": "x", "right": "y"}]})
    with pytest.raises(ParseError):
        parse_spec_dict(
            {**GOOD, "brackets": [{"left": "x", "right": "y", "value": {"z": "1"}}]}
        )


def test_load_spec_from_file(tmp_path):
    path = tmp_path / "spec.json"
    path.write_text(json.dumps(GOOD))
    L = algebra_from_spec(load_spec(path))
    assert L.dim == 3

    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(ParseError):
        load_spec(bad)


def test_exports_are_byte_deterministic():
    g = build_graph(catalog_entry("heisenberg_f2").algebra())
    for render in (export_dot, export_graphml, export_json):
        assert render(g) == render(g)
    g2 = build_graph(catalog_entry("heisenberg_f2").algebra())
    assert export_dot(g) == export_dot(g2)


def test_export_dot_shape():
    g = build_graph(catalog_entry("aff1_f2").algebra())
    text = export_dot(g)
    assert text.startswith("graph ncg {")
    assert '"x" -- "x+y";' in text
    assert '"x" -- "y";' in text
    assert '"x+y" -- "y";' in text
    assert text.endswith("}\n")


def test_export_graphml_shape():
    g = build_graph(catalog_entry("aff1_f2").algebra())
    text = export_graphml(g)
    assert text.startswith('<?xml version="1.0"')
    assert '<node id="x+y"/>' in text
    assert text.count("<edge ") == 3


def test_export_json_round_trip():
    g = build_graph(catalog_entry("heisenberg_f3").algebra())
    loaded = load_graph_json(export_json(g))
    assert loaded.n == g.n
    assert loaded.edge_count() == g.edge_count()
    relabel = {lab: i for i, lab in enumerate(loaded.labels)}
    for u, v in g.edges():
        assert loaded.has_edge(relabel[g.labels[u]], relabel[g.labels[v]])
    with pytest.raises(ParseError):
        load_graph_json("not json")
