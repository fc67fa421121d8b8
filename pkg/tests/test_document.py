import json

import numpy as np
import pytest

from gradarg import (
    build_graph,
    fixture_names,
    graph_to_document,
    load_fixture,
    parse_graph,
    serialize_graph,
)
from gradarg.errors import MalformedDocument, SchemaViolation

EXPECTED_FIXTURES = {
    "arggraph", "neutrality", "neutralisation", "interchangeability", "dampening",
    "liverpool", "liverpool2", "liverpool3", "school", "self-attack",
    "rsig-square", "dogged-hexagon",
}


def test_all_fixtures_ship_and_parse():
    names = set(fixture_names())
    assert EXPECTED_FIXTURES <= names
    for name in names:
        doc = load_fixture(name)
        doc.to_graph()  # must be structurally valid


def test_liverpool_fixture_shape():
    doc = load_fixture("liverpool")
    assert len(doc.arguments) == 4
    assert len(doc.edges) == 3


def test_round_trip_bytes():
    doc = load_fixture("arggraph")
    again = parse_graph(serialize_graph(doc))
    assert again == doc


def test_round_trip_through_graph():
    doc = load_fixture("school")
    g = doc.to_graph()
    back = graph_to_document(g)
    g2 = back.to_graph()
    assert g.arguments == g2.arguments
    assert np.array_equal(g.incidence, g2.incidence)
    assert np.array_equal(g.weights, g2.weights)


def test_full_double_precision_weights_survive():
    value = 0.1234567890123456789  # rounds to a non-terminating binary double
    g = build_graph(["a"], [], {"a": value})
    doc = graph_to_document(g)
    again = parse_graph(serialize_graph(doc))
    assert again.arguments[0].weight == g.weights[0]


def test_malformed_json():
    with pytest.raises(MalformedDocument):
        parse_graph(b"{nope")


def test_bad_polarity_path():
    doc = load_fixture("liverpool").to_dict()
    doc["edges"][1]["polarity"] = "suport"
    with pytest.raises(SchemaViolation) as err:
        parse_graph(json.dumps(doc))
    assert err.value.path == "edges[1].polarity"


def test_missing_weight_path():
    doc = load_fixture("liverpool").to_dict()
    del doc["arguments"][2]["weight"]
    with pytest.raises(SchemaViolation) as err:
        parse_graph(json.dumps(doc))
    assert err.value.path == "arguments[2].weight"


def test_unknown_version():
    doc = load_fixture("liverpool").to_dict()
    doc["version"] = "9"
    with pytest.raises(SchemaViolation) as err:
        parse_graph(json.dumps(doc))
    assert err.value.path == "version"


def test_duplicate_edge_caught_at_parse():
    doc = load_fixture("liverpool").to_dict()
    doc["edges"].append(dict(doc["edges"][0]))
    with pytest.raises(Exception):
        parse_graph(json.dumps(doc))


def test_unknown_field_rejected():
    doc = load_fixture("liverpool").to_dict()
    doc["extra"] = 1
    with pytest.raises(SchemaViolation):
        parse_graph(json.dumps(doc))
