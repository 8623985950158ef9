import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mediangle import generators as gen
from mediangle.cells import reconstruct_system
from mediangle.io import FormatError, parse_graph, parse_system, serialize_graph, serialize_system
from mediangle.signs import SignSystem, check_axioms

C6_DOC = '{"name":"C6","n":6,"edges":[[0,1],[1,2],[2,3],[3,4],[4,5],[5,0]]}'


def test_parse_c6():
    g = parse_graph(C6_DOC)
    assert g.name == "C6" and g.n == 6 and g.edge_count == 6
    assert g.edges[-1] == (4, 5) and (0, 5) in g.edges


def test_canonical_round_trip():
    text = serialize_graph(parse_graph(C6_DOC))
    doc = json.loads(text)
    assert doc["edges"] == sorted(doc["edges"])
    assert serialize_graph(parse_graph(text)) == text


@pytest.mark.parametrize(
    "doc",
    [
        '{"n":2,"edges":[[0,0]]}',
        '{"n":3,"edges":[[0,1]]}',
        '{"n":2,"edges":[[0,2]]}',
        '{"n":2,"edges":[[0,1],[1,0]]}',
        '{"n":2}',
        '{"n":"2","edges":[]}',
        '{"n":2,"edges":[[0,1,2]]}',
        '[1,2]',
        "not json",
    ],
    ids=["self-loop", "disconnected", "range", "multi-edge", "no-edges", "n-string", "triple", "list", "garbage"],
)
def test_bad_graph_documents(doc):
    with pytest.raises(FormatError):
        parse_graph(doc)


@pytest.mark.parametrize("g", [gen.hypercube(3), gen.coxeter_graph("A3"), gen.grid(2, 3)], ids=lambda g: g.name)
def test_graph_round_trip_catalog(g):
    h = parse_graph(serialize_graph(g))
    assert h.edges == g.edges and h.n == g.n


def test_rank1_system():
    s = parse_system("ground 1\n0\n+\n-\n")
    assert check_axioms(s).is_om
    assert serialize_system(s) == "ground 1\n0\n-\n+\n"


def test_element_names():
    s = parse_system("ground 2\nelements a b\n00\n+-\n")
    assert s.element_names == ("a", "b")
    assert parse_system(serialize_system(s)) == s
    assert "elements a b" in serialize_system(s)


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("ground 3\n+x-\n", "illegal character"),
        ("ground 2\n+-\n+-\n", "duplicate"),
        ("ground 2\n+-\n+\n", "length"),
        ("2\n+-\n", "ground"),
        ("ground two\n", "ground"),
        ("ground 2\nelements a\n", "names"),
    ],
)
def test_bad_systems(text, fragment):
    with pytest.raises(FormatError, match=fragment):
        parse_system(text)


@given(st.sets(st.tuples(*[st.sampled_from([-1, 0, 1])] * 3), min_size=1, max_size=12))
@settings(max_examples=60)
def test_system_round_trip(rows):
    s = SignSystem(3, sorted(rows))
    text = serialize_system(s)
    assert parse_system(text) == s
    assert serialize_system(parse_system(text)) == text


def test_reconstructed_round_trip(a3):
    s = reconstruct_system(a3)
    assert parse_system(serialize_system(s)) == s
