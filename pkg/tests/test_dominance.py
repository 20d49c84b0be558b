import json
from fractions import Fraction
from pathlib import Path

import jsonschema
import pytest
from hypothesis import given
from hypothesis import strategies as st

from wpcurves import schemas
from wpcurves.dominance import (
    P1,
    DominanceGraph,
    build_positive_dominance,
    emit_dot,
    terminal_nodes,
    to_json,
    validate,
)

GOLDEN = Path(__file__).parent / "golden"


def test_empty_graph_dot():
    assert emit_dot(DominanceGraph()) == "digraph dominance {\n}\n"


def test_single_edge_golden():
    g = DominanceGraph()
    g.add_edge(P1, (3, 3), "C3", 3)
    assert emit_dot(g) == (GOLDEN / "dominance_single_edge.dot").read_text()


def test_full_figure_golden():
    assert emit_dot(build_positive_dominance(6, 3)) == (GOLDEN / "dominance_6_3.dot").read_text()


def test_known_edges_and_nodes():
    g = build_positive_dominance(6, 3)
    edges = {(e.source, e.target): (e.label, e.order) for e in g.edges}
    for n in range(2, 7):
        assert edges[(P1, (n, n))] == (f"C{n}", n)
        assert g.chi((n, n)) == Fraction(2, n)
    assert g.chi((2, 3, 3)) == Fraction(1, 6)
    assert g.chi((2, 3, 4)) == Fraction(1, 12)
    assert g.chi((2, 3, 5)) == Fraction(1, 30)
    assert g.out_degree((2, 3, 5)) == 0
    assert g.out_degree((2, 3, 4)) == 0


def test_fabricated_edge_is_caught():
    g = build_positive_dominance(4, 2)
    g.add_edge(P1, (3, 3), "C2", 2)
    assert len(validate(g)) == 1


def test_cycle_is_caught():
    g = DominanceGraph()
    g.add_edge((2, 2), (4, 4), "C2", 2)
    g.add_edge((4, 4), (2, 2), "C2", 2)
    problems = validate(g)
    assert any(p.startswith("cycle") for p in problems)


def test_bad_bounds():
    with pytest.raises(ValueError):
        build_positive_dominance(2, 1)


@pytest.mark.parametrize("n_max", range(3, 13))
@pytest.mark.parametrize("a_max", [1, 3, 6])
def test_valid_for_all_bounds(n_max, a_max):
    g = build_positive_dominance(n_max, a_max)
    assert validate(g) == []
    assert terminal_nodes(g) == {(2, 3, 4), (2, 3, 5)}


@given(st.integers(3, 12), st.integers(1, 6))
def test_no_unequal_pairs(n_max, a_max):
    for v in build_positive_dominance(n_max, a_max).nodes:
        assert not (len(v) == 2 and v[0] != v[1])
        assert len(v) != 1


def test_dot_is_deterministic():
    assert emit_dot(build_positive_dominance(12, 6)) == emit_dot(build_positive_dominance(12, 6))


def test_json_schema():
    doc = json.loads(to_json(build_positive_dominance(6, 3)))
    jsonschema.validate(doc, schemas.DOMINANCE)
    assert doc["adjacency"]["<2,3,5>"] == []
