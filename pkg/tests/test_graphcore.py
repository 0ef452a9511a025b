import pytest
from hypothesis import given, strategies as st

from plantedcycles import (ColoredGraph, DegreeBoundedSubgraph, TwoFactor,
                           edge, edge_set, risk, symmetric_difference,
                           validate_structure)


def small_edge_sets():
    pair = st.tuples(st.integers(0, 9), st.integers(0, 9)).filter(lambda t: t[0] != t[1])
    return st.frozensets(pair.map(lambda t: edge(*t)), max_size=15)


def test_edge_canonical():
    assert edge(3, 1) == (1, 3)
    with pytest.raises(ValueError):
        edge(2, 2)


def test_symmetric_difference_examples():
    e1, e2 = (0, 1), (1, 2)
    assert symmetric_difference([e1], [e1, e2]) == {e2}
    assert symmetric_difference([e1, e2], [e1, e2]) == frozenset()


@given(small_edge_sets(), small_edge_sets(), small_edge_sets())
def test_symmetric_difference_properties(a, b, c):
    assert symmetric_difference(a, b) == symmetric_difference(b, a)
    assert symmetric_difference(symmetric_difference(a, b), c) == \
        symmetric_difference(a, symmetric_difference(b, c))
    assert symmetric_difference(a, a) == frozenset()
    assert len(symmetric_difference(a, b)) == len(a) + len(b) - 2 * len(a & b)


def test_risk_examples():
    h = TwoFactor(edge_set([(0, 1), (1, 2), (0, 2)]))
    assert risk(h, h.edges) == 0.0
    assert risk(h, frozenset()) == 1.0
    ten = TwoFactor(edge_set((i, (i + 1) % 10) for i in range(10)))
    h_hat = set(ten.edges)
    h_hat.remove((0, 1))
    h_hat.remove((1, 2))
    h_hat |= {(0, 2), (5, 7)}
    assert risk(ten, h_hat) == pytest.approx(0.4)


def test_risk_zero_iff_equal(rng):
    h = TwoFactor(edge_set([(0, 1), (1, 2), (0, 2)]))
    assert risk(h, [(0, 1), (1, 2), (0, 2)]) == 0
    assert risk(h, [(0, 1), (1, 2), (1, 3)]) > 0
    with pytest.raises(ValueError):
        risk(TwoFactor(frozenset()), [(0, 1)])


def test_two_factor_invariants():
    tf = TwoFactor(edge_set((i, (i + 1) % 5) for i in range(5)))
    assert len(tf.edges) == len(tf.support)
    assert [len(c) for c in tf.cycles()] == [5]
    with pytest.raises(ValueError):
        TwoFactor(edge_set([(0, 1), (1, 2)]))


def test_validate_structure_examples():
    tri = validate_structure([(0, 1), (1, 2), (0, 2)])
    assert tri.valid and tri.deg1_count == 0 and tri.n_cycles == 1
    single = validate_structure([(0, 1)])
    assert single.valid and single.deg1_count == 2 and single.n_paths == 1
    star = validate_structure([(0, 1), (0, 2), (0, 3)])
    assert not star.valid and star.offender == 0


def test_colored_graph_roundtrip(tmp_path):
    g = ColoredGraph(6, [(0, 5), (2, 4)], [(0, 1), (1, 2), (0, 2)])
    path = tmp_path / "g.txt"
    g.save(str(path))
    g2 = ColoredGraph.load(str(path))
    assert g2.edges == g.edges and g2.planted == g.planted and g2.n == g.n
    assert g2.dumps() == g.dumps()


def test_colored_graph_red_invariant():
    with pytest.raises(ValueError):
        ColoredGraph(4, [], [(0, 1)])           # red degree 1
    g = ColoredGraph(4, [(0, 1)], [(0, 1), (1, 2), (0, 2)])
    assert g.is_red((0, 1))                     # merged into the red edge
    assert len(g.edges) == 3


def test_degree_bounded_subgraph():
    h = DegreeBoundedSubgraph(5, [(0, 1), (1, 2)])
    assert h.deg1_count() == 2
    with pytest.raises(ValueError):
        h.add((1, 3))
    h.xor_edges([(0, 1), (2, 3)])
    assert h.edges == {(1, 2), (2, 3)}
    assert h.degree[0] == 0 and h.degree[2] == 2
