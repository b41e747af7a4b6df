import pytest

from conftest import DESK_GRID, field, graph
from subsum import witness as W
from subsum.errors import AlreadyAdjacent, DimensionTooSmall, ParityError, WitnessError, ZeroAnchor
from subsum.graph import build_graph
from subsum.linalg import Subspace
from subsum.subspaces import gaussian_binomial


def sub(g, *rows):
    return g.index_of(Subspace.span(g.field, g.n, [tuple(int(c) for c in r) for r in rows]))


@pytest.mark.parametrize("n,q", DESK_GRID)
def test_hyperplane_clique_and_coloring_sandwich(n, q):
    g = graph(n, q)
    clique = W.hyperplane_clique(g)
    coloring = W.hyperplane_coloring(g)
    assert len(clique.vertices) == coloring.detail["colors"] == gaussian_binomial(n, n - 1, q)
    assert g.is_proper_coloring(coloring.detail["coloring"])
    for c, h in enumerate(clique.vertices):
        assert coloring.detail["coloring"][h] == c


def test_hyperplane_clique_examples():
    g = graph(3, 2)
    assert W.hyperplane_clique(g).vertices == list(range(7, 14))
    assert W.hyperplane_clique(graph(2, 2)).vertices == [0, 1, 2]
    assert len(W.hyperplane_clique(graph(3, 3)).vertices) == 13


@pytest.mark.parametrize("n,q", [(3, 2), (4, 2), (3, 3)])
def test_standard_dominating_set(n, q):
    w = W.standard_dominating_set(graph(n, q))
    assert len(w.vertices) == n
    assert all(w.checks.values())


def test_standard_dominating_set_not_minimal_on_triangle_graph():
    w = W.standard_dominating_set(graph(2, 2), strict=False)
    assert w.checks["dominating"] and not w.checks["minimal"]
    with pytest.raises(WitnessError):
        W.standard_dominating_set(graph(2, 2))


def test_independent_set_odd():
    w = W.independent_set_odd(graph(3, 2))
    assert len(w.vertices) == 7
    assert len(W.independent_set_odd(graph(3, 3)).vertices) == 13
    g5 = build_graph(field(2), 5)
    assert len(W.independent_set_odd(g5).vertices) == 31 + 155
    with pytest.raises(ParityError):
        W.independent_set_odd(graph(4, 2))


def test_independent_set_even():
    w = W.independent_set_even(graph(4, 2))
    assert len(w.vertices) == 22 and w.detail["anchor"] == "1000"
    assert W.independent_set_even(graph(2, 2)).vertices == [sub(graph(2, 2), "10")]
    assert len(W.independent_set_even(graph(4, 2), anchor="0110").vertices) == 22
    g = build_graph(field(3), 4)
    assert len(W.independent_set_even(g).vertices) == 40 + 13
    with pytest.raises(ZeroAnchor):
        W.independent_set_even(graph(4, 2), anchor="0000")
    with pytest.raises(ParityError):
        W.independent_set_even(graph(3, 2))


@pytest.mark.parametrize("n,q", DESK_GRID)
def test_triangle_through_every_vertex(n, q):
    g = graph(n, q)
    for v in range(g.order):
        w = W.triangle_through(g, v)
        assert w.vertices[0] == v


def test_triangle_examples():
    g = graph(3, 2)
    assert W.triangle_through(g, sub(g, "100")).vertices == [sub(g, "100"), sub(g, "010", "001"), sub(g, "110", "001")]
    k = graph(2, 2)
    assert W.triangle_through(k, sub(k, "10")).vertices == [sub(k, "10"), sub(k, "01"), sub(k, "11")]


@pytest.mark.parametrize("n,q", [(3, 2), (4, 2), (3, 3)])
def test_common_neighbor_for_every_nonadjacent_pair(n, q):
    g = graph(n, q)
    for u in range(g.order):
        for v in range(u + 1, g.order):
            if not g.has_edge(u, v):
                assert W.common_neighbor(g, u, v).ok
                assert g.distance(u, v) == 2


def test_common_neighbor_cases():
    g = graph(3, 2)
    w = W.common_neighbor(g, sub(g, "100"), sub(g, "100", "010"))
    assert w.detail["case"] == 1
    w = W.common_neighbor(g, sub(g, "100"), sub(g, "010"))
    assert w.detail["case"] == 2 and w.vertices[2] == sub(g, "110", "001")
    with pytest.raises(AlreadyAdjacent):
        W.common_neighbor(g, sub(g, "100"), sub(g, "010", "001"))
    with pytest.raises(DimensionTooSmall):
        W.common_neighbor(graph(2, 2), 0, 1)


def test_c5_construction_reports_the_chord():
    w = W.paper_c5(graph(4, 2))
    assert w.checks["distinct"]
    assert w.detail["chords"] == [[2, 5]]
    assert w.detail["cycle_edges_missing"] == []
    assert not w.detail["induced_c5"]
    g5 = build_graph(field(2), 5)
    w5 = W.paper_c5(g5)
    assert len(set(w5.vertices)) == 5 and all(g5.dim_of[v] == 3 for v in w5.vertices)
    with pytest.raises(DimensionTooSmall):
        W.paper_c5(graph(3, 2))


def test_witness_json():
    g = graph(3, 2)
    js = W.hyperplane_clique(g).to_json(g)
    assert js["labels"][0] == g.label(js["vertices"][0])
    assert js["checks"] == {"clique": True, "maximal": True}
