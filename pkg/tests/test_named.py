import pytest

from hcolour.canonical import canonical_form, is_isomorphic
from hcolour.multigraph import Multigraph
from hcolour.named import (
    _regular_multigraphs,
    complete,
    complete_minus_edge,
    cycle,
    j_graph,
    k_family_members,
    path,
    petersen,
    poorly_matchable_ten_vertices,
    poorly_matchable_witness,
    s4,
    s4_plus_km,
    s6,
    s6_plus_km,
    s10,
    s12,
    s12_plus_km,
    star,
    t_k2,
)
from hcolour.structure import (
    has_perfect_matching,
    has_two_disjoint_perfect_matchings,
    perfect_matchings,
)


def test_petersen_shape():
    P = petersen()
    assert P.graph.n == 10 and P.graph.m == 15
    assert P.graph.is_regular(3)
    assert P.graph.bridges() == frozenset()
    # girth 5: no two adjacent vertices share a neighbour
    for a, b in P.graph.edges:
        na = {w for _, w in P.graph.incident(a)} - {b}
        nb = {w for _, w in P.graph.incident(b)} - {a}
        assert not (na & nb)
    assert P.edge_labels["u1v1"] == 10


def test_s4_shape():
    g = s4().graph
    assert g.n == 4 and g.m == 5
    assert sorted(g.degrees()) == [1, 3, 3, 3]
    assert g.multiplicity(2, 3) == 2  # the doubled bold edge


def test_s4_plus_km_multiplicities():
    for k in (0, 1, 2):
        lab = s4_plus_km(k)
        g = lab.graph
        assert g.multiplicity(lab.vertex_labels["v"], lab.vertex_labels["w"]) == k + 2
        assert g.multiplicity(lab.vertex_labels["u"], lab.vertex_labels["z"]) == k + 1
        assert g.degree(lab.vertex_labels["u"]) == k + 3
    with pytest.raises(ValueError):
        s4_plus_km(-1)


def test_s6_shape():
    g = s6().graph
    assert g.n == 6 and g.m == 9
    assert g.is_regular(3)
    assert s6_plus_km(2).graph.is_regular(5)


def test_s10_shape():
    lab = s10()
    g = lab.graph
    assert g.n == 10 and g.m == 15
    assert g.is_regular(3)
    assert g.degree(lab.vertex_labels["c"]) == 3
    assert not is_isomorphic(g, petersen().graph)
    assert not has_perfect_matching(g)


def test_s12_shape():
    g = s12().graph
    assert g.n == 12 and g.m == 18
    assert g.is_regular(3)
    g1 = s12_plus_km(1).graph
    assert g1.is_regular(4)
    assert g1.m == 24


def test_classical_constructors():
    assert complete(5).graph.m == 10
    assert complete_minus_edge(5).graph.m == 9
    k5e = complete_minus_edge(5)
    assert k5e.graph.multiplicity(k5e.vertex_labels["a"], k5e.vertex_labels["b"]) == 0
    assert star(3).graph.degrees() == (3, 1, 1, 1)
    assert t_k2(4).graph.multiplicity(0, 1) == 4
    assert cycle(5).graph.is_regular(2)
    assert path(4).graph.m == 3


def test_j_graph():
    lab = j_graph(2)
    g = lab.graph
    assert g.n == 11
    assert g.is_regular(4)
    assert len(set(g.edges)) == g.m  # simple
    centre = lab.vertex_labels["u"]
    assert g.degree(centre) == 4


def test_regular_multigraphs_labelled_count():
    # all labelled loopless 3-regular multigraphs on 4 vertices: K4 (1),
    # two doubled edges plus a matching (6), two triple edges (3)
    assert sum(1 for _ in _regular_multigraphs(4, 3)) == 10
    for edges in _regular_multigraphs(4, 3):
        assert Multigraph(4, edges).is_regular(3)


def test_k_family_members():
    m3 = k_family_members(3, 4)
    assert len(m3) == 1
    assert m3[0].is_regular(4)
    m5 = k_family_members(5, 4)
    assert len(m5) == 1
    assert is_isomorphic(m5[0], complete(5).graph)
    assert k_family_members(4, 4) != []  # even t is feasible too
    assert k_family_members(7, 4) == []  # r < t-1
    with pytest.raises(ValueError):
        k_family_members(1, 4)


def test_poorly_matchable_ten_vertices():
    g = poorly_matchable_ten_vertices().graph
    assert g.n == 10
    assert g.is_regular(4)
    assert has_perfect_matching(g)
    assert has_two_disjoint_perfect_matchings(g) is None
    # independent all-pairs verification
    pms = [frozenset(M) for M in perfect_matchings(g)]
    assert pms and all(a & b for i, a in enumerate(pms) for b in pms[i + 1:])


def test_poorly_matchable_witness_small_orders_exhausted():
    # no 4-regular example exists on up to 4 vertices (fast instance of the
    # exhaustive search; orders 6 and 8 were exhausted the same way)
    assert poorly_matchable_witness(4, 4) is None
    with pytest.raises(ValueError):
        poorly_matchable_witness(3, 6)
