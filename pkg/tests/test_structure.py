import pytest

from hcolour.multigraph import Multigraph
from hcolour.named import cycle, petersen, s4, s10, s12_plus_km, t_k2
from hcolour.structure import (
    chromatic_index,
    edge_colouring,
    enumerate_matchings,
    exposed_copies,
    has_perfect_matching,
    has_two_disjoint_perfect_matchings,
    is_matching,
    perfect_matching_count,
    perfect_matchings,
    spanning_regular_check,
)


def test_is_matching():
    G = cycle(4).graph
    assert is_matching(G, [])
    assert is_matching(G, [0, 2])
    assert not is_matching(G, [0, 1])


def test_enumerate_matchings_counts_c4():
    # C4: empty, 4 singletons, 2 perfect -> 7 matchings
    ms = list(enumerate_matchings(cycle(4).graph))
    assert len(ms) == 7
    assert sum(1 for M in ms if M.is_perfect) == 2
    assert len({M.edges for M in ms}) == 7  # each exactly once


def test_enumerate_matchings_min_size():
    ms = list(enumerate_matchings(cycle(4).graph, min_size=2))
    assert {frozenset(M.edges) for M in ms} == {frozenset({0, 2}), frozenset({1, 3})}


def test_petersen_has_six_perfect_matchings():
    # frozen after independent enumeration of all matchings of size 5
    P = petersen().graph
    assert perfect_matching_count(P) == 6
    direct = {M.edges for M in enumerate_matchings(P, min_size=5) if M.is_perfect}
    assert direct == {frozenset(M) for M in perfect_matchings(P)}


def test_perfect_matchings_odd_order_empty():
    assert not has_perfect_matching(cycle(5).graph)


def test_two_disjoint_perfect_matchings():
    C4 = cycle(4).graph
    pair = has_two_disjoint_perfect_matchings(C4)
    assert pair is not None
    M1, M2 = pair
    assert not (M1 & M2)
    assert is_matching(C4, M1) and is_matching(C4, M2)


def test_petersen_no_two_disjoint_perfect_matchings():
    # any two of the six perfect matchings of P share exactly one edge
    P = petersen().graph
    assert has_two_disjoint_perfect_matchings(P) is None
    pms = [frozenset(M) for M in perfect_matchings(P)]
    assert all(len(a & b) == 1 for i, a in enumerate(pms) for b in pms[i + 1:])


def test_s10_has_no_perfect_matching():
    assert not has_perfect_matching(s10().graph)


def test_s12_plus_1m_has_two_disjoint_pms():
    pair = has_two_disjoint_perfect_matchings(s12_plus_km(1).graph)
    assert pair is not None


def test_edge_colouring_validity():
    P = petersen().graph
    assert edge_colouring(P, 3) is None
    col = edge_colouring(P, 4)
    assert col is not None
    for u in range(P.n):
        cols = [col[e] for e, _ in P.incident(u)]
        assert len(cols) == len(set(cols))


def test_chromatic_index_values():
    assert chromatic_index(petersen().graph) == 4  # class 2
    assert chromatic_index(cycle(4).graph) == 2
    assert chromatic_index(cycle(5).graph) == 3
    assert chromatic_index(t_k2(3).graph) == 3
    assert chromatic_index(Multigraph(3, [(0, 1), (1, 2), (0, 2), (0, 1)])) == 4


def test_chromatic_index_guard():
    big = Multigraph(40, [(i, j) for i in range(40) for j in range(i + 1, 40)][:70])
    with pytest.raises(ValueError):
        chromatic_index(big)


def test_spanning_regular_check():
    C4 = cycle(4).graph
    assert spanning_regular_check(C4, range(4), 2)
    assert spanning_regular_check(C4, [0, 2], 1)
    assert not spanning_regular_check(C4, [0, 1], 1)
    assert spanning_regular_check(C4, [], 3)


def test_exposed_copies_counts():
    # each graph built from triangle gadgets has one copy per gadget
    assert len(exposed_copies(s10().graph)) == 3
    assert len(exposed_copies(s12_plus_km(0).graph)) == 3
    assert len(exposed_copies(s12_plus_km(1).graph, k=1)) == 3
    assert len(exposed_copies(petersen().graph)) == 0
    # S4 itself is a single exposed copy
    assert exposed_copies(s4().graph) == [frozenset({0, 1, 2, 3})]
