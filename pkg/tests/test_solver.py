import pytest

from hcolour.colouring import check_colouring
from hcolour.multigraph import Multigraph, empty_graph
from hcolour.named import (
    complete,
    cycle,
    j_graph,
    k_family_members,
    path,
    petersen,
    s4,
    s10,
    s12,
    s12_plus_km,
    star,
    t_k2,
)
from hcolour.solver import naive_solve_all, solve, tk2_colourable


def test_s4_colours_petersen():
    res = solve(s4().graph, petersen().graph)
    assert res.status == "sat"
    assert check_colouring(res.witness).ok


def test_star3_does_not_colour_petersen():
    res = solve(star(3).graph, petersen().graph)
    assert res.status == "unsat"
    assert res.count == 0


def test_petersen_colours_itself():
    res = solve(petersen().graph, petersen().graph)
    assert res.status == "sat"


def test_count_mode_s4_petersen():
    # frozen after cross-checking the full enumeration
    res = solve(s4().graph, petersen().graph, mode="count")
    assert res.count == 480
    assert res.colourings == []


def test_all_mode_matches_count():
    res_all = solve(s4().graph, cycle(5).graph, mode="all")
    res_cnt = solve(s4().graph, cycle(5).graph, mode="count")
    assert len(res_all.colourings) == res_all.count == res_cnt.count
    assert len({c.edge_map for c in res_all.colourings}) == res_all.count


def test_node_limit_gives_unknown_not_unsat():
    res = solve(s12().graph, s12().graph, node_limit=3)
    assert res.status == "unknown"


def test_empty_guest():
    host_with_isolated = Multigraph(2, [])
    res = solve(host_with_isolated, empty_graph(3))
    assert res.status == "sat"
    res2 = solve(s4().graph, empty_graph(1))
    assert res2.status == "unsat"  # S4 has no isolated vertex


def test_degree_mismatch_immediately_unsat():
    res = solve(cycle(3).graph, star(3).graph)
    assert res.status == "unsat"
    assert res.nodes == 0


@pytest.mark.parametrize(
    "host,guest",
    [
        (s4().graph, cycle(3).graph),
        (s4().graph, cycle(4).graph),
        (t_k2(2).graph, cycle(4).graph),
        (t_k2(2).graph, cycle(5).graph),
        (cycle(3).graph, cycle(3).graph),
        (cycle(3).graph, cycle(4).graph),
        (star(3).graph, star(3).graph),
        (path(3).graph, path(4).graph),
        (t_k2(3).graph, complete(4).graph),
        (complete(3).graph, cycle(6).graph),
    ],
)
def test_solver_agrees_with_naive_oracle(host, guest):
    fast = solve(host, guest, mode="all")
    slow = naive_solve_all(host, guest)
    assert {c.edge_map for c in fast.colourings} == {c.edge_map for c in slow}
    assert fast.count == len(slow)
    assert (fast.status == "sat") == bool(slow)


def test_j4_exclusion():
    guest = j_graph(2).graph
    hosts = k_family_members(3, 4) + k_family_members(5, 4)
    assert len(hosts) == 2
    for h in hosts:
        assert solve(h, guest).status == "unsat"


def test_s12_plus_1m_does_not_colour_order10_witness():
    from hcolour.named import poorly_matchable_ten_vertices

    res = solve(s12_plus_km(1).graph, poorly_matchable_ten_vertices().graph)
    assert res.status == "unsat"


def test_tk2_colourable():
    assert tk2_colourable(cycle(4).graph, 2)
    assert not tk2_colourable(cycle(5).graph, 2)  # odd cycle needs 3 colours
    assert not tk2_colourable(petersen().graph, 3)  # class 2
    assert tk2_colourable(complete(4).graph, 3)
    assert not tk2_colourable(star(3).graph, 3)  # not regular


def test_tk2_equivalence_with_solver():
    for g in [cycle(4).graph, cycle(5).graph, cycle(6).graph,
              complete(4).graph, t_k2(3).graph]:
        t = g.degree(0)
        if not g.is_regular(t):
            continue
        via_solver = solve(t_k2(t).graph, g).status == "sat"
        via_star = solve(star(t).graph, g).status == "sat"
        assert via_solver == via_star == tk2_colourable(g, t)


def test_multiplicity_sensitivity():
    # the doubled triangle needs a host with parallel edges
    doubled = Multigraph(3, [(0, 1), (1, 2), (0, 2)] * 2)
    assert solve(complete(4).graph, doubled).status == "unsat"
    assert solve(doubled, doubled).status == "sat"
