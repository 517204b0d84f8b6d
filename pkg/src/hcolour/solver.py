"""Exact decision and enumeration of H-colourings for a fixed host.

Backtracking over guest edges with per-vertex host-vertex domains.  A
guest vertex u keeps the set of host vertices v with deg(v) = deg(u) whose
boundary contains every host edge already assigned around u; once all of
u's edges are assigned, any surviving domain vertex matches u's type
exactly (set sizes agree), so no separate completion check is needed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal, Optional

from .colouring import Colouring, check_colouring
from .multigraph import Multigraph
from .structure import CHROMATIC_INDEX_EDGE_GUARD, chromatic_index

Status = Literal["sat", "unsat", "unknown"]


@dataclass
class SolveResult:
    status: Status
    colourings: list[Colouring] = field(default_factory=list)
    count: int = 0
    nodes: int = 0
    prunes: int = 0

    @property
    def witness(self) -> Optional[Colouring]:
        return self.colourings[0] if self.colourings else None


class _LimitExceeded(Exception):
    pass


def solve(
    host: Multigraph,
    guest: Multigraph,
    mode: Literal["first", "all", "count"] = "first",
    node_limit: Optional[int] = None,
) -> SolveResult:
    """Decide host ≺ guest; enumerate or count all labelled colourings.

    Sound and complete: every returned colouring revalidates, and "unsat"
    is only reported after exhaustive search.  Hitting the node limit gives
    status "unknown", never "unsat".
    """
    res = SolveResult(status="unsat")
    if guest.m == 0:
        # only the empty map; valid iff every guest vertex finds an
        # isolated host vertex (or the guest is empty)
        ok = all(
            any(host.degree(v) == 0 for v in range(host.n)) for _ in range(guest.n)
        )
        if ok:
            c = Colouring(host, guest, ())
            res.status = "sat"
            res.count = 1
            if mode != "count":
                res.colourings.append(c)
        return res

    host_inc = [host.incident_edges(v) for v in range(host.n)]
    by_degree: dict[int, list[int]] = {}
    for v in range(host.n):
        by_degree.setdefault(host.degree(v), []).append(v)

    domains: list[set[int]] = []
    for u in range(guest.n):
        d = set(by_degree.get(guest.degree(u), ()))
        if not d:
            return res  # some guest vertex has no possible image: unsat
        domains.append(d)

    order = _bfs_edge_order(guest)
    pos_in_order = {e: i for i, e in enumerate(order)}
    assignment: list[int] = [-1] * guest.m
    assigned_at: list[set[int]] = [set() for _ in range(guest.n)]
    edge_adjacent = [
        [e for v in guest.edges[eid] for e, _ in guest.incident(v) if e != eid]
        for eid in range(guest.m)
    ]

    def pick_edge() -> int:
        best_e, best_key = -1, None
        for e in order:
            if assignment[e] != -1:
                continue
            assigned_near = sum(1 for e2 in edge_adjacent[e] if assignment[e2] != -1)
            key = (-assigned_near, pos_in_order[e])
            if best_key is None or key < best_key:
                best_e, best_key = e, key
        return best_e

    def candidates(eid: int) -> list[int]:
        a, b = guest.edges[eid]
        pool_a = set().union(*(host_inc[v] for v in domains[a]))
        pool_b = set().union(*(host_inc[v] for v in domains[b]))
        pool = pool_a & pool_b
        pool -= {assignment[e2] for e2 in edge_adjacent[eid] if assignment[e2] != -1}
        return sorted(pool)

    found = 0

    def record() -> None:
        nonlocal found
        found += 1
        res.count += 1
        c = Colouring(host, guest, tuple(assignment))
        assert check_colouring(c).ok, "solver produced an invalid colouring"
        if mode != "count":
            res.colourings.append(c)

    def rec(depth: int) -> bool:
        """Returns True to abort the search (mode=first after a hit)."""
        res.nodes += 1
        if node_limit is not None and res.nodes > node_limit:
            raise _LimitExceeded
        if depth == guest.m:
            record()
            return mode == "first"
        eid = pick_edge()
        a, b = guest.edges[eid]
        for h in candidates(eid):
            assignment[eid] = h
            assigned_at[a].add(h)
            assigned_at[b].add(h)
            removed: list[tuple[int, int]] = []
            ok = True
            for u in (a, b):
                for v in [v for v in domains[u] if h not in host_inc[v]]:
                    domains[u].discard(v)
                    removed.append((u, v))
                if not domains[u]:
                    ok = False
                    break
            if ok:
                if rec(depth + 1):
                    return True
            else:
                res.prunes += 1
            for u, v in removed:
                domains[u].add(v)
            assigned_at[a].discard(h)
            assigned_at[b].discard(h)
            assignment[eid] = -1
        return False

    try:
        rec(0)
    except _LimitExceeded:
        res.status = "unknown"
        return res
    res.status = "sat" if found else "unsat"
    return res


def _bfs_edge_order(G: Multigraph) -> list[int]:
    """Guest edges by breadth-first discovery from a maximum-degree root."""
    if G.n == 0:
        return []
    root = max(range(G.n), key=G.degree)
    seen_v = {root}
    order: list[int] = []
    seen_e: set[int] = set()
    queue = [root]
    while queue:
        v = queue.pop(0)
        for eid, w in sorted(G.incident(v)):
            if eid not in seen_e:
                seen_e.add(eid)
                order.append(eid)
            if w not in seen_v:
                seen_v.add(w)
                queue.append(w)
    # isolated components (guests are usually connected; keep total anyway)
    order.extend(e for e in range(G.m) if e not in seen_e)
    return order


def tk2_colourable(guest: Multigraph, t: int) -> bool:
    """Colourability by t parallel edges on two vertices: t-regular and
    t-edge-colourable."""
    if not guest.is_regular(t):
        return False
    if guest.m == 0:
        return True
    return chromatic_index(guest) == t


def naive_solve_all(host: Multigraph, guest: Multigraph) -> list[Colouring]:
    """Independent oracle: filter all |E(H)|^|E(G)| maps by check_colouring.

    Only for tiny instances; used to cross-validate the backtracking
    solver.
    """
    import itertools

    out = []
    for f in itertools.product(range(host.m), repeat=guest.m):
        c = Colouring(host, guest, f)
        if check_colouring(c).ok:
            out.append(c)
    return out
