"""Matchings, chromatic index, regular-subgraph and exposed-copy predicates."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .canonical import is_isomorphic
from .multigraph import Multigraph

CHROMATIC_INDEX_EDGE_GUARD = 64


@dataclass(frozen=True)
class Matching:
    """An edge set no two members of which share an endpoint."""

    edges: frozenset[int]
    is_perfect: bool


def _as_matching(G: Multigraph, edges: frozenset[int]) -> Matching:
    covered = set()
    for e in edges:
        covered.update(G.edges[e])
    return Matching(edges, len(covered) == G.n and 2 * len(edges) == G.n)


def is_matching(G: Multigraph, F) -> bool:
    covered = set()
    for e in F:
        a, b = G.edges[e]
        if a in covered or b in covered:
            return False
        covered.add(a)
        covered.add(b)
    return True


def enumerate_matchings(G: Multigraph, min_size: int = 0) -> Iterator[Matching]:
    """All matchings with at least min_size edges, each exactly once.

    Deterministic include/exclude recursion over edge ids; a branch is cut
    as soon as the remaining edges cannot reach min_size.
    """
    m = G.m
    chosen: list[int] = []
    covered = set()

    def rec(i: int) -> Iterator[Matching]:
        if len(chosen) + (m - i) < min_size:
            return
        if i == m:
            if len(chosen) >= min_size:
                yield _as_matching(G, frozenset(chosen))
            return
        a, b = G.edges[i]
        if a not in covered and b not in covered:
            chosen.append(i)
            covered.add(a)
            covered.add(b)
            yield from rec(i + 1)
            chosen.pop()
            covered.discard(a)
            covered.discard(b)
        yield from rec(i + 1)

    yield from rec(0)


def perfect_matchings(G: Multigraph) -> Iterator[frozenset[int]]:
    """All perfect matchings, matching the lowest uncovered vertex first."""
    if G.n % 2 == 1:
        return
    covered = [False] * G.n
    chosen: list[int] = []

    def rec(depth: int) -> Iterator[frozenset[int]]:
        if depth == G.n // 2:
            yield frozenset(chosen)
            return
        u = next(v for v in range(G.n) if not covered[v])
        covered[u] = True
        for eid, w in G.incident(u):
            if not covered[w]:
                covered[w] = True
                chosen.append(eid)
                yield from rec(depth + 1)
                chosen.pop()
                covered[w] = False
        covered[u] = False

    yield from rec(0)


def perfect_matching_count(G: Multigraph) -> int:
    return sum(1 for _ in perfect_matchings(G))


def has_perfect_matching(G: Multigraph) -> bool:
    return next(perfect_matchings(G), None) is not None


def has_two_disjoint_perfect_matchings(
    G: Multigraph,
) -> Optional[tuple[frozenset[int], frozenset[int]]]:
    """A pair of edge-disjoint perfect matchings, or None if there is none.

    For every perfect matching M we look for a perfect matching of G - M;
    the first hit is returned.
    """
    for M in perfect_matchings(G):
        rest = [e for e in range(G.m) if e not in M]
        H, _, kept = G.edge_induced_subgraph(rest)
        if H.n == G.n:
            M2 = next(perfect_matchings(H), None)
            if M2 is not None:
                return M, frozenset(kept[e] for e in M2)
    return None


# -- exact edge colouring --------------------------------------------------

def edge_colouring(G: Multigraph, k: int) -> Optional[list[int]]:
    """A proper edge colouring with colours 0..k-1, or None.

    Exact backtracking over edges in static id order with the usual
    symmetry break (edge i may open at most one fresh colour).
    """
    colour = [-1] * G.m
    at_vertex: list[set[int]] = [set() for _ in range(G.n)]

    def rec(i: int, used: int) -> bool:
        if i == G.m:
            return True
        a, b = G.edges[i]
        limit = min(k, used + 1)
        for c in range(limit):
            if c in at_vertex[a] or c in at_vertex[b]:
                continue
            colour[i] = c
            at_vertex[a].add(c)
            at_vertex[b].add(c)
            if rec(i + 1, max(used, c + 1)):
                return True
            at_vertex[a].discard(c)
            at_vertex[b].discard(c)
            colour[i] = -1
        return False

    return colour if rec(0, 0) else None


def chromatic_index(G: Multigraph) -> int:
    """Exact chromatic index, guarded against oversized inputs."""
    if G.m > CHROMATIC_INDEX_EDGE_GUARD:
        raise ValueError(
            f"graph has {G.m} edges; exact chromatic index is guarded at "
            f"{CHROMATIC_INDEX_EDGE_GUARD}"
        )
    if G.m == 0:
        return 0
    k = max(G.degrees())
    while edge_colouring(G, k) is None:
        k += 1
    return k


# -- regular subgraphs and exposed copies ----------------------------------

def spanning_regular_check(G: Multigraph, F, k: int) -> bool:
    """True iff every vertex touched by F has exactly k incident F-edges."""
    count = [0] * G.n
    for e in F:
        a, b = G.edges[e]
        count[a] += 1
        count[b] += 1
    return all(c in (0, k) for c in count)


def exposed_copies(G: Multigraph, k: int = 0) -> list[frozenset[int]]:
    """All 4-vertex sets inducing a copy of S4+kM with full-degree heavy vertices.

    The three vertices playing the degree-(k+3) role must have all their
    edges inside the copy; the fourth vertex is unconstrained.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    from .named import s4_plus_km
    from itertools import combinations

    template = s4_plus_km(k).graph
    heavy = k + 3
    out = []
    for X in combinations(range(G.n), 4):
        sub, verts = G.induced_subgraph(X)
        if sub.m != template.m:
            continue
        if not is_isomorphic(sub, template):
            continue
        ok = True
        for i, v in enumerate(verts):
            if sub.degree(i) == heavy and G.degree(v) != heavy:
                ok = False
                break
        if ok:
            out.append(frozenset(X))
    return out
