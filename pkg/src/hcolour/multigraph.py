"""Loopless multigraphs with stable integer vertex and edge ids.

Vertices are 0..n-1.  Edges are stored as a tuple of unordered endpoint
pairs; the position of a pair is the edge id, so parallel edges are
individually addressable.  Graphs are immutable after construction and all
queries are pure.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Sequence


class Multigraph:
    """A finite undirected loopless multigraph."""

    __slots__ = ("n", "edges", "name", "_adj", "_canon")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]], name: str = ""):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        norm = []
        for a, b in edges:
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"edge ({a},{b}) has an endpoint outside 0..{n - 1}")
            if a == b:
                raise ValueError(f"loop at vertex {a} is not allowed")
            norm.append((a, b) if a < b else (b, a))
        self.n = n
        self.edges = tuple(norm)
        self.name = name
        adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for eid, (a, b) in enumerate(self.edges):
            adj[a].append((eid, b))
            adj[b].append((eid, a))
        self._adj = tuple(tuple(x) for x in adj)
        self._canon = None

    # -- basic accessors ---------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    def incident(self, u: int) -> tuple[tuple[int, int], ...]:
        """(edge id, other endpoint) pairs at vertex u."""
        self._check_vertex(u)
        return self._adj[u]

    def incident_edges(self, u: int) -> frozenset[int]:
        """The set of edge ids incident to u (the boundary of {u})."""
        self._check_vertex(u)
        return frozenset(eid for eid, _ in self._adj[u])

    def degree(self, u: int) -> int:
        self._check_vertex(u)
        return len(self._adj[u])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self._adj)

    def is_regular(self, r: int) -> bool:
        return all(len(a) == r for a in self._adj)

    def multiplicity(self, a: int, b: int) -> int:
        """Number of parallel edges between a and b."""
        self._check_vertex(a)
        self._check_vertex(b)
        return sum(1 for _, w in self._adj[a] if w == b)

    def boundary(self, U: Iterable[int]) -> frozenset[int]:
        """Edge ids with exactly one endpoint in U."""
        s = set(U)
        for u in s:
            self._check_vertex(u)
        return frozenset(
            eid for eid, (a, b) in enumerate(self.edges) if (a in s) != (b in s)
        )

    def other_end(self, eid: int, u: int) -> int:
        a, b = self.edges[eid]
        if u == a:
            return b
        if u == b:
            return a
        raise ValueError(f"vertex {u} is not an endpoint of edge {eid}")

    # -- connectivity ------------------------------------------------------

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists, ordered by minimum."""
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            comp = [s]
            seen[s] = True
            stack = [s]
            while stack:
                v = stack.pop()
                for _, w in self._adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def is_edge_cut(self, X: Iterable[int]) -> bool:
        """True iff removing the edge set X disconnects this connected graph."""
        if not self.is_connected():
            raise ValueError("is_edge_cut requires a connected graph")
        cut = set(X)
        for eid in cut:
            self._check_edge(eid)
        if self.n <= 1:
            return False
        seen = [False] * self.n
        seen[0] = True
        stack = [0]
        count = 1
        while stack:
            v = stack.pop()
            for eid, w in self._adj[v]:
                if eid not in cut and not seen[w]:
                    seen[w] = True
                    count += 1
                    stack.append(w)
        return count < self.n

    def bridges(self) -> frozenset[int]:
        """All edges whose removal disconnects their component.

        Tarjan lowpoint DFS; a parallel edge is never a bridge because the
        twin copy keeps its endpoints connected.
        """
        disc = [-1] * self.n
        low = [0] * self.n
        out = []
        timer = itertools.count()
        for root in range(self.n):
            if disc[root] != -1:
                continue
            # iterative DFS: (vertex, parent edge id, iterator over incidences)
            stack = [(root, -1, iter(self._adj[root]))]
            disc[root] = low[root] = next(timer)
            while stack:
                v, pe, it = stack[-1]
                advanced = False
                for eid, w in it:
                    if eid == pe:
                        continue
                    if disc[w] == -1:
                        disc[w] = low[w] = next(timer)
                        stack.append((w, eid, iter(self._adj[w])))
                        advanced = True
                        break
                    low[v] = min(low[v], disc[w])
                if not advanced:
                    stack.pop()
                    if stack:
                        u = stack[-1][0]
                        low[u] = min(low[u], low[v])
                        if low[v] > disc[u]:
                            out.append(pe)
        return frozenset(out)

    # -- subgraphs ---------------------------------------------------------

    def induced_subgraph(self, X: Iterable[int]) -> tuple["Multigraph", list[int]]:
        """Vertex-induced subgraph G[X]; also returns old ids in new order."""
        verts = sorted(set(X))
        for v in verts:
            self._check_vertex(v)
        pos = {v: i for i, v in enumerate(verts)}
        edges = [
            (pos[a], pos[b])
            for a, b in self.edges
            if a in pos and b in pos
        ]
        return Multigraph(len(verts), edges), verts

    def edge_induced_subgraph(self, F: Iterable[int]) -> tuple["Multigraph", list[int], list[int]]:
        """Edge-induced subgraph on F.

        Returns (subgraph, vertex ids kept, edge ids kept in new order).
        """
        eids = sorted(set(F))
        for e in eids:
            self._check_edge(e)
        verts = sorted({v for e in eids for v in self.edges[e]})
        pos = {v: i for i, v in enumerate(verts)}
        edges = [(pos[self.edges[e][0]], pos[self.edges[e][1]]) for e in eids]
        return Multigraph(len(verts), edges), verts, eids

    # -- misc --------------------------------------------------------------

    def relabelled(self, perm: Sequence[int]) -> "Multigraph":
        """Image under vertex permutation perm (old id -> new id)."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of the vertex ids")
        return Multigraph(self.n, [(perm[a], perm[b]) for a, b in self.edges], self.name)

    def _check_vertex(self, u: int) -> None:
        if not (0 <= u < self.n):
            raise ValueError(f"invalid vertex id {u} for graph on {self.n} vertices")

    def _check_edge(self, e: int) -> None:
        if not (0 <= e < len(self.edges)):
            raise ValueError(f"invalid edge id {e} for graph with {len(self.edges)} edges")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Multigraph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<Multigraph{label} n={self.n} m={self.m}>"


# -- text edge-list format -------------------------------------------------

def to_edge_list_text(G: Multigraph, comments: Iterable[str] = ()) -> str:
    """Serialize as the plain text format: '# ...' comments, 'n m', then edges."""
    lines = [f"# {c}" for c in comments]
    lines.append(f"{G.n} {G.m}")
    lines.extend(f"{a} {b}" for a, b in G.edges)
    return "\n".join(lines) + "\n"


def from_edge_list_text(text: str, name: str = "") -> Multigraph:
    """Parse the text edge-list format; edge ids follow line order."""
    header = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected two integers, got {line!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
        if header is None:
            header = (a, b)
        else:
            edges.append((a, b))
    if header is None:
        raise ValueError("empty input: missing 'n m' header line")
    n, m = header
    if len(edges) != m:
        raise ValueError(f"header announces {m} edges but {len(edges)} were given")
    return Multigraph(n, edges, name=name)


def empty_graph(n: int = 0) -> Multigraph:
    return Multigraph(n, [])


def sum_of_degrees(G: Multigraph) -> int:
    return sum(G.degrees())
