"""Constructors for the named multigraphs, with the labellings the proofs use.

Each constructor returns a LabelledGraph: the multigraph plus a role map
from label text to vertex/edge ids.  Gadget copies carry superscripts, e.g.
"z^1", "l^2_1", "r^3_2".
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .canonical import canonical_form
from .multigraph import Multigraph


@dataclass(frozen=True)
class LabelledGraph:
    graph: Multigraph
    vertex_labels: dict[str, int] = field(default_factory=dict)
    edge_labels: dict[str, int] = field(default_factory=dict)

    @property
    def name(self) -> str:
        return self.graph.name


def petersen() -> LabelledGraph:
    """The Petersen graph: outer cycle u1..u5, inner pentagram v1..v5, spokes."""
    edges = []
    elabels = {}
    for i in range(5):
        elabels[f"u{i + 1}u{(i + 1) % 5 + 1}"] = len(edges)
        edges.append((i, (i + 1) % 5))
    for i in range(5):
        elabels[f"v{i + 1}v{(i + 2) % 5 + 1}"] = len(edges)
        edges.append((5 + i, 5 + (i + 2) % 5))
    for i in range(5):
        elabels[f"u{i + 1}v{i + 1}"] = len(edges)
        edges.append((i, 5 + i))
    vlabels = {f"u{i + 1}": i for i in range(5)}
    vlabels.update({f"v{i + 1}": 5 + i for i in range(5)})
    return LabelledGraph(Multigraph(10, edges, name="P"), vlabels, elabels)


def _gadget_edges(base: int, k: int, with_z: bool, z: int | None, sup: str):
    """Edges and labels of one S4+kM copy.

    Vertex offsets within the copy: u=base, v=base+1, w=base+2; z is the
    caller-supplied attachment vertex (own vertex for S4, centre/triangle
    vertex otherwise).  Bold matching edges get their k parallel copies
    here: k+2 copies of vw and, when the copy owns z, k+1 copies of uz.
    """
    u, v, w = base, base + 1, base + 2
    edges = []
    labels = {}
    labels[f"m{sup}_1"] = 0
    edges.append((u, v))
    labels[f"m{sup}_2"] = 1
    edges.append((u, w))
    for j in range(k + 2):
        labels[f"l{sup}_{j + 1}"] = len(edges)
        edges.append((v, w))
    if with_z:
        assert z is not None
        for j in range(k + 1):
            labels[f"r{sup}_{j + 1}"] = len(edges)
            edges.append((u, z))
    return edges, labels


def s4_plus_km(k: int) -> LabelledGraph:
    """S4 plus k parallel copies on each bold matching edge (S4+0M = S4)."""
    if k < 0:
        raise ValueError("k must be non-negative")
    # z=0, u=1, v=2, w=3
    edges, labels = _gadget_edges(1, k, with_z=True, z=0, sup="")
    vlabels = {"z": 0, "u": 1, "v": 2, "w": 3}
    name = "S4" if k == 0 else f"S4+{k}M"
    return LabelledGraph(Multigraph(4, edges, name=name), vlabels, labels)


def s4() -> LabelledGraph:
    return s4_plus_km(0)


def s6_plus_km(k: int) -> LabelledGraph:
    """Two triangle gadgets joined by the (k+1)-fold edge between their u-vertices."""
    if k < 0:
        raise ValueError("k must be non-negative")
    edges = []
    labels = {}
    vlabels = {}
    for i in (1, 2):
        base = (i - 1) * 3
        vlabels[f"u^{i}"] = base
        vlabels[f"v^{i}"] = base + 1
        vlabels[f"w^{i}"] = base + 2
        part, plabels = _gadget_edges(base, k, with_z=False, z=None, sup=f"^{i}")
        off = len(edges)
        edges.extend(part)
        labels.update({lab: off + e for lab, e in plabels.items()})
    for j in range(k + 1):
        labels[f"r_{j + 1}"] = len(edges)
        edges.append((0, 3))
    name = "S6" if k == 0 else f"S6+{k}M"
    return LabelledGraph(Multigraph(6, edges, name=name), vlabels, labels)


def s6() -> LabelledGraph:
    return s6_plus_km(0)


def s10() -> LabelledGraph:
    """The Sylvester graph: three gadgets attached to one central vertex."""
    edges = []
    labels = {}
    vlabels = {"c": 9}
    for i in (1, 2, 3):
        base = (i - 1) * 3
        vlabels[f"u^{i}"] = base
        vlabels[f"v^{i}"] = base + 1
        vlabels[f"w^{i}"] = base + 2
        part, plabels = _gadget_edges(base, 0, with_z=False, z=None, sup=f"^{i}")
        off = len(edges)
        edges.extend(part)
        labels.update({lab: off + e for lab, e in plabels.items()})
        labels[f"r^{i}_1"] = len(edges)
        edges.append((base, 9))
    return LabelledGraph(Multigraph(10, edges, name="S10"), vlabels, labels)


def s12_plus_km(k: int) -> LabelledGraph:
    """Three gadgets whose attachment edges end on a plain triangle z^1 z^2 z^3."""
    if k < 0:
        raise ValueError("k must be non-negative")
    edges = []
    labels = {}
    vlabels = {}
    for i in (1, 2, 3):
        base = (i - 1) * 4
        z, u, v, w = base, base + 1, base + 2, base + 3
        vlabels[f"z^{i}"] = z
        vlabels[f"u^{i}"] = u
        vlabels[f"v^{i}"] = v
        vlabels[f"w^{i}"] = w
        part, plabels = _gadget_edges(u, k, with_z=True, z=z, sup=f"^{i}")
        off = len(edges)
        edges.extend(part)
        labels.update({lab: off + e for lab, e in plabels.items()})
    for i, j in ((1, 2), (2, 3), (1, 3)):
        labels[f"z^{i}z^{j}"] = len(edges)
        edges.append((vlabels[f"z^{i}"], vlabels[f"z^{j}"]))
    name = "S12" if k == 0 else f"S12+{k}M"
    return LabelledGraph(Multigraph(12, edges, name=name), vlabels, labels)


def s12() -> LabelledGraph:
    return s12_plus_km(0)


# -- classical graphs ------------------------------------------------------

def complete(n: int) -> LabelledGraph:
    if n < 1:
        raise ValueError("n must be positive")
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    return LabelledGraph(Multigraph(n, edges, name=f"K{n}"))


def complete_minus_edge(n: int) -> LabelledGraph:
    """K_n minus one edge; the two deficient vertices are labelled a and b."""
    if n < 2:
        raise ValueError("n must be at least 2")
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if (i, j) != (0, 1)]
    return LabelledGraph(
        Multigraph(n, edges, name=f"K{n}'"), vertex_labels={"a": 0, "b": 1}
    )


def star(t: int) -> LabelledGraph:
    """K_{1,t}: centre 0 with t leaves."""
    if t < 1:
        raise ValueError("t must be positive")
    return LabelledGraph(
        Multigraph(t + 1, [(0, i + 1) for i in range(t)], name=f"K1,{t}"),
        vertex_labels={"centre": 0},
    )


def t_k2(t: int) -> LabelledGraph:
    """Two vertices with t parallel edges."""
    if t < 1:
        raise ValueError("t must be positive")
    return LabelledGraph(Multigraph(2, [(0, 1)] * t, name=f"{t}K2"))


def cycle(n: int) -> LabelledGraph:
    if n < 3:
        raise ValueError("n must be at least 3")
    return LabelledGraph(Multigraph(n, [(i, (i + 1) % n) for i in range(n)], name=f"C{n}"))


def path(n: int) -> LabelledGraph:
    """Path on n vertices (n-1 edges)."""
    if n < 1:
        raise ValueError("n must be positive")
    return LabelledGraph(Multigraph(n, [(i, i + 1) for i in range(n - 1)], name=f"P{n}"))


def j_graph(r: int) -> LabelledGraph:
    """r copies of K_{2r+1} minus an edge, glued to a new central vertex.

    The 2r degree-(2r-1) vertices are all joined to the centre, giving a
    2r-regular simple graph on r(2r+1)+1 vertices.
    """
    if r <= 1:
        raise ValueError("r must be greater than 1")
    size = 2 * r + 1
    n = r * size + 1
    centre = n - 1
    edges = []
    vlabels = {"u": centre}
    for c in range(r):
        base = c * size
        for i in range(size):
            for j in range(i + 1, size):
                if (i, j) == (0, 1):
                    continue
                edges.append((base + i, base + j))
        edges.append((base, centre))
        edges.append((base + 1, centre))
        vlabels[f"a^{c + 1}"] = base
        vlabels[f"b^{c + 1}"] = base + 1
    return LabelledGraph(Multigraph(n, edges, name=f"J{2 * r}"), vlabels)


# -- exhaustive families ---------------------------------------------------

def _regular_multigraphs(n: int, r: int, min_mult: int = 0):
    """All labelled loopless multigraphs on n vertices with all degrees r.

    DFS over the upper-triangle multiplicity matrix in lexicographic pair
    order, with remaining-degree feasibility pruning.  Yields edge lists.
    """
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    remaining = [r] * n
    # how many future pairs still touch vertex v, counting from pair index p
    touch_after = [[0] * (len(pairs) + 1) for _ in range(n)]
    for p in range(len(pairs) - 1, -1, -1):
        i, j = pairs[p]
        for v in range(n):
            touch_after[v][p] = touch_after[v][p + 1] + (1 if v in (i, j) else 0)
    mult = [0] * len(pairs)

    def rec(p: int):
        if p == len(pairs):
            if all(x == 0 for x in remaining):
                edges = []
                for q, m in enumerate(mult):
                    edges.extend([pairs[q]] * m)
                yield edges
            return
        i, j = pairs[p]
        hi = min(remaining[i], remaining[j], r)
        for m in range(hi + 1):
            remaining[i] -= m
            remaining[j] -= m
            feasible = all(
                remaining[v] <= r * (touch_after[v][p + 1]) for v in (i, j)
            ) and remaining[i] >= 0 and remaining[j] >= 0
            if feasible:
                mult[p] = m
                yield from rec(p + 1)
            remaining[i] += m
            remaining[j] += m
        mult[p] = 0

    if min_mult:
        raise ValueError("min_mult handled by k_family_members directly")
    yield from rec(0)


def k_family_members(t: int, r: int) -> list[Multigraph]:
    """All r-regular multigraphs on t pairwise-adjacent vertices, up to iso.

    Every vertex pair gets multiplicity at least 1.  Infeasible parameters
    give the empty list.
    """
    if t < 2 or r < 1:
        raise ValueError("need t >= 2 and r >= 1")
    if t * r % 2 == 1 or r < t - 1:
        return []
    pairs = [(i, j) for i in range(t) for j in range(i + 1, t)]
    remaining = [r - (t - 1)] * t  # degrees left after the mandatory clique
    mult = [1] * len(pairs)
    seen: dict[bytes, Multigraph] = {}

    def rec(p: int):
        if p == len(pairs):
            if all(x == 0 for x in remaining):
                edges = []
                for q, m in enumerate(mult):
                    edges.extend([pairs[q]] * m)
                G = Multigraph(t, edges)
                key = canonical_form(G)
                if key not in seen:
                    seen[key] = G
            return
        i, j = pairs[p]
        for extra in range(min(remaining[i], remaining[j]) + 1):
            remaining[i] -= extra
            remaining[j] -= extra
            mult[p] = 1 + extra
            rec(p + 1)
            remaining[i] += extra
            remaining[j] += extra
            mult[p] = 1

    rec(0)
    return list(seen.values())


def poorly_matchable_ten_vertices() -> LabelledGraph:
    """A 4-regular multigraph with a perfect matching but no two disjoint ones.

    The Sylvester graph plus one perfect pairing of its vertex set.  The
    exhaustive search below proves no such graph exists on fewer than 10
    vertices, so this is order-minimal for degree 4.
    """
    base = s10()
    pairing = [(0, 1), (2, 3), (4, 5), (6, 7), (8, 9)]
    graph = Multigraph(
        10, list(base.graph.edges) + pairing, name="S10+pairing"
    )
    return LabelledGraph(graph, dict(base.vertex_labels), dict(base.edge_labels))


def poorly_matchable_witness(r: int, max_order: int) -> Multigraph | None:
    """Smallest-order r-regular multigraph with a perfect matching but no
    two disjoint ones, or None if there is none up to max_order.

    Exhaustive deterministic search over connected labelled candidates in
    increasing order; the first hit at the smallest feasible order wins.
    A disconnected witness would contain a smaller witness component, so
    restricting to connected graphs keeps the order minimal.
    """
    from .structure import has_perfect_matching, has_two_disjoint_perfect_matchings

    if r < 4:
        raise ValueError("poorly matchable search is defined for r >= 4")
    for n in range(2, max_order + 1, 2):
        for edges in _regular_multigraphs(n, r):
            G = Multigraph(n, edges, name=f"poorly-matchable-{r}")
            if not G.is_connected():
                continue
            if not has_perfect_matching(G):
                continue
            if has_two_disjoint_perfect_matchings(G) is None:
                return G
    return None
