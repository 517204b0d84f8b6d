"""H-colouring semantics: validation, induced vertex map, images, preimages.

A Colouring is a host/guest pair plus a total map from guest edge ids to
host edge ids.  Validity means the map is a proper edge colouring and
every guest vertex's incident image equals the boundary of some host
vertex (set equality of edge-id sets).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .multigraph import Multigraph
from .structure import is_matching, spanning_regular_check


class AmbiguousHostError(ValueError):
    """The induced vertex map is not well defined (tK2-type host)."""


@dataclass(frozen=True)
class Colouring:
    host: Multigraph
    guest: Multigraph
    edge_map: tuple[int, ...]

    def __post_init__(self):
        if len(self.edge_map) != self.guest.m:
            raise ValueError(
                f"edge map has {len(self.edge_map)} entries for a guest with "
                f"{self.guest.m} edges; the map must be total"
            )
        for h in self.edge_map:
            if not (0 <= h < self.host.m):
                raise ValueError(f"host edge id {h} out of range")

    def image_edges(self) -> frozenset[int]:
        """Im(f): the used host edges."""
        return frozenset(self.edge_map)

    def pairs(self) -> list[tuple[int, int]]:
        return list(enumerate(self.edge_map))


@dataclass(frozen=True)
class ColouringReport:
    ok: bool
    properness_violations: tuple[tuple[int, int], ...] = ()
    vertex_violations: tuple[int, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def check_colouring(c: Colouring) -> ColouringReport:
    """Validate both H-colouring conditions, reporting every violation."""
    G, H, f = c.guest, c.host, c.edge_map
    proper = []
    for u in range(G.n):
        inc = G.incident(u)
        seen: dict[int, int] = {}
        for eid, _ in inc:
            h = f[eid]
            if h in seen:
                proper.append((seen[h], eid))
            else:
                seen[h] = eid
    vertex = []
    for u in range(G.n):
        img = frozenset(f[eid] for eid, _ in G.incident(u))
        if not _matching_host_vertices(H, img):
            vertex.append(u)
    return ColouringReport(
        ok=not proper and not vertex,
        properness_violations=tuple(proper),
        vertex_violations=tuple(vertex),
    )


def _matching_host_vertices(H: Multigraph, img: frozenset[int]) -> list[int]:
    """Host vertices v with boundary exactly img."""
    if not img:
        return [v for v in range(H.n) if H.degree(v) == 0]
    # candidates: endpoints of any image edge
    a, b = H.edges[next(iter(img))]
    return [v for v in (a, b) if H.incident_edges(v) == img]


def induced_vertex_map(c: Colouring) -> tuple[int, ...]:
    """f_V: for each guest vertex, the unique host vertex matching its type.

    Raises AmbiguousHostError when some guest vertex has two candidate host
    vertices (exactly the tK2-type situation) and ValueError for an invalid
    colouring.
    """
    report = check_colouring(c)
    if not report:
        raise ValueError(f"invalid colouring: {report}")
    out = []
    for u in range(c.guest.n):
        img = frozenset(c.edge_map[eid] for eid, _ in c.guest.incident(u))
        cands = _matching_host_vertices(c.host, img)
        if len(cands) > 1:
            raise AmbiguousHostError(
                f"guest vertex {u} has {len(cands)} candidate host vertices; "
                "use the tK2 equivalence instead"
            )
        out.append(cands[0])
    return tuple(out)


def image_subgraph(c: Colouring) -> tuple[Multigraph, list[int], list[int]]:
    """H_f: the edge-induced subgraph of the host on the used edges.

    Returns (H_f, host vertex ids kept, host edge ids kept).
    """
    if not check_colouring(c):
        raise ValueError("invalid colouring")
    return c.host.edge_induced_subgraph(sorted(c.image_edges()))


def unused_vertices(c: Colouring) -> frozenset[int]:
    """Host vertices of H_f outside the range of the induced vertex map."""
    fv = induced_vertex_map(c)
    _, verts, _ = image_subgraph(c)
    return frozenset(verts) - frozenset(fv)


@dataclass(frozen=True)
class ImageGraph:
    """A splitted image: the graph plus the roles its vertices play.

    used: vertices in the range of the vertex map (the guest vertex types).
    split: degree-1 vertices created by splitting an unused vertex of
    degree at least 2.  Unused vertices that already had degree 1 are kept
    as they are and listed in pendant_unused.
    """

    graph: Multigraph
    used: tuple[int, ...]
    split: tuple[int, ...]
    pendant_unused: tuple[int, ...] = ()
    source: Optional[Colouring] = None

    @property
    def split_vertex_count(self) -> int:
        return len(self.split)


def splitted_image(c: Colouring) -> ImageGraph:
    """Replace every unused vertex of degree d >= 2 by d degree-1 vertices."""
    fv = induced_vertex_map(c)
    Hf, verts, eids = image_subgraph(c)
    pos = {v: i for i, v in enumerate(verts)}
    used_old = sorted(set(fv))
    unused_old = [v for v in verts if v not in set(fv)]

    new_id: dict[int, int] = {}
    for v in used_old:
        new_id[v] = len(new_id)
    pendant = []
    for v in unused_old:
        if Hf.degree(pos[v]) == 1:
            new_id[v] = len(new_id)
            pendant.append(new_id[v])
    split = []
    edges = []
    next_id = len(new_id)
    for e in eids:
        a, b = c.host.edges[e]
        ends = []
        for v in (a, b):
            if v in new_id:
                ends.append(new_id[v])
            else:
                # unused vertex of degree >= 2: a fresh split copy per edge
                ends.append(next_id)
                split.append(next_id)
                next_id += 1
        edges.append((ends[0], ends[1]))
    graph = Multigraph(next_id, edges, name=f"~H_f({c.host.name or 'H'})")
    return ImageGraph(
        graph=graph,
        used=tuple(new_id[v] for v in used_old),
        split=tuple(split),
        pendant_unused=tuple(pendant),
        source=c,
    )


# -- preimages -------------------------------------------------------------

@dataclass(frozen=True)
class PreimageCheck:
    name: str
    applicable: bool
    holds: bool


@dataclass(frozen=True)
class PreimageReport:
    edges: frozenset[int]
    checks: tuple[PreimageCheck, ...]

    def check(self, name: str) -> PreimageCheck:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    @property
    def all_applicable_hold(self) -> bool:
        return all(c.holds for c in self.checks if c.applicable)


def preimage(c: Colouring, F: Iterable[int]) -> PreimageReport:
    """f^{-1}(F) with the lemma-driven classification flags.

    Whenever F has one of the recognised host-side shapes, the report
    asserts the corresponding guest-side shape of the preimage.
    """
    if not check_colouring(c):
        raise ValueError("invalid colouring")
    H, G = c.host, c.guest
    Fset = frozenset(F)
    for e in Fset:
        H._check_edge(e)
    pre = frozenset(e for e, h in enumerate(c.edge_map) if h in Fset)

    checks = []

    host_matching = is_matching(H, Fset)
    checks.append(
        PreimageCheck("matching", host_matching, is_matching(G, pre))
    )

    covered = {v for e in Fset for v in H.edges[e]}
    host_pm = host_matching and len(covered) == H.n and 2 * len(Fset) == H.n
    guest_pm = (
        is_matching(G, pre)
        and 2 * len(pre) == G.n
        and {v for e in pre for v in G.edges[e]} == set(range(G.n))
    )
    checks.append(PreimageCheck("perfect_matching", host_pm, guest_pm))

    try:
        fv = induced_vertex_map(c)
        im_fv = set(fv)
        covers_image = host_matching and im_fv <= covered
        checks.append(PreimageCheck("covering_matching", covers_image, guest_pm))
    except AmbiguousHostError:
        im_fv = None
        checks.append(PreimageCheck("covering_matching", False, guest_pm))

    # edge-cut of H_f leaving no isolated vertex, for connected guests
    cut_applicable = False
    cut_holds = False
    if G.is_connected() and G.n > 1:
        Hf, verts, eids = image_subgraph(c)
        back = {old: new for new, old in enumerate(eids)}
        if Fset <= set(eids):
            X = {back[e] for e in Fset}
            if Hf.is_edge_cut(X):
                degree_left = [
                    Hf.degree(v) - sum(1 for e in X if v in Hf.edges[e])
                    for v in range(Hf.n)
                ]
                if all(d > 0 for d in degree_left):
                    cut_applicable = True
                    cut_holds = G.is_edge_cut(pre)
    checks.append(PreimageCheck("edge_cut", cut_applicable, cut_holds))

    # k-regular host edge set meeting Im(f_V)
    reg_applicable = False
    reg_holds = False
    if Fset and im_fv is not None:
        degs = [0] * H.n
        for e in Fset:
            a, b = H.edges[e]
            degs[a] += 1
            degs[b] += 1
        touched = [d for d in degs if d]
        if touched and len(set(touched)) == 1:
            k = touched[0]
            if any(degs[v] for v in im_fv):
                reg_applicable = True
                reg_holds = bool(pre) and spanning_regular_check(G, pre, k)
        checks.append(PreimageCheck("regular_subgraph", reg_applicable, reg_holds))
    else:
        checks.append(PreimageCheck("regular_subgraph", False, False))

    return PreimageReport(edges=pre, checks=tuple(checks))
