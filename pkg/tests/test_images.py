import pytest

from hcolour.canonical import canonical_form, is_isomorphic
from hcolour.colouring import check_colouring
from hcolour.images import (
    TypePartition,
    enumerate_splitted_images,
    image_admits_extension,
    realize_image,
)
from hcolour.multigraph import Multigraph
from hcolour.named import (
    cycle,
    k_family_members,
    path,
    petersen,
    s4,
    s10,
    s12,
    s12_plus_km,
    complete,
)
from hcolour.solver import naive_solve_all, solve


def test_type_partition_validation():
    C4 = cycle(4).graph
    good = TypePartition(C4, (0, 1, 0, 1), (0, 1, 2, 3))
    good.validate()
    with pytest.raises(ValueError):
        TypePartition(C4, (0, 0, 1, 1), (0, 1, 2, 3)).validate()  # improper
    with pytest.raises(ValueError):
        TypePartition(C4, (1, 0, 1, 0), (0, 1, 2, 3)).validate()  # not RGS
    with pytest.raises(ValueError):
        TypePartition(C4, (0, 1, 0), (0, 1, 2, 3)).validate()  # not total


def test_type_partition_two_types_per_class():
    # a star's edges all meet at the centre, so a path partitioned into
    # three singleton classes is fine, but K1,3 coloured with one class per
    # edge yields three distinct leaf types sharing no class; construct a
    # genuine violation instead: a path of 4 edges alternating 2 classes
    P5 = path(5).graph
    p = TypePartition(P5, (0, 1, 0, 1), (0, 1, 2, 3))
    # class 0 appears in types {0}, {0,1}, {0,1}: fine (2 distinct)
    p.validate()
    # triangle with three classes, all types distinct pairs: class 0 in
    # {0,1} and {0,2} -> 2 types, still fine
    TypePartition(cycle(3).graph, (0, 1, 2), (0, 1, 2)).validate()
    # paw with classes 0,1,2,1: class 1 lands in four distinct vertex types
    paw = Multigraph(4, [(0, 1), (1, 2), (0, 2), (0, 3)])
    with pytest.raises(ValueError):
        TypePartition(paw, (0, 1, 2, 1), (0, 1, 2, 3)).validate()


def test_realize_image_cycle():
    # alternating classes give every C4 vertex the same type {0,1}, so both
    # classes are single-type and realize as pendant edges: the image is P3
    C4 = cycle(4).graph
    img = realize_image(TypePartition(C4, (0, 1, 0, 1), (0, 1, 2, 3)))
    assert img.graph.n == 3 and img.graph.m == 2
    assert img.split == ()
    assert len(img.pendant_unused) == 2
    assert check_colouring(img.source).ok


def test_realize_image_single_type_class_gets_pendant():
    P3 = path(3).graph
    img = realize_image(TypePartition(P3, (0, 1), (0, 1)))
    # centre type {0,1}; leaf types {0} and {1}; no single-type class
    assert img.graph.m == 2
    p = TypePartition(path(2).graph, (0,), (0,))
    img2 = realize_image(p)
    # both endpoints share type {0}: one used vertex plus a fresh pendant
    assert img2.graph.n == 2
    assert len(img2.pendant_unused) == 1
    assert image_admits_extension(img2) is False


def test_petersen_atlas_exact():
    atlas = enumerate_splitted_images(petersen().graph)
    assert atlas.complete
    assert len(atlas.entries) == 2
    expected = {canonical_form(petersen().graph), canonical_form(s4().graph)}
    assert atlas.canonical_set() == expected
    assert all(e.split_vertex_count == 0 for e in atlas.entries)
    assert all(check_colouring(e.witness).ok for e in atlas.entries)
    # multiplicities frozen after independent computation
    assert atlas.find(petersen().graph).multiplicity == 1
    assert atlas.find(s4().graph).multiplicity == 120
    assert atlas.tk2_realizable is False  # P is class 2


def test_s10_atlas_exact():
    g = s10().graph
    atlas = enumerate_splitted_images(g)
    assert atlas.complete
    assert atlas.canonical_set() == {canonical_form(g)}


def test_s12_atlas_exact():
    atlas = enumerate_splitted_images(s12().graph)
    assert atlas.complete
    assert atlas.canonical_set() == {
        canonical_form(s10().graph),
        canonical_form(s12().graph),
    }


def test_s12_plus_1m_rigidity():
    g = s12_plus_km(1).graph
    atlas = enumerate_splitted_images(g)
    assert atlas.complete
    assert atlas.canonical_set() == {canonical_form(g)}


def test_k5_atlas_within_k_family():
    atlas = enumerate_splitted_images(complete(5).graph)
    assert atlas.complete
    for e in atlas.entries:
        t = e.graph.n
        assert t % 2 == 1
        members = {canonical_form(m) for m in k_family_members(t, 4)}
        assert e.canonical in members
        assert all(e.graph.degree(v) == 4 for v in range(e.graph.n))


def test_c4_atlas_and_tk2_flag():
    atlas = enumerate_splitted_images(cycle(4).graph)
    assert atlas.tk2_realizable is True
    ns = sorted((e.graph.n, e.graph.m) for e in atlas.entries)
    # images: the path P3 (digon collapse), P4, and C4 itself
    assert (4, 4) in ns
    assert atlas.complete


def test_atlas_matches_colourings_found_by_solver():
    """Oracle agreement: images extracted from explicit colourings of small
    guests against every small host are all present in the atlas."""
    from hcolour.colouring import splitted_image, AmbiguousHostError
    from hcolour.named import star

    guests = [cycle(3).graph, cycle(4).graph, path(4).graph, star(3).graph]
    hosts = [cycle(3).graph, cycle(4).graph, path(4).graph, s4().graph,
             complete(3).graph]
    for guest in guests:
        atlas = enumerate_splitted_images(guest)
        keys = atlas.canonical_set()
        for host in hosts:
            for c in naive_solve_all(host, guest):
                try:
                    img = splitted_image(c)
                except AmbiguousHostError:
                    continue
                if img.split:
                    continue  # extension of an atlas entry, not an entry
                assert canonical_form(img.graph) in keys


def test_enumeration_rejects_trivial_guests():
    with pytest.raises(ValueError):
        enumerate_splitted_images(Multigraph(2, [(0, 1)]))
    with pytest.raises(ValueError):
        enumerate_splitted_images(Multigraph(4, [(0, 1), (2, 3)]))


def test_node_limit_marks_incomplete():
    atlas = enumerate_splitted_images(petersen().graph, node_limit=10)
    assert not atlas.complete


def test_bridge_and_degree_facts_on_petersen_images():
    atlas = enumerate_splitted_images(petersen().graph)
    for e in atlas.entries:
        g = e.graph
        assert all(g.degree(v) in (1, 3) for v in range(g.n))
        for eid in g.bridges():
            a, b = g.edges[eid]
            assert (g.degree(a) == 1) != (g.degree(b) == 1)
