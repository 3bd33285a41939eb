import math

import pytest

from planecolor.errors import InvalidEmbeddingError
from planecolor.graph import (
    Graph,
    PlaneGraph,
    euler_check,
    faces,
    girth,
    has_cycle_of_length,
    in_class_C,
    n3,
    precedes,
)

from conftest import cycle_graph, cycle_plane, path_graph, petersen, random_graph


def test_graph_basics():
    g = Graph(edges=[(0, 1), (1, 2)])
    assert g.vertices == [0, 1, 2]
    assert g.neighbors(1) == [0, 2]
    assert g.degree(1) == 2 and g.degree(0) == 1
    assert g.adjacent(0, 1) and not g.adjacent(0, 2)
    assert g.edges() == [(0, 1), (1, 2)]
    g.add_edge(0, 1)  # duplicate add is a no-op on a set representation
    assert g.edge_count() == 2


def test_self_loop_rejected():
    g = Graph()
    with pytest.raises(ValueError):
        g.add_edge(3, 3)


def test_negative_id_rejected():
    g = Graph()
    with pytest.raises(ValueError):
        g.add_vertex(-1)


def test_remove_edge_and_vertex():
    g = Graph(edges=[(0, 1), (1, 2), (0, 2)])
    g.remove_edge(0, 2)
    assert not g.adjacent(0, 2)
    with pytest.raises(ValueError):
        g.remove_edge(0, 2)
    g.remove_vertex(1)
    assert g.vertices == [0, 2]
    assert g.edge_count() == 0


def test_components_and_relabel():
    g = Graph(edges=[(0, 1), (5, 6)])
    g.add_vertex(9)
    assert g.components() == [[0, 1], [5, 6], [9]]
    h = g.relabel({0: 10, 1: 11, 5: 0, 6: 1, 9: 2})
    assert h.adjacent(10, 11) and h.adjacent(0, 1)


def test_rotation_must_match_adjacency():
    g = Graph(edges=[(0, 1), (1, 2)])
    with pytest.raises(InvalidEmbeddingError):
        PlaneGraph(g, {0: [1], 1: [0], 2: [1]})
    with pytest.raises(InvalidEmbeddingError):
        PlaneGraph(g, {0: [1], 1: [0, 2, 2], 2: [1]})


def test_isolated_vertex_face():
    pg = PlaneGraph(Graph(vertices=[4]), {4: []})
    fs = faces(pg)
    assert len(fs) == 1
    assert fs[0].degree == 0
    assert fs[0].vertex_set() == frozenset({4})
    rep = euler_check(pg)
    assert (rep.n, rep.m, rep.f, rep.is_plane) == (1, 0, 1, True)


def test_cycle_faces():
    pg = cycle_plane(5)
    fs = faces(pg)
    assert sorted(f.degree for f in fs) == [5, 5]
    assert euler_check(pg).is_plane


def test_bridge_counts_twice():
    # path on 3 vertices: a single face of degree 4 (each bridge twice)
    g = path_graph(3)
    pg = PlaneGraph(g, {0: [1], 1: [0, 2], 2: [1]})
    fs = faces(pg)
    assert [f.degree for f in fs] == [4]
    assert sum(f.degree for f in fs) == 2 * g.edge_count()


def test_face_degree_sum_is_2m():
    for pg in (cycle_plane(7), cycle_plane(9)):
        assert sum(f.degree for f in faces(pg)) == 2 * pg.graph.edge_count()


def test_nonplanar_rotation_fails_euler():
    # K5 with an arbitrary rotation cannot satisfy Euler's relation
    g = Graph(edges=[(i, j) for i in range(5) for j in range(i + 1, 5)])
    rot = {v: [w for w in range(5) if w != v] for v in range(5)}
    assert not euler_check(PlaneGraph(g, rot)).is_plane


def test_face_multiset_invariant_under_relabeling():
    pg = cycle_plane(6)
    shift = {v: v + 10 for v in pg.graph.vertices}
    h = pg.graph.relabel(shift)
    hrot = {shift[v]: [shift[w] for w in pg.rotation[v]] for v in pg.graph.vertices}
    fs1 = sorted(f.degree for f in faces(pg))
    fs2 = sorted(f.degree for f in faces(PlaneGraph(h, hrot)))
    assert fs1 == fs2


def test_has_cycle_of_length():
    c6 = cycle_graph(6)
    assert has_cycle_of_length(c6, 6)
    assert not any(has_cycle_of_length(c6, L) for L in (3, 4, 5))
    assert not has_cycle_of_length(path_graph(6), 3)
    k4 = Graph(edges=[(i, j) for i in range(4) for j in range(i + 1, 4)])
    assert has_cycle_of_length(k4, 3) and has_cycle_of_length(k4, 4)
    with pytest.raises(ValueError):
        has_cycle_of_length(c6, 2)


def test_girth():
    assert girth(cycle_graph(5)) == 5
    assert girth(petersen()) == 5
    assert girth(path_graph(4)) == math.inf
    assert girth(Graph(vertices=[0])) == math.inf


def test_girth_agrees_with_cycle_scan(corpus):
    for name, g in corpus:
        if len(g) > 10:
            continue
        by_scan = next(
            (L for L in range(3, len(g) + 1) if has_cycle_of_length(g, L)),
            math.inf,
        )
        assert girth(g) == by_scan, name


def test_in_class_C():
    assert in_class_C(cycle_plane(5))
    assert in_class_C(cycle_plane(7))
    assert in_class_C(cycle_plane(9))
    assert not in_class_C(cycle_plane(3))
    assert not in_class_C(cycle_plane(4))
    assert not in_class_C(cycle_plane(6))


def test_class_characterization_small():
    # girth > 6, or girth >= 5 with no 6-cycle, iff no 3-, 4-, 6-cycle
    for n in range(3, 11):
        pg = cycle_plane(n)
        gr = girth(pg.graph)
        expected = gr > 6 or (gr >= 5 and not has_cycle_of_length(pg.graph, 6))
        assert in_class_C(pg) == expected


def test_n3_and_precedes():
    g = Graph(edges=[(0, 1), (0, 2), (0, 3)])
    assert n3(g) == 1
    h = path_graph(3)
    assert n3(h) == 0
    assert precedes(h, g)
    assert not precedes(g, h)


def test_euler_disconnected():
    g = Graph(edges=[(0, 1)])
    g.add_vertex(7)
    pg = PlaneGraph(g, {0: [1], 1: [0], 7: []})
    rep = euler_check(pg)
    assert not rep.connected
    assert rep.is_plane  # n - m + f = 2 holds per component


def test_random_corpus_face_sum(corpus):
    # abstract-only sanity: edge list symmetric, ascending iteration
    for name, g in corpus:
        for u, v in g.edges():
            assert u < v
            assert u in g.neighbors(v)
