"""Deterministic generator for plane test graphs.

Strategy: grow a random connected simple plane base graph by two moves that
both preserve genus 0 (attach a leaf; add a chord between two vertices on a
common face), then subdivide every edge twice.  After the double subdivision
every cycle length is a multiple of 3 and at least 9, so the output has no
3-, 4-, or 6-cycle and lies in the target class.
"""

from __future__ import annotations

import random

from .graph import Graph, PlaneGraph, faces


def subdivide_twice(pg: PlaneGraph) -> PlaneGraph:
    """Replace every edge uv by a path u-a-b-v, preserving the rotation."""
    g = pg.graph
    out = Graph(vertices=g.vertices)
    rot = {v: list(pg.rotation[v]) for v in g.vertices}
    nxt = (max(g.vertices) + 1) if len(g) else 0
    for u, v in g.edges():
        a, b = nxt, nxt + 1
        nxt += 2
        out.add_edge(u, a)
        out.add_edge(a, b)
        out.add_edge(b, v)
        rot[a] = [u, b]
        rot[b] = [a, v]
        rot[u] = [a if w == v else w for w in rot[u]]
        rot[v] = [b if w == u else w for w in rot[v]]
    return PlaneGraph(out, rot)


def _add_leaf(g: Graph, rot, rng, fresh):
    anchor = rng.choice(sorted(rot))
    g.add_vertex(fresh)
    g.add_edge(anchor, fresh)
    pos = rng.randrange(len(rot[anchor]) + 1)
    rot[anchor].insert(pos, fresh)
    rot[fresh] = [anchor]


def _try_face_chord(g: Graph, rot, rng) -> bool:
    """Add an edge between two non-adjacent vertices on one face; returns
    False when no current face admits one."""
    pg = PlaneGraph(g.copy(), {v: list(r) for v, r in rot.items()})
    fs = [f for f in faces(pg) if f.degree >= 4]
    rng.shuffle(fs)
    for face in fs:
        darts = list(face.boundary)
        pairs = [
            (i, j)
            for i in range(len(darts))
            for j in range(len(darts))
            if i != j
            and darts[i][1] != darts[j][1]
            and not g.adjacent(darts[i][1], darts[j][1])
        ]
        if not pairs:
            continue
        i, j = rng.choice(pairs)
        (a, u) = darts[i]
        (b, v) = darts[j]
        # Insert so the face walk is cut at both darts: the new dart (u, v)
        # becomes the successor of (a, u), and (v, u) that of (b, v).
        rot[u].insert(rot[u].index(a), v)
        rot[v].insert(rot[v].index(b), u)
        g.add_edge(u, v)
        return True
    return False


def generate_class_C(seed: int, target_size: int) -> PlaneGraph:
    """Deterministic connected plane graph with no 3-, 4- or 6-cycle and at
    least ``target_size`` vertices (within one growth step)."""
    if target_size < 1:
        raise ValueError("target_size must be >= 1")
    rng = random.Random(seed)
    if target_size == 1:
        return PlaneGraph(Graph(vertices=[0]), {0: []})
    g = Graph(edges=[(0, 1)])
    rot = {0: [1], 1: [0]}

    def output_size():
        return len(g) + 2 * g.edge_count()

    while output_size() < target_size:
        if rng.random() < 0.6 or not _try_face_chord(g, rot, rng):
            _add_leaf(g, rot, rng, max(g.vertices) + 1)
    return subdivide_twice(PlaneGraph(g, rot))
