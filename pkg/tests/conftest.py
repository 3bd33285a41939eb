"""Shared fixture graphs.

The small-graph corpus is the oracle battleground: everything on it must be
checkable by brute force / enumeration.  The plane fixtures realize the two
special structure patterns with pendant-boosted big vertices.
"""

import random

import pytest

from planecolor.graph import Graph, PlaneGraph


def cycle_graph(n: int) -> Graph:
    return Graph(edges=[(i, (i + 1) % n) for i in range(n)])


def cycle_plane(n: int) -> PlaneGraph:
    g = cycle_graph(n)
    rot = {i: [(i - 1) % n, (i + 1) % n] for i in range(n)}
    return PlaneGraph(g, rot)


def path_graph(n: int) -> Graph:
    g = Graph(vertices=range(n))
    for i in range(n - 1):
        g.add_edge(i, i + 1)
    return g


def star_graph(leaves: int) -> Graph:
    return Graph(edges=[(0, i) for i in range(1, leaves + 1)])


def complete_graph(n: int) -> Graph:
    return Graph(edges=[(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(edges=[(i, a + j) for i in range(a) for j in range(b)])


def petersen() -> Graph:
    g = cycle_graph(5)
    for i in range(5):
        g.add_edge(5 + i, 5 + (i + 2) % 5)
        g.add_edge(i, 5 + i)
    return g


def random_graph(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    g = Graph(vertices=range(n))
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                g.add_edge(i, j)
    return g


def small_corpus() -> list[tuple[str, Graph]]:
    """Named graphs, all at most 12 vertices."""
    out = [
        ("K1", Graph(vertices=[0])),
        ("K2", complete_graph(2)),
        ("K4", complete_graph(4)),
        ("K5", complete_graph(5)),
        ("C3", cycle_graph(3)),
        ("C5", cycle_graph(5)),
        ("C6", cycle_graph(6)),
        ("C7", cycle_graph(7)),
        ("C9", cycle_graph(9)),
        ("P5", path_graph(5)),
        ("P10", path_graph(10)),
        ("star7", star_graph(7)),
        ("K33", complete_bipartite(3, 3)),
        ("K23", complete_bipartite(2, 3)),
        ("petersen", petersen()),
        ("empty3", Graph(vertices=[0, 5, 9])),
    ]
    for seed in range(6):
        out.append((f"rand{seed}", random_graph(10 + seed % 3, 0.3, seed)))
    return out


def boosted_special_face(pendants=(6, 6)) -> PlaneGraph:
    """5-face u=1, bigs v0=0, v1=2, with pendant leaves raising the big
    degrees; pendants all land in the outer face so the 5-face survives."""
    g = Graph(edges=[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    rot = {0: [1, 4], 1: [0, 2], 2: [1], 3: [2, 4], 4: [3, 0]}
    nxt = 5
    for _ in range(pendants[0]):
        g.add_edge(0, nxt)
        rot[0].append(nxt)
        rot[nxt] = [0]
        nxt += 1
    for _ in range(pendants[1]):
        g.add_edge(2, nxt)
        rot[2].append(nxt)
        rot[nxt] = [2]
        nxt += 1
    rot[2].append(3)
    return PlaneGraph(g, rot)


def boosted_special_configuration(pendants=(6, 5, 5)) -> PlaneGraph:
    """Three 5-faces around the 3-vertex u=0 with bigs 1,2,3; pendant counts
    per big vertex are appended in the outer face."""
    edges = [(0, 1), (0, 2), (0, 3), (1, 4), (4, 5), (5, 2),
             (2, 6), (6, 7), (7, 3), (3, 8), (8, 9), (9, 1)]
    g = Graph(edges=edges)
    rot = {0: [1, 2, 3], 1: [4, 0, 9], 2: [6, 0, 5], 3: [8, 0, 7],
           4: [1, 5], 5: [4, 2], 6: [2, 7], 7: [6, 3], 8: [3, 9], 9: [8, 1]}
    nxt = 10
    for v, count in zip((1, 2, 3), pendants):
        for _ in range(count):
            g.add_edge(v, nxt)
            rot[v].append(nxt)
            rot[nxt] = [v]
            nxt += 1
    return PlaneGraph(g, rot)


@pytest.fixture(scope="session")
def corpus():
    return small_corpus()


@pytest.fixture(scope="session")
def special_face_fixture():
    return boosted_special_face()


@pytest.fixture(scope="session")
def special_config_fixture():
    return boosted_special_configuration()
