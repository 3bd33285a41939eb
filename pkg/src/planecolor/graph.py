"""Simple graphs, plane embeddings (rotation systems), faces and cycle queries.

Vertex ids are arbitrary non-negative integers.  All iteration is in
ascending-id order so that every derived object (face list, reports) is
deterministic for a given input.

The face-successor convention is frozen: the successor of the dart ``(u, v)``
is ``(v, w)`` where ``w`` immediately precedes ``u`` in ``rotation(v)``.
Charge-ledger face indices depend on this convention; do not change it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import InvalidEmbeddingError

UNBOUNDED = math.inf


class Graph:
    """Undirected simple graph over integer vertex ids."""

    __slots__ = ("_adj",)

    def __init__(self, vertices=(), edges=()):
        self._adj: dict[int, set[int]] = {}
        for v in vertices:
            self.add_vertex(v)
        for u, v in edges:
            self.add_edge(u, v)

    def add_vertex(self, v: int) -> None:
        if v < 0:
            raise ValueError(f"vertex id must be non-negative, got {v}")
        self._adj.setdefault(v, set())

    def add_edge(self, u: int, v: int) -> None:
        if u == v:
            raise ValueError(f"self-loop at {u} not allowed")
        self.add_vertex(u)
        self.add_vertex(v)
        self._adj[u].add(v)
        self._adj[v].add(u)

    def remove_edge(self, u: int, v: int) -> None:
        if v not in self._adj.get(u, ()):
            raise ValueError(f"edge {u}-{v} not in graph")
        self._adj[u].discard(v)
        self._adj[v].discard(u)

    def remove_vertex(self, v: int) -> None:
        for w in self._adj.pop(v):
            self._adj[w].discard(v)

    # -- queries ----------------------------------------------------------

    @property
    def vertices(self) -> list[int]:
        return sorted(self._adj)

    def __contains__(self, v: int) -> bool:
        return v in self._adj

    def __len__(self) -> int:
        return len(self._adj)

    def neighbors(self, v: int) -> list[int]:
        return sorted(self._adj[v])

    def adjacent(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def edges(self) -> list[tuple[int, int]]:
        return sorted(
            (u, v) for u in self._adj for v in self._adj[u] if u < v
        )

    def edge_count(self) -> int:
        return sum(len(s) for s in self._adj.values()) // 2

    def copy(self) -> "Graph":
        g = Graph()
        g._adj = {v: set(s) for v, s in self._adj.items()}
        return g

    def subgraph(self, keep) -> "Graph":
        keep = set(keep)
        g = Graph(vertices=keep)
        for u in keep:
            for v in self._adj[u]:
                if v in keep and u < v:
                    g.add_edge(u, v)
        return g

    def relabel(self, mapping) -> "Graph":
        g = Graph(vertices=(mapping[v] for v in self._adj))
        for u, v in self.edges():
            g.add_edge(mapping[u], mapping[v])
        return g

    def components(self) -> list[list[int]]:
        """Connected components, each sorted, ordered by smallest member."""
        seen = set()
        comps = []
        for s in self.vertices:
            if s in seen:
                continue
            stack = [s]
            seen.add(s)
            comp = []
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in self._adj[v]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def __eq__(self, other):
        return isinstance(other, Graph) and self._adj == other._adj

    def __repr__(self):
        return f"Graph(n={len(self)}, m={self.edge_count()})"


class PlaneGraph:
    """A graph together with a rotation system (clockwise neighbor order).

    The rotation of every vertex must be a permutation of its neighbor set;
    this is validated at construction time.
    """

    __slots__ = ("graph", "rotation")

    def __init__(self, graph: Graph, rotation: dict[int, list[int]]):
        for v in graph.vertices:
            rot = rotation.get(v)
            if rot is None:
                raise InvalidEmbeddingError(f"vertex {v} has no rotation")
            if sorted(rot) != graph.neighbors(v):
                raise InvalidEmbeddingError(
                    f"rotation of {v} is not a permutation of its neighbors"
                )
        self.graph = graph
        self.rotation = {v: tuple(rotation[v]) for v in graph.vertices}

    def copy(self) -> "PlaneGraph":
        return PlaneGraph(self.graph.copy(), {v: list(r) for v, r in self.rotation.items()})

    def __repr__(self):
        return f"PlaneGraph(n={len(self.graph)}, m={self.graph.edge_count()})"


@dataclass(frozen=True)
class Face:
    """One face orbit.  ``boundary`` is the closed dart walk; its length is
    the face degree (a bridge contributes both darts, hence counts twice).
    An isolated vertex yields a degree-0 face with an empty boundary."""

    index: int
    boundary: tuple[tuple[int, int], ...]
    anchor: int  # only meaningful for degree-0 faces

    @property
    def degree(self) -> int:
        return len(self.boundary)

    def walk(self) -> tuple[int, ...]:
        """Vertex sequence of the boundary walk (one entry per dart)."""
        return tuple(u for u, _ in self.boundary)

    def vertex_set(self) -> frozenset[int]:
        if not self.boundary:
            return frozenset((self.anchor,))
        return frozenset(self.walk())


def _dart_successor(pg: PlaneGraph, u: int, v: int) -> tuple[int, int]:
    rot = pg.rotation[v]
    i = rot.index(u)
    return (v, rot[i - 1])


def faces(pg: PlaneGraph) -> list[Face]:
    """All dart orbits under the frozen successor rule, plus one degree-0
    face per isolated vertex.  Order: isolated-vertex faces by vertex id
    first, then dart faces by their smallest dart."""
    out: list[Face] = []
    idx = 0
    g = pg.graph
    for v in g.vertices:
        if g.degree(v) == 0:
            out.append(Face(index=idx, boundary=(), anchor=v))
            idx += 1
    seen: set[tuple[int, int]] = set()
    darts = sorted((u, v) for u in g.vertices for v in g.neighbors(u))
    for start in darts:
        if start in seen:
            continue
        orbit = []
        d = start
        while True:
            orbit.append(d)
            seen.add(d)
            d = _dart_successor(pg, *d)
            if d == start:
                break
        out.append(Face(index=idx, boundary=tuple(orbit), anchor=start[0]))
        idx += 1
    return out


@dataclass(frozen=True)
class EulerReport:
    connected: bool
    n: int
    m: int
    f: int
    is_plane: bool


def euler_check(pg: PlaneGraph) -> EulerReport:
    """Check n - m + f = 2 per connected component (genus-0 test)."""
    g = pg.graph
    comps = g.components()
    fs = faces(pg)
    comp_of = {}
    for i, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = i
    fcount = [0] * len(comps)
    for face in fs:
        fcount[comp_of[face.anchor]] += 1
    plane = True
    for i, comp in enumerate(comps):
        n_c = len(comp)
        m_c = g.subgraph(comp).edge_count()
        if n_c - m_c + fcount[i] != 2:
            plane = False
    return EulerReport(
        connected=len(comps) <= 1,
        n=len(g),
        m=g.edge_count(),
        f=len(fs),
        is_plane=plane,
    )


def has_cycle_of_length(g: Graph, length: int) -> bool:
    """True iff g contains a (not necessarily induced) cycle on exactly
    ``length`` vertices.  Bounded DFS; inputs are desk-scale."""
    if length < 3:
        raise ValueError(f"cycle length must be >= 3, got {length}")
    adj = {v: g.neighbors(v) for v in g.vertices}

    def extend(start, path, on_path):
        last = path[-1]
        if len(path) == length:
            return start in adj[last]
        for w in adj[last]:
            # only allow vertices above the anchor so each cycle is tried
            # from its smallest vertex exactly once
            if w <= start or w in on_path:
                continue
            on_path.add(w)
            path.append(w)
            if extend(start, path, on_path):
                return True
            path.pop()
            on_path.remove(w)
        return False

    for s in g.vertices:
        if extend(s, [s], {s}):
            return True
    return False


def girth(g: Graph):
    """Length of a shortest cycle, or ``UNBOUNDED`` (math.inf) for forests.

    Computed by deleting each edge in turn and measuring the shortest
    remaining path between its endpoints.
    """
    best = UNBOUNDED
    from collections import deque

    for u, v in g.edges():
        dist = {u: 0}
        queue = deque([u])
        while queue:
            x = queue.popleft()
            if x == v:
                break
            if dist[x] + 1 >= best - 1:
                continue
            for w in g.neighbors(x):
                if (x, w) in ((u, v), (v, u)):
                    continue
                if w not in dist:
                    dist[w] = dist[x] + 1
                    queue.append(w)
        if v in dist:
            best = min(best, dist[v] + 1)
    return best


def in_class_C(pg: PlaneGraph) -> bool:
    """Planar (per the supplied embedding) with no 3-, 4-, or 6-cycle."""
    if not euler_check(pg).is_plane:
        return False
    g = pg.graph
    return not any(has_cycle_of_length(g, L) for L in (3, 4, 6))


def n3(g: Graph) -> int:
    """Number of vertices of degree at least 3."""
    return sum(1 for v in g.vertices if g.degree(v) >= 3)


def precedes(g1: Graph, g2: Graph) -> bool:
    """Strict partial order used by the minimal-counterexample argument."""
    a, b = n3(g1), n3(g2)
    return (len(g1) < len(g2) and a <= b) or a < b
