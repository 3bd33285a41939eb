"""Exact maximum average degree.

mad(G) = max over non-empty subgraphs H of 2|E(H)|/|V(H)|, an exact rational.
The main routine binary-searches the density with Goldberg's flow network
(edge nodes -> endpoint nodes -> sink) and snaps the bracketing interval to
the unique fraction with denominator at most |V|.  ``mad_by_enumeration``
is the independent subset-enumeration oracle used by the tests.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction

from .errors import ResourceLimitError
from .graph import Graph


class _FlowNet:
    """Dinic max-flow over Fraction capacities (desk-scale networks)."""

    def __init__(self, size):
        self.size = size
        self.head = [[] for _ in range(size)]
        self.to = []
        self.cap = []

    def add(self, u, v, c):
        self.head[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(c)
        self.head[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(Fraction(0))

    def max_flow(self, s, t):
        flow = Fraction(0)
        while True:
            level = [-1] * self.size
            level[s] = 0
            q = deque([s])
            while q:
                u = q.popleft()
                for e in self.head[u]:
                    v = self.to[e]
                    if self.cap[e] > 0 and level[v] < 0:
                        level[v] = level[u] + 1
                        q.append(v)
            if level[t] < 0:
                return flow
            it = [0] * self.size

            def dfs(u, pushed):
                if u == t:
                    return pushed
                while it[u] < len(self.head[u]):
                    e = self.head[u][it[u]]
                    v = self.to[e]
                    if self.cap[e] > 0 and level[v] == level[u] + 1:
                        got = dfs(v, min(pushed, self.cap[e]))
                        if got > 0:
                            self.cap[e] -= got
                            self.cap[e ^ 1] += got
                            return got
                    it[u] += 1
                return Fraction(0)

            while True:
                pushed = dfs(s, Fraction(10**9))
                if pushed == 0:
                    break
                flow += pushed


def _denser_than(g: Graph, edges, density: Fraction) -> bool:
    """Is there a non-empty vertex set S with |E(S)| / |S| > density?"""
    verts = g.vertices
    vid = {v: i for i, v in enumerate(verts)}
    m = len(edges)
    n = len(verts)
    # node layout: 0 = source, 1 = sink, 2..2+m-1 edges, then vertices
    net = _FlowNet(2 + m + n)
    big = Fraction(m + 1)
    for i, (u, v) in enumerate(edges):
        net.add(0, 2 + i, Fraction(1))
        net.add(2 + i, 2 + m + vid[u], big)
        net.add(2 + i, 2 + m + vid[v], big)
    for i in range(n):
        net.add(2 + m + i, 1, density)
    # max_S |E(S)| - density * |S| = m - mincut; positive iff flow < m
    return net.max_flow(0, 1) < m


def mad(g: Graph) -> Fraction:
    """Maximum average degree as an exact rational."""
    if len(g) == 0:
        raise ValueError("mad of an empty graph is undefined")
    edges = g.edges()
    if not edges:
        return Fraction(0)
    n = len(g)
    lo = Fraction(0)          # density* > lo (a single edge has density 1/2)
    hi = Fraction(n)          # density* <= (n-1)/2 < hi
    gap = Fraction(1, 2 * n * n)
    while hi - lo >= gap:
        mid = (lo + hi) / 2
        if _denser_than(g, edges, mid):
            lo = mid
        else:
            hi = mid
    density = ((lo + hi) / 2).limit_denominator(n)
    return 2 * density


def mad_by_enumeration(g: Graph, max_vertices: int = 20) -> Fraction:
    """Brute-force oracle: scan every non-empty vertex subset."""
    verts = g.vertices
    if not verts:
        raise ValueError("mad of an empty graph is undefined")
    if len(verts) > max_vertices:
        raise ResourceLimitError(f"enumeration limited to {max_vertices} vertices")
    edges = g.edges()
    vid = {v: i for i, v in enumerate(verts)}
    best = Fraction(0)
    for mask in range(1, 1 << len(verts)):
        cnt = sum(
            1 for u, v in edges if (mask >> vid[u]) & 1 and (mask >> vid[v]) & 1
        )
        size = bin(mask).count("1")
        best = max(best, Fraction(2 * cnt, size))
    return best
