"""Terminal gadgets: the path gadget, forcing verifiers, the coloring
reduction, and parallel composition.

The two forcing contracts:

* u3-forcing — every valid (0,k)-coloring of the gadget colors the terminal
  K with exactly one K neighbor, and at least one valid coloring exists.
* pair-forcing — no valid (0,k)-coloring makes every neighbor of both pair
  terminals Zero.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import (
    ENUMERATION_THRESHOLD,
    Color,
    Coloring,
    SolveSpec,
    Unsatisfiable,
    enumerate_colorings,
    solve,
)
from .errors import ResourceLimitError
from .graph import Graph


@dataclass(frozen=True)
class TerminalGadget:
    graph: Graph
    terminals: dict[str, int]
    contract: str  # "u3-forcing" | "pair-forcing"

    def __post_init__(self):
        for role, v in self.terminals.items():
            if v not in self.graph:
                raise ValueError(f"terminal {role}={v} not in gadget graph")

    def terminal(self, role: str) -> int:
        return self.terminals[role]


@dataclass(frozen=True)
class ForcingVerdict:
    colorable: bool
    forcing: bool


def build_path_gadget(h: Graph, v: int) -> TerminalGadget:
    """Replace the 2-vertex v by a path of three fresh 2-vertices between
    its two neighbors; the middle one is the u3 terminal."""
    if v not in h:
        raise ValueError(f"vertex {v} not in graph")
    if h.degree(v) != 2:
        raise ValueError(f"vertex {v} must have degree 2, has {h.degree(v)}")
    u1, u5 = h.neighbors(v)
    g = h.copy()
    g.remove_vertex(v)
    base = max(h.vertices) + 1
    u2, u3, u4 = base, base + 1, base + 2
    for a, b in [(u1, u2), (u2, u3), (u3, u4), (u4, u5)]:
        g.add_edge(a, b)
    return TerminalGadget(
        graph=g,
        terminals={"u1": u1, "u3": u3, "u5": u5},
        contract="u3-forcing",
    )


def verify_u3_forcing(gadget: TerminalGadget, k: int, method: str = "enumerate") -> ForcingVerdict:
    """Check the u3-forcing contract under (0,k).

    ``method="enumerate"`` inspects every coloring (size-limited);
    ``method="solver"`` is the scalable path: u3 precolored Zero must be
    UNSAT, u3 with no K neighbor must be UNSAT, and u3 with any two
    K-precolored neighbors must be UNSAT.
    """
    g = gadget.graph
    u3 = gadget.terminal("u3")
    if method == "enumerate":
        if len(g) > ENUMERATION_THRESHOLD:
            raise ResourceLimitError(
                f"{len(g)} vertices exceeds the enumeration threshold; "
                "use method='solver'"
            )
        cols = enumerate_colorings(g, SolveSpec(0, k))
        if not cols:
            return ForcingVerdict(colorable=False, forcing=False)
        forcing = all(
            c[u3] is Color.K
            and sum(1 for w in g.neighbors(u3) if c[w] is Color.K) == 1
            for c in cols
        )
        return ForcingVerdict(colorable=True, forcing=forcing)
    if method != "solver":
        raise ValueError(f"unknown method {method!r}")
    colorable = not isinstance(solve(g, SolveSpec(0, k)), Unsatisfiable)
    if not colorable:
        return ForcingVerdict(colorable=False, forcing=False)
    nbrs = g.neighbors(u3)
    queries = [Coloring({u3: Color.ZERO})]
    queries.append(
        Coloring({u3: Color.K, **{w: Color.ZERO for w in nbrs}})
    )
    for i in range(len(nbrs)):
        for j in range(i + 1, len(nbrs)):
            queries.append(
                Coloring({u3: Color.K, nbrs[i]: Color.K, nbrs[j]: Color.K})
            )
    forcing = all(
        isinstance(solve(g, SolveSpec(0, k, pre)), Unsatisfiable) for pre in queries
    )
    return ForcingVerdict(colorable=True, forcing=forcing)


def reduce_01_to_0k(g: Graph, gadget: TerminalGadget, k: int) -> Graph:
    """Attach k-1 fresh copies of the gadget to every vertex, joining each
    vertex to the copies' u3 terminals.  With a certified u3-forcing gadget
    and k >= 2 this carries (0,1)-colorability to (0,k)-colorability."""
    if k < 1:
        raise ValueError("k must be >= 1")
    u3 = gadget.terminal("u3")
    gv = gadget.graph.vertices
    gedges = gadget.graph.edges()
    out = g.copy()
    base = (max(g.vertices) + 1) if len(g) else 0
    for v in g.vertices:
        for _ in range(k - 1):
            m = {t: base + i for i, t in enumerate(gv)}
            base += len(gv)
            for t in gv:
                out.add_vertex(m[t])
            for a, b in gedges:
                out.add_edge(m[a], m[b])
            out.add_edge(v, m[u3])
    return out


def verify_forcing_pair(gadget: TerminalGadget, k: int) -> ForcingVerdict:
    """Check the pair contract: UNSAT once every neighbor of x and y is
    precolored Zero."""
    g = gadget.graph
    x, y = gadget.terminal("x"), gadget.terminal("y")
    colorable = not isinstance(solve(g, SolveSpec(0, k)), Unsatisfiable)
    pre = Coloring(
        {w: Color.ZERO for t in (x, y) for w in g.neighbors(t)}
    )
    blocked = isinstance(solve(g, SolveSpec(0, k, pre)), Unsatisfiable)
    return ForcingVerdict(colorable=colorable, forcing=blocked)


def compose_parallel(template: Graph, marked, gadget: TerminalGadget) -> Graph:
    """Replace each marked connection of the template by a fresh gadget copy
    with x and y identified to the connection's endpoints.

    A marked degree-2 vertex whose both edges are marked encodes one
    parallel connection between its two neighbors (the file-format idiom for
    parallel links without multigraph support); it is consumed.  Remaining
    marked edges are direct connections.
    """
    x, y = gadget.terminal("x"), gadget.terminal("y")
    if gadget.graph.adjacent(x, y):
        raise ValueError("pair terminals must be non-adjacent for composition")
    marked = {frozenset(e) for e in marked}
    for e in marked:
        u, v = sorted(e)
        if not template.adjacent(u, v):
            raise ValueError(f"marked edge {u}-{v} not in template")
    consumed_edges = set()
    removed_middles = []
    connections = []
    for s in template.vertices:
        if template.degree(s) != 2:
            continue
        a, b = template.neighbors(s)
        e1, e2 = frozenset((s, a)), frozenset((s, b))
        if a != b and e1 in marked and e2 in marked and not (
            e1 in consumed_edges or e2 in consumed_edges
        ):
            consumed_edges.update((e1, e2))
            removed_middles.append(s)
            connections.append((a, b))
    for e in sorted(marked - consumed_edges, key=sorted):
        connections.append(tuple(sorted(e)))

    out = template.copy()
    for s in removed_middles:
        out.remove_vertex(s)
    for e in marked - consumed_edges:
        u, v = sorted(e)
        out.remove_edge(u, v)
    gv = gadget.graph.vertices
    gedges = gadget.graph.edges()
    base = max(template.vertices) + 1
    for (u, v) in connections:
        m = {}
        for t in gv:
            if t == x:
                m[t] = u
            elif t == y:
                m[t] = v
            else:
                m[t] = base
                base += 1
        for t in gv:
            out.add_vertex(m[t])
        for a, b in gedges:
            out.add_edge(m[a], m[b])
    return out


# ---------------------------------------------------------------------------
# Certified fixture gadgets.  These are small constructions whose contracts
# are re-verified by enumeration in the test suite before use.

def forced_terminal_gadget(k: int) -> TerminalGadget:
    """(k+4)-vertex u3-forcing gadget for (0,k), k >= 2.

    A (k+2)-clique through b plus the triangle a-b-u3 leaves exactly one
    valid coloring: b Zero, everything else K.  If b were K it would be
    saturated inside the clique, and both colors for a then overload it.
    """
    if k < 2:
        raise ValueError("u3-forcing requires k >= 2")
    g = Graph()
    clique = list(range(k + 2))  # vertex k+1 plays the role of b
    for i in clique:
        for j in clique:
            if i < j:
                g.add_edge(i, j)
    b = k + 1
    a, u3 = k + 2, k + 3
    g.add_edge(a, b)
    g.add_edge(a, u3)
    g.add_edge(b, u3)
    return TerminalGadget(graph=g, terminals={"u3": u3}, contract="u3-forcing")


def xor_pair_host(k: int) -> Graph:
    """Two (k+2)-cliques joined by one edge u1-u5, plus a 2-vertex v
    adjacent to u1 and u5.

    In every (0,k)-coloring of the graph minus v, exactly one of u1, u5 is
    K and that one has exactly k K neighbors; this is the premise under
    which ``build_path_gadget`` yields a u3-forcing gadget.  u1 = 0 and
    u5 = k+2; v is the highest vertex id.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    g = Graph()
    for block in (0, k + 2):
        for i in range(block, block + k + 2):
            for j in range(i + 1, block + k + 2):
                g.add_edge(i, j)
    u1, u5 = 0, k + 2
    v = 2 * (k + 2)
    g.add_edge(u1, u5)
    g.add_edge(v, u1)
    g.add_edge(v, u5)
    return g


def path_gadget_fixture(k: int) -> TerminalGadget:
    """u3-forcing gadget obtained by running the path construction on the
    premise host."""
    h = xor_pair_host(k)
    return build_path_gadget(h, max(h.vertices))


def pair_forcing_gadget() -> TerminalGadget:
    """4-vertex pair gadget x-a-b-y: precoloring both interior vertices
    Zero is immediately contradictory, for every k."""
    g = Graph(edges=[(0, 1), (1, 2), (2, 3)])
    return TerminalGadget(graph=g, terminals={"x": 0, "y": 3}, contract="pair-forcing")


def parallel_template(count: int) -> tuple[Graph, list]:
    """Two terminals 0 and 1 joined by ``count`` marked parallel
    connections, each encoded as a marked 2-path through a middle vertex."""
    if count < 1:
        raise ValueError("count must be >= 1")
    g = Graph(vertices=[0, 1])
    marked = []
    for i in range(count):
        s = 2 + i
        g.add_edge(0, s)
        g.add_edge(s, 1)
        marked.append((0, s))
        marked.append((s, 1))
    return g, marked
