"""Line-oriented text graph format.

One directive per line, ``#`` starts a comment:

    graph <name>
    vertex <id>
    vertex <id> rot <n1> <n2> ... <nk>   # clockwise rotation
    edge <u> <v> [gadget]                # "gadget" marks a connection edge
    precolor <id> 0|K
    terminal <role> <id>                 # role in {x, y, u1, u3, u5}

If every vertex carries ``rot`` the document holds a PlaneGraph, otherwise an
abstract Graph.  Duplicate edges and rotations inconsistent with the edge
list are parse errors.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .coloring import Color, Coloring
from .errors import ParseError
from .graph import Graph, PlaneGraph

TERMINAL_ROLES = ("x", "y", "u1", "u3", "u5")


@dataclass
class GraphDocument:
    name: str = ""
    graph: Graph | PlaneGraph = field(default_factory=Graph)
    precoloring: Coloring = field(default_factory=Coloring)
    terminals: dict[str, int] = field(default_factory=dict)
    marked_edges: list[tuple[int, int]] = field(default_factory=list)

    @property
    def is_plane(self) -> bool:
        return isinstance(self.graph, PlaneGraph)

    def abstract_graph(self) -> Graph:
        return self.graph.graph if self.is_plane else self.graph


def _int(tok: str, lineno: int) -> int:
    try:
        v = int(tok)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok!r}", lineno) from None
    if v < 0:
        raise ParseError(f"vertex id must be non-negative, got {v}", lineno)
    return v


def parse_document(text: str) -> GraphDocument:
    name = ""
    rotations: dict[int, list[int] | None] = {}
    edges: set[frozenset[int]] = set()
    edge_order: list[tuple[int, int]] = []
    marked: list[tuple[int, int]] = []
    precolor: dict[int, Color] = {}
    terminals: dict[str, int] = {}

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        kw, args = toks[0], toks[1:]
        if kw == "graph":
            if len(args) != 1:
                raise ParseError("graph takes exactly one name", lineno)
            name = args[0]
        elif kw == "vertex":
            if not args:
                raise ParseError("vertex needs an id", lineno)
            v = _int(args[0], lineno)
            if v in rotations:
                raise ParseError(f"duplicate vertex {v}", lineno)
            if len(args) == 1:
                rotations[v] = None
            else:
                if args[1] != "rot":
                    raise ParseError(
                        f"expected 'rot' after vertex id, got {args[1]!r}", lineno
                    )
                rotations[v] = [_int(t, lineno) for t in args[2:]]
        elif kw == "edge":
            if len(args) == 3 and args[2] == "gadget":
                is_marked = True
            elif len(args) == 2:
                is_marked = False
            else:
                raise ParseError("edge takes two ids and an optional 'gadget'", lineno)
            u, v = _int(args[0], lineno), _int(args[1], lineno)
            if u == v:
                raise ParseError(f"self-loop at {u}", lineno)
            key = frozenset((u, v))
            if key in edges:
                raise ParseError(f"duplicate edge {u} {v}", lineno)
            edges.add(key)
            edge_order.append((u, v))
            if is_marked:
                marked.append((u, v))
        elif kw == "precolor":
            if len(args) != 2 or args[1] not in ("0", "K"):
                raise ParseError("precolor takes an id and 0 or K", lineno)
            v = _int(args[0], lineno)
            if v in precolor:
                raise ParseError(f"duplicate precolor for {v}", lineno)
            precolor[v] = Color.ZERO if args[1] == "0" else Color.K
        elif kw == "terminal":
            if len(args) != 2 or args[0] not in TERMINAL_ROLES:
                raise ParseError(
                    f"terminal takes a role in {'/'.join(TERMINAL_ROLES)} and an id",
                    lineno,
                )
            if args[0] in terminals:
                raise ParseError(f"duplicate terminal role {args[0]}", lineno)
            terminals[args[0]] = _int(args[1], lineno)
        else:
            raise ParseError(f"unknown directive {kw!r}", lineno)

    g = Graph()
    for v in rotations:
        g.add_vertex(v)
    for u, v in edge_order:
        g.add_edge(u, v)
    for v in precolor:
        if v not in g:
            raise ParseError(f"precolored vertex {v} never declared")
    for role, v in terminals.items():
        if v not in g:
            raise ParseError(f"terminal {role} vertex {v} never declared")

    declared = set(rotations)
    if declared and all(r is not None for r in rotations.values()):
        for v, rot in rotations.items():
            if sorted(rot) != g.neighbors(v):
                raise ParseError(
                    f"rotation of {v} is {rot}, not a permutation of its "
                    f"neighbors {g.neighbors(v)}"
                )
        out: Graph | PlaneGraph = PlaneGraph(g, {v: list(r) for v, r in rotations.items()})
    else:
        out = g
    return GraphDocument(
        name=name,
        graph=out,
        precoloring=Coloring(precolor),
        terminals=terminals,
        marked_edges=marked,
    )


def format_document(doc: GraphDocument) -> str:
    g = doc.abstract_graph()
    rot = doc.graph.rotation if doc.is_plane else None
    lines = []
    if doc.name:
        lines.append(f"graph {doc.name}")
    for v in g.vertices:
        if rot is not None:
            lines.append(f"vertex {v} rot {' '.join(map(str, rot[v]))}".rstrip())
        else:
            lines.append(f"vertex {v}")
    marked = {frozenset(e) for e in doc.marked_edges}
    for u, v in g.edges():
        suffix = " gadget" if frozenset((u, v)) in marked else ""
        lines.append(f"edge {u} {v}{suffix}")
    for v, c in doc.precoloring.items():
        lines.append(f"precolor {v} {c}")
    for role in TERMINAL_ROLES:
        if role in doc.terminals:
            lines.append(f"terminal {role} {doc.terminals[role]}")
    return "\n".join(lines) + "\n"


def load_document(path) -> GraphDocument:
    with open(path, encoding="utf-8") as fh:
        return parse_document(fh.read())


def save_document(doc: GraphDocument, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_document(doc))
