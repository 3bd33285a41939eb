"""Command-line front end.

Every subcommand reads the text graph format and writes a line-oriented,
diff-stable report to standard output.  Exit status: 0 success/SAT/true,
1 UNSAT/false, 2 usage or input error, 3 resource limit.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import gadgets as gadgets_mod
from .coloring import (
    SolveSpec,
    Unsatisfiable,
    enumerate_colorings,
    solve,
    verify_coloring,
)
from .configurations import build_hypergraph, choose_roots_and_sponsor, detect_reducible
from .discharging import RuleSet, apply_rules, audit
from .errors import (
    AuditError,
    ParseError,
    PlanecolorError,
    ResourceLimitError,
    SponsorshipUndefinedError,
)
from .fileformat import GraphDocument, format_document, load_document
from .gadgets import TerminalGadget
from .generate import generate_class_C
from .graph import PlaneGraph, in_class_C
from .mad import mad

EXIT_TRUE = 0
EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def _frac(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def _load_plane(path) -> PlaneGraph:
    doc = load_document(path)
    if not doc.is_plane:
        raise ParseError(f"{path}: every vertex needs a rot clause for this command")
    return doc.graph


def _emit_graph(doc: GraphDocument, out_path):
    text = format_document(doc)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_gadget(path) -> TerminalGadget:
    doc = load_document(path)
    roles = set(doc.terminals)
    if "u3" in roles:
        contract = "u3-forcing"
    elif {"x", "y"} <= roles:
        contract = "pair-forcing"
    else:
        raise ParseError(f"{path}: gadget needs a u3 terminal or an x,y pair")
    return TerminalGadget(
        graph=doc.abstract_graph(), terminals=dict(doc.terminals), contract=contract
    )


# -- subcommands -----------------------------------------------------------

def cmd_class_check(args) -> int:
    pg = _load_plane(args.file)
    ok = in_class_C(pg)
    print(f"class-member {'true' if ok else 'false'}")
    return EXIT_TRUE if ok else EXIT_FALSE


def cmd_solve(args) -> int:
    doc = load_document(args.file)
    spec = SolveSpec(args.d1, args.d2, doc.precoloring)
    result = solve(doc.abstract_graph(), spec, timeout=args.timeout)
    if isinstance(result, Unsatisfiable):
        print("status UNSAT")
        return EXIT_FALSE
    print("status SAT")
    for v, c in result.items():
        print(f"color {v} {c}")
    return EXIT_TRUE


def cmd_verify(args) -> int:
    doc = load_document(args.file)
    g = doc.abstract_graph()
    spec = SolveSpec(args.d1, args.d2)
    report = verify_coloring(g, doc.precoloring, spec)
    print(f"valid {'true' if report.valid else 'false'}")
    for item in report.violations:
        print(f"violation {item[0]} {item[1]}")
    return EXIT_TRUE if report.valid else EXIT_FALSE


def cmd_enumerate(args) -> int:
    doc = load_document(args.file)
    g = doc.abstract_graph()
    spec = SolveSpec(args.d1, args.d2, doc.precoloring)
    cols = enumerate_colorings(g, spec, limit=args.limit)
    verts = g.vertices
    for c in cols:
        print("coloring " + "".join(str(c[v]) for v in verts))
    print(f"count {len(cols)}")
    return EXIT_TRUE if cols else EXIT_FALSE


def cmd_detect(args) -> int:
    pg = _load_plane(args.file)
    for cfg in detect_reducible(pg):
        ids = ",".join(str(v) for v in sorted(cfg.witness))
        print(f"CONFIG {cfg.kind.value} witness={ids}")
    return EXIT_TRUE


def cmd_hypergraph(args) -> int:
    pg = _load_plane(args.file)
    h = build_hypergraph(pg)
    for v in h.vertices:
        print(f"vertex {v} dhat {h.dhat(v)}")
    for i, e in enumerate(h.hyperedges):
        print(f"hyperedge {i} {','.join(map(str, sorted(e)))}")
    try:
        oriented = choose_roots_and_sponsor(h)
    except SponsorshipUndefinedError as exc:
        ids = ",".join(str(v) for v in sorted(exc.witness.witness))
        print(f"CONFIG ComponentSlack witness={ids}")
        return EXIT_FALSE
    for r in oriented.roots:
        print(f"root {r}")
    for i, s in enumerate(oriented.sponsor):
        print(f"sponsor {i} {s}")
    return EXIT_TRUE


def cmd_discharge(args) -> int:
    pg = _load_plane(args.file)
    rs = RuleSet("MAIN06") if args.rules == "main06" else RuleSet("MINDEG", args.k)
    try:
        ledger = apply_rules(pg, rs)
    except SponsorshipUndefinedError as exc:
        ids = ",".join(str(v) for v in sorted(exc.witness.witness))
        print(f"CONFIG ComponentSlack witness={ids}")
        return EXIT_FALSE
    for line in ledger.dump_lines():
        print(line)
    return EXIT_TRUE


def cmd_audit(args) -> int:
    pg = _load_plane(args.file)
    report = audit(pg)
    print(f"total {_frac(report.total)}")
    for e, q in report.negative_elements:
        print(f"negative {e[0]}{e[1]} {_frac(q)}")
    for cfg in report.configs:
        ids = ",".join(str(v) for v in sorted(cfg.witness))
        print(f"CONFIG {cfg.kind.value} witness={ids}")
    print(f"sponsorship-defined {'true' if report.sponsorship_defined else 'false'}")
    return EXIT_TRUE


def cmd_mad(args) -> int:
    doc = load_document(args.file)
    print(f"mad {_frac(mad(doc.abstract_graph()))}")
    return EXIT_TRUE


def cmd_gen(args) -> int:
    pg = generate_class_C(args.seed, args.size)
    _emit_graph(GraphDocument(name=f"gen-{args.seed}", graph=pg), args.output)
    return EXIT_TRUE


def cmd_gadget_build(args) -> int:
    doc = load_document(args.file)
    gadget = gadgets_mod.build_path_gadget(doc.abstract_graph(), args.at)
    _emit_graph(
        GraphDocument(name="path-gadget", graph=gadget.graph, terminals=dict(gadget.terminals)),
        args.output,
    )
    return EXIT_TRUE


def cmd_gadget_verify(args) -> int:
    gadget = _load_gadget(args.file)
    if gadget.contract == "u3-forcing":
        verdict = gadgets_mod.verify_u3_forcing(gadget, args.k, method=args.method)
    else:
        verdict = gadgets_mod.verify_forcing_pair(gadget, args.k)
    print(f"colorable {'true' if verdict.colorable else 'false'}")
    print(f"forcing {'true' if verdict.forcing else 'false'}")
    return EXIT_TRUE if verdict.forcing else EXIT_FALSE


def cmd_reduce(args) -> int:
    doc = load_document(args.file)
    gadget = _load_gadget(args.gadget)
    if gadget.contract != "u3-forcing":
        raise ParseError(f"{args.gadget}: reduction needs a u3 gadget")
    out = gadgets_mod.reduce_01_to_0k(doc.abstract_graph(), gadget, args.k)
    _emit_graph(GraphDocument(name="reduced", graph=out), args.output)
    return EXIT_TRUE


def cmd_compose(args) -> int:
    doc = load_document(args.file)
    gadget = _load_gadget(args.gadget)
    if gadget.contract != "pair-forcing":
        raise ParseError(f"{args.gadget}: composition needs an x,y pair gadget")
    out = gadgets_mod.compose_parallel(doc.abstract_graph(), doc.marked_edges, gadget)
    _emit_graph(GraphDocument(name="composed", graph=out), args.output)
    return EXIT_TRUE


# -- argument plumbing -----------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="planecolor",
        description="Exact toolkit for improper two-class colorings of plane graphs.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, **kw):
        sp = sub.add_parser(name, **kw)
        sp.set_defaults(fn=fn)
        return sp

    sp = add("class-check", cmd_class_check, help="membership in the 3-,4-,6-cycle-free plane class")
    sp.add_argument("file")

    for name, fn in (("solve", cmd_solve), ("verify", cmd_verify), ("enumerate", cmd_enumerate)):
        sp = add(name, fn)
        sp.add_argument("file")
        sp.add_argument("--d1", type=int, required=True)
        sp.add_argument("--d2", type=int, required=True)
        if name == "solve":
            sp.add_argument("--timeout", type=float, default=60.0)
        if name == "enumerate":
            sp.add_argument("--limit", type=int, default=None)

    for name, fn in (("detect", cmd_detect), ("hypergraph", cmd_hypergraph),
                     ("audit", cmd_audit), ("mad", cmd_mad)):
        sp = add(name, fn)
        sp.add_argument("file")

    sp = add("discharge", cmd_discharge)
    sp.add_argument("file")
    sp.add_argument("--rules", choices=("main06", "mindeg"), required=True)
    sp.add_argument("--k", type=int, default=3)

    sp = add("gen", cmd_gen)
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--size", type=int, required=True)
    sp.add_argument("-o", "--output", default=None)

    sp = add("gadget-build", cmd_gadget_build)
    sp.add_argument("file")
    sp.add_argument("--at", type=int, required=True, help="2-vertex to replace by the path")
    sp.add_argument("-o", "--output", default=None)

    sp = add("gadget-verify", cmd_gadget_verify)
    sp.add_argument("file")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--method", choices=("enumerate", "solver"), default="enumerate")

    sp = add("reduce", cmd_reduce)
    sp.add_argument("file")
    sp.add_argument("--gadget", required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("-o", "--output", default=None)

    sp = add("compose", cmd_compose)
    sp.add_argument("file")
    sp.add_argument("--gadget", required=True)
    sp.add_argument("-o", "--output", default=None)

    return p


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (ParseError, AuditError, PlanecolorError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
