"""Exact-rational charge accounting.

Two rulesets:

* MAIN06 — initial charge d-4 on every vertex and face, then the five
  redistribution steps (big vertices pay small neighbors, sponsored
  structures and big-big face corners; mid vertices pay 2-neighbors and
  certain 5-faces; faces pay eligible corners and their 2-vertices).
* MINDEG(k) — initial charge d on every vertex, every 5+-vertex pays 1/3
  to each 3-neighbor; faces carry no charge.

All amounts are ``fractions.Fraction``; floats never enter the ledger.
Transfer log order is frozen: step, then source, then target (vertices
before faces), so ledger dumps are byte-stable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .configurations import (
    BIG,
    StructureKind,
    build_hypergraph,
    choose_roots_and_sponsor,
    detect_reducible,
)
from .errors import AuditError, SponsorshipUndefinedError
from .graph import PlaneGraph, faces, in_class_C

# element keys: ("v", vertex id) or ("f", face index)
HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)
THIRD = Fraction(1, 3)


@dataclass(frozen=True)
class Transfer:
    rule: str
    source: tuple
    target: tuple
    amount: Fraction


@dataclass(frozen=True)
class ChargeLedger:
    initial: dict
    final: dict
    transfers: tuple[Transfer, ...]

    def total_initial(self) -> Fraction:
        return sum(self.initial.values(), Fraction(0))

    def total_final(self) -> Fraction:
        return sum(self.final.values(), Fraction(0))

    def negative_elements(self):
        return [(e, q) for e, q in sorted(self.final.items()) if q < 0]

    def dump_lines(self):
        def frac(q):
            return f"{q.numerator}/{q.denominator}"

        def elt(e):
            return f"{e[0]}{e[1]}"

        lines = []
        for e in sorted(self.initial):
            lines.append(
                f"CHARGE {e[0]} {e[1]} {frac(self.initial[e])} -> {frac(self.final[e])}"
            )
        for t in self.transfers:
            lines.append(
                f"XFER {t.rule} {elt(t.source)} {elt(t.target)} {frac(t.amount)}"
            )
        lines.append(f"TOTAL {frac(self.total_final())}")
        return lines


@dataclass(frozen=True)
class RuleSet:
    tag: str            # "MAIN06" or "MINDEG"
    k: int | None = None

    def __post_init__(self):
        if self.tag not in ("MAIN06", "MINDEG"):
            raise ValueError(f"unknown ruleset {self.tag!r}")
        if self.tag == "MINDEG" and (self.k is None or self.k < 3):
            raise ValueError("MINDEG requires k >= 3")


MAIN06 = RuleSet("MAIN06")


def initial_charges(pg: PlaneGraph, rs: RuleSet) -> ChargeLedger:
    g = pg.graph
    initial = {}
    if rs.tag == "MAIN06":
        for v in g.vertices:
            initial[("v", v)] = Fraction(g.degree(v) - 4)
        for f in faces(pg):
            initial[("f", f.index)] = Fraction(f.degree - 4)
    else:
        for v in g.vertices:
            initial[("v", v)] = Fraction(g.degree(v))
    return ChargeLedger(initial=initial, final=dict(initial), transfers=())


def _sort_key(t: Transfer):
    kind_rank = {"v": 0, "f": 1}
    return (
        kind_rank[t.source[0]],
        t.source[1],
        kind_rank[t.target[0]],
        t.target[1],
    )


def apply_rules(pg: PlaneGraph, rs: RuleSet) -> ChargeLedger:
    """Full transfer log plus final charges.  The per-step amounts depend
    only on structure, so step order affects the log, never the totals."""
    ledger = initial_charges(pg, rs)
    g = pg.graph
    transfers: list[Transfer] = []

    if rs.tag == "MINDEG":
        for v in g.vertices:
            if g.degree(v) >= 5:
                for w in g.neighbors(v):
                    if g.degree(w) == 3:
                        transfers.append(Transfer("MINDEG", ("v", v), ("v", w), THIRD))
    else:
        transfers = _main06_transfers(pg)

    final = dict(ledger.initial)
    for t in transfers:
        final[t.source] -= t.amount
        final[t.target] += t.amount
    return ChargeLedger(initial=ledger.initial, final=final, transfers=tuple(transfers))


def _main06_transfers(pg: PlaneGraph) -> list[Transfer]:
    g = pg.graph
    fs = faces(pg)
    deg = {v: g.degree(v) for v in g.vertices}

    h = build_hypergraph(pg)
    if h.hyperedges:
        h = choose_roots_and_sponsor(h)
    sponsored = list(zip(h.structures, h.sponsor))

    # face lookups
    face_of_dart = {}
    for f in fs:
        for d in f.boundary:
            face_of_dart[d] = f.index
    faces_at = {v: set() for v in g.vertices}
    for f in fs:
        for t in f.vertex_set():
            faces_at[t].add(f.index)
    five_face_vertices = set()
    for f in fs:
        if f.degree == 5:
            five_face_vertices.update(f.vertex_set())

    def has_two_neighbor(t):
        return any(deg[w] == 2 for w in g.neighbors(t))

    out: list[Transfer] = []

    # step 1: big vertices pay
    step = []
    for v in g.vertices:
        if deg[v] < BIG:
            continue
        for w in g.neighbors(v):
            if deg[w] <= 7:
                step.append(Transfer("1", ("v", v), ("v", w), HALF))
        for s, sp in sponsored:
            if sp != v:
                continue
            if s.kind is StructureKind.SPECIAL_FACE:
                step.append(Transfer("1", ("v", v), ("f", s.face_indices[0]), HALF))
            else:
                step.append(Transfer("1", ("v", v), ("v", s.u), HALF))
        for w in g.neighbors(v):
            if deg[w] < BIG:
                continue
            f1 = face_of_dart[(v, w)]
            f2 = face_of_dart[(w, v)]
            if f1 == f2:
                # bridge between big vertices: the lone face gets twice 1/4
                step.append(Transfer("1", ("v", v), ("f", f1), HALF))
            else:
                step.append(Transfer("1", ("v", v), ("f", f1), QUARTER))
                step.append(Transfer("1", ("v", v), ("f", f2), QUARTER))
    out.extend(sorted(step, key=_sort_key))

    # step 2: mid vertices pay their 2-neighbors and qualifying 5-faces
    step = []
    for v in g.vertices:
        if not 3 <= deg[v] <= 7:
            continue
        for w in g.neighbors(v):
            if deg[w] == 2:
                step.append(Transfer("2", ("v", v), ("v", w), HALF))
        for fi in sorted(faces_at[v]):
            f = fs[fi]
            if f.degree != 5 or len(set(f.walk())) != 5:
                continue
            cyc = f.walk()
            i = cyc.index(v)
            prev, nxt = cyc[i - 1], cyc[(i + 1) % 5]
            rest = [t for t in cyc if t not in (v, prev, nxt)]
            if (
                deg[prev] >= BIG
                and deg[nxt] >= BIG
                and all(deg[t] == 2 for t in rest)
            ):
                step.append(Transfer("2", ("v", v), ("f", fi), HALF))
    out.extend(sorted(step, key=_sort_key))

    # step 3: faces pay eligible corners next to a big vertex
    step = []
    for f in fs:
        walk = f.walk()
        d = len(walk)
        for i, t in enumerate(walk):
            if not 3 <= deg[t] <= 7:
                continue
            if deg[walk[i - 1]] >= BIG or deg[walk[(i + 1) % d]] >= BIG:
                step.append(Transfer("3", ("f", f.index), ("v", t), QUARTER))
    out.extend(sorted(step, key=_sort_key))

    # step 4: 5-faces pay their 2-vertices
    step = []
    for f in fs:
        if f.degree != 5:
            continue
        for t in f.walk():
            if deg[t] == 2:
                amt = Fraction(5, 8) if has_two_neighbor(t) else QUARTER
                step.append(Transfer("4", ("f", f.index), ("v", t), amt))
    out.extend(sorted(step, key=_sort_key))

    # step 5: big faces pay their 2-vertices
    step = []
    for f in fs:
        if f.degree < 7:
            continue
        for t in f.walk():
            if deg[t] != 2:
                continue
            on5 = t in five_face_vertices
            two = has_two_neighbor(t)
            if on5:
                amt = Fraction(7, 8) if two else Fraction(3, 4)
            else:
                amt = Fraction(3, 4) if two else HALF
            step.append(Transfer("5", ("f", f.index), ("v", t), amt))
    out.extend(sorted(step, key=_sort_key))

    return out


@dataclass(frozen=True)
class AuditReport:
    total: Fraction
    negative_elements: list
    configs: list
    ledger: ChargeLedger | None
    sponsorship_defined: bool


def audit(pg: PlaneGraph) -> AuditReport:
    """Run MAIN06 on a connected class member and cross-check the global
    arithmetic: the total is the fixed Euler constant, some element is
    negative, and at least one reducible pattern is present.  The last point
    failing would contradict the mechanized argument, so it raises."""
    g = pg.graph
    comps = g.components()
    if len(comps) > 1:
        raise ValueError(
            f"audit requires a connected graph; components start at "
            f"{[c[0] for c in comps]}"
        )
    if not in_class_C(pg):
        raise ValueError("audit requires a plane graph with no 3-, 4- or 6-cycle")
    configs = detect_reducible(pg)
    try:
        ledger = apply_rules(pg, MAIN06)
        defined = True
    except SponsorshipUndefinedError:
        ledger = initial_charges(pg, MAIN06)
        defined = False
    if not configs:
        raise AuditError(
            "class-C input with no reducible configuration; this contradicts "
            "the structure lemmas"
        )
    return AuditReport(
        total=ledger.total_final(),
        negative_elements=ledger.negative_elements(),
        configs=configs,
        ledger=ledger,
        sponsorship_defined=defined,
    )
