"""Improper two-class colorings: verification, exact solving, enumeration.

A coloring assigns each vertex one of two colors: Zero (the class that must
induce maximum degree at most d1; for d1 = 0 an independent set) or K (the
class inducing maximum degree at most d2).

``solve`` is a deterministic backtracking search: it branches on the lowest
unassigned vertex id, Zero before K, with unit propagation to a fixpoint.
``brute_force_solve`` is the independent exhaustive oracle used in tests.
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass, field

from . import _kernel
from .errors import ResourceLimitError, SolveTimeout
from .graph import Graph

ENUMERATION_THRESHOLD = 30
BRUTE_FORCE_LIMIT = 20
DEFAULT_TIMEOUT = 60.0


class Color(enum.Enum):
    ZERO = 0
    K = 1

    def __str__(self):
        return "0" if self is Color.ZERO else "K"


@dataclass(frozen=True)
class Coloring:
    """Partial assignment vertex -> color."""

    assignment: dict[int, Color] = field(default_factory=dict)

    def __getitem__(self, v: int) -> Color:
        return self.assignment[v]

    def get(self, v: int):
        return self.assignment.get(v)

    def __len__(self):
        return len(self.assignment)

    def __contains__(self, v):
        return v in self.assignment

    def items(self):
        return sorted(self.assignment.items())

    def is_total_on(self, g: Graph) -> bool:
        return all(v in self.assignment for v in g.vertices)

    def with_colors(self, updates: dict[int, Color]) -> "Coloring":
        merged = dict(self.assignment)
        merged.update(updates)
        return Coloring(merged)

    def extends(self, other: "Coloring") -> bool:
        return all(self.assignment.get(v) == c for v, c in other.assignment.items())


@dataclass(frozen=True)
class SolveSpec:
    d1: int
    d2: int
    precoloring: Coloring = field(default_factory=Coloring)

    def __post_init__(self):
        if self.d1 < 0 or self.d2 < 0:
            raise ValueError("degree bounds must be non-negative")


@dataclass(frozen=True)
class Unsatisfiable:
    """UNSAT verdict; ``exhausted`` records that the deterministic search
    tree was fully explored (always true: timeouts raise instead)."""

    exhausted: bool = True

    def __bool__(self):
        return False


@dataclass(frozen=True)
class VerifyReport:
    valid: bool
    violations: tuple


def same_color_degree(g: Graph, c: Coloring, v: int) -> int:
    col = c[v]
    return sum(1 for w in g.neighbors(v) if c.get(w) == col)


def verify_coloring(g: Graph, c: Coloring, spec: SolveSpec) -> VerifyReport:
    """Check both induced-degree bounds and that c extends the precoloring.

    ``violations`` lists each offending vertex with its same-color degree;
    a precoloring mismatch is reported as ``('precolor', v)``.
    """
    missing = [v for v in g.vertices if v not in c]
    if missing:
        raise ValueError(f"coloring is partial; unassigned vertices: {missing}")
    violations = []
    for v in g.vertices:
        bound = spec.d1 if c[v] is Color.ZERO else spec.d2
        d = same_color_degree(g, c, v)
        if d > bound:
            violations.append((v, d))
    for v, col in spec.precoloring.items():
        if c[v] is not col:
            violations.append(("precolor", v))
    return VerifyReport(valid=not violations, violations=tuple(violations))


def _csr(g: Graph):
    verts = g.vertices
    index = {v: i for i, v in enumerate(verts)}
    indptr = [0]
    indices = []
    for v in verts:
        indices.extend(index[w] for w in g.neighbors(v))
        indptr.append(len(indices))
    return verts, index, indptr, indices


def _precolor_array(index, n, pre: Coloring):
    arr = [-1] * n
    for v, col in pre.assignment.items():
        if v not in index:
            raise ValueError(f"precolored vertex {v} not in graph")
        arr[index[v]] = col.value
    return arr


def _mask_to_coloring(verts, mask: int) -> Coloring:
    return Coloring(
        {v: (Color.K if (mask >> i) & 1 else Color.ZERO) for i, v in enumerate(verts)}
    )


def solve(g: Graph, spec: SolveSpec, timeout: float = DEFAULT_TIMEOUT):
    """First valid total coloring in deterministic search order, or
    ``Unsatisfiable``.  Raises :class:`SolveTimeout` on hitting ``timeout``
    seconds (never misreported as UNSAT)."""
    verts, index, indptr, indices = _csr(g)
    pre = _precolor_array(index, len(verts), spec.precoloring)
    deadline = None if timeout is None else time.monotonic() + timeout
    status, masks = _kernel.search(
        len(verts), indptr, indices, spec.d1, spec.d2, pre, 1, deadline
    )
    if status == _kernel.STATUS_TIMEOUT:
        raise SolveTimeout(f"solve exceeded {timeout} s")
    if not masks:
        return Unsatisfiable()
    return _mask_to_coloring(verts, masks[0])


def iter_masks(g: Graph, spec: SolveSpec, limit=None):
    """All valid colorings as (vertex-list, K-bitmask list); low-level hook
    for bulk checks that would not want one dict per coloring."""
    verts, index, indptr, indices = _csr(g)
    pre = _precolor_array(index, len(verts), spec.precoloring)
    lim = (1 << 62) if limit is None else limit
    if lim <= 0:
        return verts, []
    status, masks = _kernel.search(
        len(verts), indptr, indices, spec.d1, spec.d2, pre, lim, None
    )
    return verts, masks


def enumerate_colorings(g: Graph, spec: SolveSpec, limit=None) -> list[Coloring]:
    """All valid total colorings extending the precoloring, lexicographic
    over ascending vertex ids with Zero before K, truncated at ``limit``."""
    if limit is None and len(g) > ENUMERATION_THRESHOLD:
        raise ResourceLimitError(
            f"enumeration over {len(g)} vertices needs an explicit limit "
            f"(threshold {ENUMERATION_THRESHOLD})"
        )
    verts, masks = iter_masks(g, spec, limit)
    return [_mask_to_coloring(verts, m) for m in masks]


def brute_force_solve(g: Graph, spec: SolveSpec):
    """Exhaustive 2^n oracle with the same contract as ``solve``."""
    if len(g) > BRUTE_FORCE_LIMIT:
        raise ResourceLimitError(
            f"brute force limited to {BRUTE_FORCE_LIMIT} vertices, got {len(g)}"
        )
    verts, index, indptr, indices = _csr(g)
    pre = _precolor_array(index, len(verts), spec.precoloring)
    found, mask = _kernel.brute(len(verts), indptr, indices, spec.d1, spec.d2, pre)
    if not found:
        return Unsatisfiable()
    return _mask_to_coloring(verts, mask)
