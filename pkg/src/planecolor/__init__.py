"""planecolor: exact toolkit for improper two-class colorings of plane graphs.

Covers class membership (planar, no 3-, 4- or 6-cycle), an exact (0,k)
solver with a brute-force oracle, reducible-configuration detection, the
structure hypergraph with roots and sponsors, exact-rational discharging
with audit, NP-hardness gadget machinery, and a text graph format with a
CLI front end.
"""

from ._kernel import backend_name
from .coloring import (
    BRUTE_FORCE_LIMIT,
    ENUMERATION_THRESHOLD,
    Color,
    Coloring,
    SolveSpec,
    Unsatisfiable,
    VerifyReport,
    brute_force_solve,
    enumerate_colorings,
    solve,
    verify_coloring,
)
from .configurations import (
    BIG,
    ConfigKind,
    ReducibleConfig,
    SpecialStructure,
    StructureHypergraph,
    StructureKind,
    build_hypergraph,
    choose_roots_and_sponsor,
    detect_reducible,
    find_special_structures,
    recolor_special_structure,
    surgery_edge_replace,
    surgery_vertex_split,
)
from .discharging import (
    MAIN06,
    AuditReport,
    ChargeLedger,
    RuleSet,
    Transfer,
    apply_rules,
    audit,
    initial_charges,
)
from .errors import (
    AuditError,
    InvalidEmbeddingError,
    ParseError,
    PlanecolorError,
    ResourceLimitError,
    SolveTimeout,
    SponsorshipUndefinedError,
)
from .fileformat import (
    GraphDocument,
    format_document,
    load_document,
    parse_document,
    save_document,
)
from .gadgets import (
    ForcingVerdict,
    TerminalGadget,
    build_path_gadget,
    compose_parallel,
    reduce_01_to_0k,
    verify_forcing_pair,
    verify_u3_forcing,
)
from .generate import generate_class_C, subdivide_twice
from .graph import (
    EulerReport,
    Face,
    Graph,
    PlaneGraph,
    euler_check,
    faces,
    girth,
    has_cycle_of_length,
    in_class_C,
    n3,
)
from .mad import mad, mad_by_enumeration

__version__ = "1.0.0"

__all__ = [name for name in dir() if not name.startswith("_")]
