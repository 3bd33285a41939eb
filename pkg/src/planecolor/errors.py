"""Exception hierarchy shared across the package."""


class PlanecolorError(Exception):
    """Base class for all package-specific errors."""


class ParseError(PlanecolorError):
    """Malformed graph/gadget file."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class InvalidEmbeddingError(PlanecolorError):
    """Rotation system inconsistent with the adjacency structure."""


class ResourceLimitError(PlanecolorError):
    """A size threshold or time budget was exceeded (CLI exit status 3)."""


class SolveTimeout(ResourceLimitError):
    """The solver hit its wall-clock budget before exhausting the search tree."""


class SponsorshipUndefinedError(PlanecolorError):
    """A structure-hypergraph component has no vertex with enough degree slack
    to serve as root; carries the offending component as ``witness``."""

    def __init__(self, witness):
        super().__init__(
            "no root candidate (degree slack >= 8) in hypergraph component "
            f"{sorted(witness.witness)}"
        )
        self.witness = witness


class AuditError(PlanecolorError):
    """The audit found a class-C input with no reducible configuration, which
    would contradict the mechanized argument."""
