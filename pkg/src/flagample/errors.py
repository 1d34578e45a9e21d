"""Exception hierarchy.

The three bases map onto the CLI exit codes: bad input (1), degenerate
geometry (2), internal inconsistency (3).
"""


class FlagampleError(Exception):
    """Base class for all errors raised by this package."""


class BadInputError(FlagampleError):
    """Malformed or out-of-range input."""


class DegenerateGeometryError(FlagampleError):
    """Structurally valid input that selects no flag-domain geometry."""


class InternalInconsistencyError(FlagampleError):
    """Two independent routes to the same quantity disagreed."""


class InvalidTypeError(BadInputError):
    """Rank out of bounds for the requested Dynkin series."""


class BadNodeError(BadInputError):
    """Node index outside 1..rank."""


class NotARootError(BadInputError):
    """Reflection requested through a vector that is not a root."""


class NotClosedError(BadInputError):
    """Root subset is not reflection-closed within the ambient system."""


class EnumerationCapError(BadInputError):
    """Weyl group enumeration exceeded the configured element cap."""


class CompactFormError(DegenerateGeometryError):
    """Empty marking: the compact real form has no flag domains."""


class NotProperError(DegenerateGeometryError):
    """Levi node set equals all nodes, so Z = G/Q would be a point."""


class EmptyFiberError(DegenerateGeometryError):
    """No noncompact tangent weight: the cycle fills the flag manifold."""


class DegenerateGradingError(InternalInconsistencyError):
    """Compact roots span a subspace of codimension greater than one."""
