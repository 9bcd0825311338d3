"""Exception hierarchy shared by all modules.

The command line front end maps these onto exit codes: malformed input
is 2, violated mathematical preconditions are 3, size guards are 4.
"""


class ToricTopError(Exception):
    """Base class for every error raised by this package."""


class InputError(ToricTopError, ValueError):
    """Malformed, inconsistent or out-of-range input data."""


class PreconditionError(ToricTopError, ValueError):
    """A mathematical precondition of an operation is violated."""


class GenericityViolation(PreconditionError):
    """The test vector lies on a wall (a cone of codimension one)."""


class NotCompleteError(PreconditionError):
    """The degree function is not constant, so the multi-fan is not complete."""


class PointOnBoundaryError(PreconditionError):
    """The query point lies on the loop itself."""


class UnboundedRegionError(PreconditionError):
    """The support inequalities cut out an unbounded region."""


class NotReflexiveError(PreconditionError):
    """The polygon is not reflexive (dual vertices are not lattice points)."""


class SizeGuardError(ToricTopError):
    """Input exceeds the configured size guard; see TORICTOP_SIZE_GUARD."""
