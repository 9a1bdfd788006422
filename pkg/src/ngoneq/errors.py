"""Exception types shared across the package."""


class InvalidInputError(ValueError):
    """Raised when arguments violate a documented precondition."""


class MoveNotApplicableError(InvalidInputError):
    """Raised when a flip move cannot be read off from, or applied to, a triangulation."""


class InternalError(RuntimeError):
    """Raised when an internal consistency check fails; indicates a bug, not bad input."""
