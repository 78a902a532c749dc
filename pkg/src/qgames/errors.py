"""Exception types shared across the package."""


class ValidationError(ValueError):
    """An input violates a documented precondition (payoff ordering, angle
    range, grid shape, ...)."""


class ResourceLimitError(ValidationError):
    """A request exceeds a hard resource bound (e.g. exact enumeration of a
    state space larger than 2**24)."""


class ConsistencyError(RuntimeError):
    """Two redundant computation paths disagree beyond their documented
    tolerance.  This signals an internal defect, not bad input."""
