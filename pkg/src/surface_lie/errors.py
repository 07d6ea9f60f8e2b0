"""Exception types shared across the package."""


class InvalidArgument(ValueError):
    pass


class IncompatibleOperands(ValueError):
    pass


class InvalidMatrix(ValueError):
    pass


class InvalidSeries(ValueError):
    pass


class ResourceLimit(RuntimeError):
    pass


class InternalConsistencyError(RuntimeError):
    """An exactness postcondition failed; indicates a bug, not bad input."""
