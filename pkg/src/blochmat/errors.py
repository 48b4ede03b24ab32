"""Exception types raised across the package."""


class BlochError(ValueError):
    """Base class for invalid inputs to blochmat operations."""


class InvalidMatrixError(BlochError):
    """A matrix violates a structural precondition (shape, Hermiticity, trace, ...)."""


class UnphysicalStateError(BlochError):
    """The input is not a positive semidefinite state.

    The positivity report that triggered the error is kept on ``report``.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
