"""Exception hierarchy shared by all rzlab modules."""


class RZLabError(Exception):
    """Base class for all rzlab errors."""


class DomainError(RZLabError):
    """Input outside the mathematical domain of an operation."""


class RangeError(RZLabError):
    """Input outside the supported desk-scale window."""


class PoleError(DomainError):
    """Evaluation requested exactly at a pole."""


class PreconditionError(RZLabError):
    """A caller-contract precondition was violated."""


class BudgetExhaustedError(RZLabError):
    """Adaptive routine hit its evaluation budget before converging.

    Carries the best estimate obtained so far in ``best_estimate``.
    """

    def __init__(self, message, best_estimate=None):
        super().__init__(message)
        self.best_estimate = best_estimate


class DivergenceError(RZLabError):
    """An integral was detected (or known a priori) to diverge."""


class BoundaryZeroError(RZLabError):
    """The integrand/function vanishes on a contour where it must not."""


class GridError(RZLabError):
    """Sample grid too coarse or too narrow for the requested operation."""


class VerificationError(RZLabError):
    """A numerical cross-check that must hold has failed."""


class IntegrationLimitError(RZLabError):
    """ODE integration could not proceed past a singular point."""
