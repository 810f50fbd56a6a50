"""Numerical laboratory for the completed-zeta scattering correspondence:
critical-line zero finding, the xi-ratio S-matrix, inverse-square-potential
quantum checks, dispersion reconstruction, and Hadamard factorization.
"""

from ._backend import backend_name
from .errors import (BoundaryZeroError, BudgetExhaustedError, DivergenceError,
                     DomainError, GridError, IntegrationLimitError, PoleError,
                     PreconditionError, RangeError, RZLabError,
                     VerificationError)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "backend_name",
    "RZLabError",
    "DomainError",
    "RangeError",
    "PoleError",
    "PreconditionError",
    "BudgetExhaustedError",
    "DivergenceError",
    "BoundaryZeroError",
    "GridError",
    "VerificationError",
    "IntegrationLimitError",
]
