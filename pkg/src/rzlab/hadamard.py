"""Truncated Hadamard factorization of xi from a catalog of
critical-line ordinates, with convergence diagnostics against direct
evaluation.

Each ordinate t contributes the conjugate pair of zeros 1/2 +- i t; the
pair's genus-one convergence factors are kept and grouped before
exponentiation so real arguments give real values.
"""

import cmath
import math
from dataclasses import dataclass

from .errors import PreconditionError
from .zeta import xi

FD_STEP = 1e-5


@dataclass(frozen=True)
class HadamardParams:
    m: int  # order of the zero at the origin; 0 for xi since xi(0) != 0
    a: complex
    b: complex


@dataclass(frozen=True)
class ZeroCatalog:
    ordinates: tuple

    def __post_init__(self):
        ords = tuple(float(t) for t in self.ordinates)
        object.__setattr__(self, "ordinates", ords)
        if len(ords) < 1:
            raise ValueError("catalog needs at least one ordinate")
        if any(t2 <= t1 for t1, t2 in zip(ords, ords[1:])):
            raise ValueError("ordinates must be strictly increasing")

    @staticmethod
    def from_zeros(zeros):
        return ZeroCatalog(tuple(z.ordinate for z in zeros))

    def __len__(self):
        return len(self.ordinates)


def default_xi_eval(z):
    return xi(z).to_complex()


def fit_constants(xi_eval=default_xi_eval):
    """A = log xi(0); B = (log xi)'(0) by Richardson-extrapolated
    central differences with step 1e-5."""
    a = cmath.log(xi_eval(0j))

    def central(h):
        return (cmath.log(xi_eval(complex(h, 0.0)))
                - cmath.log(xi_eval(complex(-h, 0.0)))) / (2.0 * h)

    d1 = central(FD_STEP)
    d2 = central(0.5 * FD_STEP)
    b = (4.0 * d2 - d1) / 3.0
    return HadamardParams(m=0, a=a, b=b)


def hadamard_partial(params, catalog, z, n):
    """Partial Hadamard product over the first n ordinates:
    z^m e^A e^{Bz} prod (1 - z/rho)(1 - z/conj rho) e^{z(1/rho + 1/conj rho)}.

    Returns exactly 0 when z coincides with a catalog zero (relative
    tolerance 1e-12); that is a value, not an error.
    """
    if n > len(catalog):
        raise PreconditionError("n exceeds catalog size")
    z = complex(z)
    log_total = params.a + params.b * z
    if params.m:
        log_total += params.m * cmath.log(z)
    total_pairs = 0j
    for t in catalog.ordinates[:n]:
        rho = complex(0.5, t)
        rho_bar = rho.conjugate()
        if abs(z - rho) < 1e-12 * abs(rho) or abs(z - rho_bar) < 1e-12 * abs(rho):
            return 0j
        pair = (1.0 - z / rho) * (1.0 - z / rho_bar)
        # 1/rho + 1/conj rho = 2 Re rho / |rho|^2, exactly real
        total_pairs += cmath.log(pair) + z * (1.0 / (rho.real * rho.real
                                                     + rho.imag * rho.imag))
    value = cmath.exp(log_total + total_pairs)
    if z.imag == 0.0:
        return complex(value.real, 0.0)
    return value


def convergence_profile(z, n_list, catalog, params=None,
                        xi_eval=default_xi_eval):
    """Relative residual |P_N(z) - xi(z)| / |xi(z)| for each N."""
    if params is None:
        params = fit_constants(xi_eval)
    target = xi_eval(complex(z))
    return [abs(hadamard_partial(params, catalog, z, n) - target) / abs(target)
            for n in n_list]
