"""Number-theoretic scattering objects built on xi.

S(s) = xi(2s)/xi(-2s), the zero-energy Jost function F+(s) =
xi(-2s)/xi(2s), the zero <-> pole correspondence on Re s = -1/4, the
coupling spectrum, and the flat-wave zero Fourier coefficient.

The s-plane here is the shifted one: a zeta zero rho corresponds to
s = -rho/2, so the first-zero pole of S sits at s = -1/4 - i t_1 / 2.
"""

import cmath
import math
from dataclasses import dataclass

from .errors import VerificationError
from .numerics import ContourRectangle, winding_number
from .zeta import SignedLogComplex, _as_s, xi

# A point p counts as a xi zero when it lies within this distance of
# one (simple zeros: |xi/xi'| is the distance to the zero).
ZERO_NEWTON_RADIUS = 1e-6


@dataclass(frozen=True)
class SMatrixValue:
    s: complex
    value: SignedLogComplex
    pole_flag: bool
    zero_flag: bool

    def __post_init__(self):
        if self.pole_flag and self.zero_flag:
            raise ValueError("pole_flag and zero_flag are mutually exclusive")


@dataclass(frozen=True)
class CouplingValue:
    coupling: complex


def _xi_vanishes(p):
    """True when xi has a zero within ZERO_NEWTON_RADIUS of p.

    Decided on the decay-normalized magnitude |xi| e^{pi |t| / 4} (the
    raw linear floor would misfire at large t), then confirmed by the
    distance estimate |xi / xi'| for a simple zero, with xi' taken from
    a stencil wide enough to sit clear of the zero itself.
    """
    v = xi(p)
    scale = v.log_modulus + 0.25 * math.pi * abs(p.imag)
    if scale > math.log(1e-3):  # clearly away from any zero
        return False
    h = 1e-3
    deriv = (xi(p + h).to_complex() - xi(p - h).to_complex()) / (2.0 * h)
    if deriv == 0:
        return False
    distance = v.abs() / abs(deriv)
    return distance < ZERO_NEWTON_RADIUS


def s_matrix(s):
    """S(s) = xi(2s)/xi(-2s) in log form, with pole/zero flags."""
    s = _as_s(s)
    num = xi(2.0 * s)
    den = xi(-2.0 * s)
    pole = _xi_vanishes(-2.0 * s)
    zero = False if pole else _xi_vanishes(2.0 * s)
    return SMatrixValue(s=s, value=num / den, pole_flag=pole, zero_flag=zero)


def jost_plus(s):
    """Zero-energy Jost function F+(s) = xi(-2s)/xi(2s) = 1/S(s)."""
    m = s_matrix(s)
    return SMatrixValue(s=m.s, value=m.value.reciprocal(),
                        pole_flag=m.zero_flag, zero_flag=m.pole_flag)


def zero_to_jost_zero(t_n, verify=True):
    """Map a zeta-zero ordinate to the predicted F+ zero -1/4 + i t_n/2.

    With verify=True the contract is checked: |F+| < 1e-6 there and the
    winding of F+ on a 0.05-radius box around the point equals 1.  A
    failure falsifies the implementation, not the correspondence.
    """
    p = complex(-0.25, 0.5 * t_n)
    if verify:
        fp = jost_plus(p)
        if not (fp.value.abs() < 1e-6 and fp.zero_flag):
            raise VerificationError(
                "|F+| = %.3g at %s; expected a zero there"
                % (fp.value.abs(), p))
        rect = ContourRectangle(p.real - 0.05, p.real + 0.05,
                                p.imag - 0.05, p.imag + 0.05)
        w = winding_number(lambda z: jost_plus(z).value.to_complex(), rect,
                           samples_per_side=32)
        if w != 1:
            raise VerificationError(
                "winding of F+ around %s is %d, expected 1" % (p, w))
    return p


def coupling_at_zero(t_n):
    """Coupling lambda = rho (rho - 1) at rho = 1/2 + i t_n.

    On the critical line this is exactly -(1/4 + t_n^2): real, below
    -1/4.  Computed in that closed form so Im is exactly zero.
    """
    return CouplingValue(complex(-(0.25 + t_n * t_n), 0.0))


def coupling_from_root(rho):
    """lambda = rho (rho - 1) for an arbitrary (hypothetical) zero rho.

    Off the critical line Im lambda = 2 t (sigma - 1/2) != 0; callers
    use this as the negative control.
    """
    rho = complex(rho)
    return CouplingValue(rho * (rho - 1.0))


def flat_wave(s, y):
    """Zero Fourier coefficient y^{1/2+s} + S(s) y^{1/2-s} of the
    Eisenstein wave, for y > 0."""
    if y <= 0:
        raise ValueError("flat_wave requires y > 0")
    s = _as_s(s)
    m = s_matrix(s)
    if m.pole_flag:
        raise VerificationError("S(s) has a pole at %s" % s)
    sv = m.value.to_complex()
    ly = math.log(y)
    return cmath.exp((0.5 + s) * ly) + sv * cmath.exp((0.5 - s) * ly)
