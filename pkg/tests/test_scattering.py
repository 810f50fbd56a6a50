import cmath
import math

import pytest

from rzlab.errors import VerificationError
from rzlab.scattering import (coupling_at_zero, coupling_from_root,
                              flat_wave, jost_plus, s_matrix,
                              zero_to_jost_zero)
from rzlab.zeta import ComplexArgument

T1 = 14.134725141734694


def test_s_matrix_at_origin():
    m = s_matrix(0.0)
    assert abs(m.value.to_complex() - 1.0) < 1e-14
    assert not m.pole_flag and not m.zero_flag


def test_s_matrix_inverse_symmetry():
    for s in (complex(0.1, 0.3), complex(-0.05, 2.0), complex(0.2, -1.7)):
        prod = s_matrix(s).value * s_matrix(-s).value
        assert abs(prod.to_complex() - 1.0) < 1e-10


def test_s_matrix_unitary_on_imaginary_axis():
    for tau in (0.5, 3.0, 11.0, 25.0):
        m = s_matrix(complex(0.0, tau))
        assert abs(m.value.abs() - 1.0) < 1e-10


def test_s_matrix_accepts_complex_argument_type():
    a = s_matrix(ComplexArgument(0.1, 0.2))
    b = s_matrix(complex(0.1, 0.2))
    assert a.value.log_modulus == b.value.log_modulus


def test_s_matrix_pole_and_zero_flags():
    pole_point = complex(-0.25, 0.5 * T1)  # xi(-2s) vanishes here
    assert s_matrix(pole_point).pole_flag
    zero_point = complex(0.25, 0.5 * T1)  # xi(2s) vanishes here
    assert s_matrix(zero_point).zero_flag
    m = s_matrix(complex(0.1, 1.0))
    assert not m.pole_flag and not m.zero_flag


def test_jost_plus_is_reciprocal():
    s = complex(0.07, 0.9)
    prod = jost_plus(s).value * s_matrix(s).value
    assert abs(prod.to_complex() - 1.0) < 1e-12


def test_zero_to_jost_zero_verified():
    p = zero_to_jost_zero(T1, verify=True)
    assert p == complex(-0.25, 0.5 * T1)
    assert jost_plus(p).value.abs() < 1e-6


def test_zero_to_jost_zero_rejects_non_zero():
    with pytest.raises(VerificationError):
        zero_to_jost_zero(15.0, verify=True)  # not a zero ordinate


def test_coupling_at_zero_real_and_below_quarter():
    c = coupling_at_zero(T1)
    assert c.coupling.imag == 0.0
    assert c.coupling.real == -(0.25 + T1 * T1)
    assert c.coupling.real < -0.25


def test_coupling_from_root_off_line_control():
    on = coupling_from_root(complex(0.5, 10.0))
    assert abs(on.coupling.imag) < 1e-14
    off = coupling_from_root(complex(0.6, 10.0))
    assert abs(off.coupling.imag - 2.0) < 1e-12


def test_flat_wave_symmetry():
    # y^{1/2+s} + S y^{1/2-s} with S(0) = 1 gives 2 sqrt(y) at s = 0
    for y in (0.5, 1.0, 4.0):
        v = flat_wave(0.0, y)
        assert abs(v - 2.0 * math.sqrt(y)) < 1e-12
    # functional relation: S(-s) phi(s, y) = phi(-s, y) since S(s)S(-s) = 1
    s = complex(0.2, 1.4)
    for y in (0.7, 2.3):
        ms = s_matrix(-s).value.to_complex()
        lhs = ms * flat_wave(s, y)
        rhs = flat_wave(-s, y)
        assert abs(lhs - rhs) < 1e-10 * abs(rhs)


def test_flat_wave_requires_positive_height():
    with pytest.raises(ValueError):
        flat_wave(0.1, 0.0)
