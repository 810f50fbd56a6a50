# cython: language_level=3, boundscheck=False, cdivision=True
"""Compiled Euler-Maclaurin kernel for zeta(s).

Mirrors the API of ``rzlab._kernels_py``; the scalar loop over
n^{-s} = exp(-s log n) dominates every xi/winding/zero-scan call,
so it lives here.
"""

from libc.math cimport log, exp, cos, sin

BACKEND = "compiled"

cdef double[6] _BERNOULLI = [1.0 / 6, -1.0 / 30, 1.0 / 42,
                             -1.0 / 30, 5.0 / 66, -691.0 / 2730]
cdef double[6] _FACT_INV = [1.0 / 2, 1.0 / 24, 1.0 / 720,
                            1.0 / 40320, 1.0 / 3628800, 1.0 / 479001600]


def zeta_em(double sigma, double t, int n):
    """Euler-Maclaurin value of zeta(sigma + i t) with n initial terms."""
    cdef double complex s = sigma + 1j * t
    cdef double complex total = 0
    cdef double lk, m
    cdef int k, i, twok
    for k in range(1, n):
        lk = log(<double>k)
        m = exp(-sigma * lk)
        total += m * (cos(t * lk) - 1j * sin(t * lk))
    cdef double ln = log(<double>n)
    cdef double complex npow = exp(-sigma * ln) * (cos(t * ln) - 1j * sin(t * ln))
    total += 0.5 * npow
    total += npow * (<double>n) / (s - 1.0)
    cdef double complex fac = s * npow / (<double>n)
    cdef double n2 = (<double>n) * (<double>n)
    for i in range(6):
        twok = 2 * (i + 1)
        total += _BERNOULLI[i] * _FACT_INV[i] * fac
        fac *= (s + (twok - 1.0)) * (s + (<double>twok)) / n2
    return total
