"""Nontrivial-zero location and counting.

Sign-change scanning of the real-valued xi(1/2 + it), plus
argument-principle counts over critical-strip rectangles; the two
routes cross-check each other.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .errors import BoundaryZeroError, PreconditionError
from .numerics import BracketInterval, ContourRectangle, find_root_bracketed, winding_number
from .zeta import SignedLogComplex, T_MAX, xi

DEFAULT_STEP = 0.1
DEFAULT_TOL = 1e-10


@dataclass(frozen=True)
class ZetaZero:
    ordinate: float
    residual: float
    index: int


def critical_line_function(t):
    """xi(1/2 + it) snapped to its exactly-real value.

    xi is real on the critical line; the computed phase lands within
    rounding of 0 or pi and is snapped so the sign is unambiguous.
    """
    v = xi(complex(0.5, abs(t)))
    sign = 1 if abs(v.phase) < 0.5 * math.pi else -1
    return SignedLogComplex(v.log_modulus, 0.0 if sign > 0 else math.pi, sign)


def _signed_log_mag(t):
    """Sign times log-magnitude of xi(1/2+it); monotone proxy unusable,
    used only for sign changes and bisection."""
    v = critical_line_function(t)
    return v.sign_hint, v.log_modulus


def _scan_chunk(t_lo, t_hi, step, tol):
    """Sign-change scan on [t_lo, t_hi]; returns refined ordinates."""
    found = []
    n = int(math.ceil((t_hi - t_lo) / step))
    grid = [t_lo + i * (t_hi - t_lo) / n for i in range(n + 1)]
    vals = [_signed_log_mag(t) for t in grid]
    # measure-zero collision with a grid point: shift and rescan
    if any(lm < -600.0 and lm != -math.inf for _, lm in vals):
        shifted = [t + step / 3.0 for t in grid]
        grid = grid[:1] + shifted[:-1] + grid[-1:]
        vals = [_signed_log_mag(t) for t in grid]

    def f(t):
        sign, lm = _signed_log_mag(t)
        return sign * math.exp(max(lm + 0.25 * math.pi * t, -700.0))

    for (t0, (s0, _)), (t1, (s1, _)) in zip(zip(grid[:-1], vals[:-1]),
                                            zip(grid[1:], vals[1:])):
        if s0 != s1:
            root = find_root_bracketed(f, BracketInterval(t0, t1), tol)
            residual = math.exp(critical_line_function(root).log_modulus)
            found.append((root, residual))
    return found


def find_zeros(t_min, t_max, step=DEFAULT_STEP, tol=DEFAULT_TOL, jobs=1):
    """All critical-line zeros with ordinate in (t_min, t_max).

    Grid sign changes refined by bisection to bracket width tol.  The
    scan is chunked and may run on several workers; the merged result
    is independent of the partition.
    """
    if not (0.0 <= t_min < t_max <= T_MAX):
        raise PreconditionError("need 0 <= t_min < t_max <= %g" % T_MAX)
    if step > 0.5:
        raise PreconditionError("step must be <= 0.5")
    jobs = max(1, int(jobs))
    n_chunks = min(jobs * 4, max(1, int((t_max - t_min) / 5.0)))
    bounds = [t_min + (t_max - t_min) * i / n_chunks for i in range(n_chunks + 1)]
    chunks = list(zip(bounds[:-1], bounds[1:]))
    if jobs == 1:
        results = [_scan_chunk(a, b, step, tol) for a, b in chunks]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(
                lambda ab: _scan_chunk(ab[0], ab[1], step, tol), chunks))
    merged = sorted(r for chunk in results for r in chunk)
    deduped = []
    for root, residual in merged:
        if deduped and abs(root - deduped[-1][0]) < 2.0 * tol:
            continue
        deduped.append((root, residual))
    return [ZetaZero(ordinate=r, residual=res, index=i + 1)
            for i, (r, res) in enumerate(deduped)]


def count_zeros_rectangle(rect, samples_per_side=None, nudge=1e-3):
    """Number of xi zeros (with multiplicity) inside the rectangle,
    by the argument principle.

    If a zero sits on the horizontal boundary at sampling resolution,
    the rectangle is nudged by +-1e-3 in t before giving up.
    """
    if samples_per_side is None:
        per = max(rect.re_max - rect.re_min, rect.im_max - rect.im_min)
        samples_per_side = max(32, int(10.0 * per))
    g = lambda z: xi(z).to_complex()
    for attempt, (dlo, dhi) in enumerate(
            [(0.0, 0.0), (-nudge, nudge), (nudge, -nudge)]):
        r = ContourRectangle(rect.re_min, rect.re_max,
                             rect.im_min + dlo, rect.im_max + dhi)
        try:
            return winding_number(g, r, samples_per_side=samples_per_side)
        except BoundaryZeroError:
            if attempt == 2:
                raise
    raise AssertionError("unreachable")
