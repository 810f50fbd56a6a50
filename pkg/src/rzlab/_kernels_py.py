"""Pure-Python (numpy) fallback for the hot Euler-Maclaurin kernel.

Same API as the compiled ``_kernels`` extension; selected by
``rzlab._backend`` when the extension is unavailable or disabled.
"""

import math

import numpy as np

BACKEND = "python"

# B_2 .. B_12
_BERNOULLI = (1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66, -691.0 / 2730)


def zeta_em(sigma, t, n):
    """Euler-Maclaurin value of zeta(sigma + i t) with n initial terms.

    Valid for sigma > -1 once n >= max(20, 2|t|); correction terms run
    through B_12.  Callers handle reflection and the s = 1 pole.
    """
    s = complex(sigma, t)
    k = np.arange(1, n, dtype=float)
    total = np.sum(k ** (-s))
    total += 0.5 * n ** (-s)
    total += n ** (1.0 - s) / (s - 1.0)
    fac = s * n ** (-s - 1.0)
    n2 = float(n) * float(n)
    for i, b in enumerate(_BERNOULLI):
        twok = 2 * (i + 1)
        total += b / math.factorial(twok) * fac
        fac *= (s + twok - 1.0) * (s + twok) / n2
    return complex(total)
