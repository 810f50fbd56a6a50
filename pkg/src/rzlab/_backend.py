"""Select the compiled Euler-Maclaurin kernel or the pure-Python fallback.

Set ``RZLAB_PURE_PYTHON=1`` to force the fallback (useful for the
benchmark in ``benchmarks/bench_zeta.py`` and for debugging).
"""

import os

if os.environ.get("RZLAB_PURE_PYTHON"):
    from . import _kernels_py as kernels
else:
    try:
        from . import _kernels as kernels  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as kernels

zeta_em = kernels.zeta_em
backend_name = kernels.BACKEND
