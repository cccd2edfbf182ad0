"""Selects the compiled term kernel when available, else the pure-Python one.

Set ``INVCHECK_PURE_PYTHON=1`` to force the fallback.
"""

import os

from ._pykernel import TermCapExceeded

BACKEND = "python"

if os.environ.get("INVCHECK_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from ._ckernel import combine, mul_terms, reduce_zeta

        BACKEND = "cython"
    except ImportError:
        pass

if BACKEND == "python":
    from ._pykernel import combine, mul_terms, reduce_zeta

__all__ = ["BACKEND", "TermCapExceeded", "combine", "mul_terms", "reduce_zeta"]
