"""Exact verification of polynomial identities from classical invariant theory."""

__version__ = "0.1.0"

from ._kernel import BACKEND
from .exactnum import CycloNum, omega
from .polyring import MPoly, RatFunc, get_space
from .identities import catalog, get_entry, run_catalog, verify_expand, verify_random

__all__ = [
    "BACKEND",
    "CycloNum",
    "MPoly",
    "RatFunc",
    "catalog",
    "get_entry",
    "get_space",
    "omega",
    "run_catalog",
    "verify_expand",
    "verify_random",
    "__version__",
]
