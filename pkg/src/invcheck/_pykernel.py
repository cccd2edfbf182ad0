"""Pure-Python sparse term kernels.

Terms are dicts mapping a packed monomial key (int) to an integer coefficient.
The compiled module ``_ckernel`` exports the same functions.
"""


class TermCapExceeded(MemoryError):
    """An expansion grew past the configured term cap."""


def mul_terms(a: dict, b: dict, cap: int) -> dict:
    """Product of two term dicts; zero coefficients are dropped."""
    if len(a) < len(b):
        a, b = b, a
    out: dict = {}
    get = out.get
    b_items = list(b.items())
    for ka, ca in a.items():
        for kb, cb in b_items:
            k = ka + kb
            out[k] = get(k, 0) + ca * cb
        if len(out) > cap:
            raise TermCapExceeded(f"expansion exceeded {cap} terms")
    return {k: v for k, v in out.items() if v}


def combine(a: dict, sa: int, b: dict, sb: int) -> dict:
    """sa*a + sb*b with zero coefficients dropped."""
    if sa == 1:
        out = dict(a)
    else:
        out = {k: v * sa for k, v in a.items()}
    get = out.get
    for k, v in b.items():
        out[k] = get(k, 0) + v * sb
    return {k: v for k, v in out.items() if v}


def reduce_zeta(terms: dict, phi: int, mask: int, table) -> dict:
    """Rewrite zeta exponents >= phi (stored in the low bits) with ``table``."""
    out: dict = {}
    get = out.get
    for k, c in terms.items():
        e = k & mask
        if e < phi:
            out[k] = get(k, 0) + c
        else:
            base = k - e
            for j, t in enumerate(table[e]):
                if t:
                    kk = base + j
                    out[kk] = get(kk, 0) + c * t
    return {k: v for k, v in out.items() if v}
