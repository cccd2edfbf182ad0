"""Identity catalog and the two verification engines.

Each entry owns a builder ``ctx -> [(label, lhs, rhs), ...]``.  Running the
builder on a symbolic context expands both sides exactly; running it on a
context of random rationals gives a Schwartz-Zippel style spot check.  The
two engines therefore share every line of the identity's transcription.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from .exactnum import CycloNum, omega, sqrt_minus3
from .forms import Context, build, pullback_context, symbolic_context
from .polyring import (
    MPoly,
    RatFunc,
    TermCapExceeded,
    determinant,
    get_space,
    jacobian_det,
    partial_derivative,
)

__all__ = [
    "CheckResult",
    "IdentityEntry",
    "catalog",
    "get_entry",
    "mutate",
    "register",
    "run_catalog",
    "verify_expand",
    "verify_random",
]

RANDOM_BOUND = 10_000
MAX_RETRIES = 50

Pair = tuple[str, object, object]


@dataclass(frozen=True)
class IdentityEntry:
    id: str
    description: str
    space: str
    builder: Callable[[Context], list[Pair]]
    anchor: str
    strategy: str = "expand"
    report_only: bool = False
    heavy: bool = False
    pullback_fallback: bool = False
    info: Callable[[], dict] | None = None

    @property
    def family(self) -> str:
        return self.id.split("-", 1)[0]


@dataclass
class CheckResult:
    id: str
    family: str
    status: str
    elapsed_ms: float
    strategy: str
    anchor: str
    report_only: bool = False
    witness: dict | None = None
    details: dict = field(default_factory=dict)

    def to_json(self, timing: bool = True) -> dict:
        out = {
            "id": self.id,
            "family": self.family,
            "status": self.status,
            "strategy": self.strategy,
            "anchor": self.anchor,
        }
        if timing:
            out["elapsed_ms"] = round(self.elapsed_ms, 3)
        if self.report_only:
            out["report_only"] = True
        if self.witness is not None:
            out["witness"] = self.witness
        if self.details:
            out["details"] = self.details
        return out


_CATALOG: dict[str, IdentityEntry] = {}


def register(entry: IdentityEntry) -> IdentityEntry:
    if entry.id in _CATALOG:
        raise ValueError(f"duplicate catalog id {entry.id}")
    _CATALOG[entry.id] = entry
    return entry


def _entry(id_: str, space: str, anchor: str, description: str = "", **kw):
    def deco(fn):
        register(IdentityEntry(id_, description or (fn.__doc__ or "").strip(), space, fn, anchor, **kw))
        return fn

    return deco


def _load_plugins() -> None:
    from . import elliptic  # noqa: F401  registers the EL entries


def catalog() -> list[IdentityEntry]:
    _load_plugins()
    return list(_CATALOG.values())


def get_entry(id_: str) -> IdentityEntry:
    _load_plugins()
    try:
        return _CATALOG[id_]
    except KeyError:
        raise KeyError(f"unknown catalog id {id_!r}") from None


# ---------------------------------------------------------------------------
# helpers shared by builders


def _is_symbolic(ctx: Context) -> bool:
    return ctx is symbolic_context(ctx.space.id)


@lru_cache(maxsize=None)
def _partial(form: str, var: str) -> MPoly:
    return partial_derivative(build(form), var)


def jacobian(ctx: Context, forms: Sequence[str], variables: Sequence[str]):
    """Jacobian determinant of registered forms, exact or at the context's point."""
    if _is_symbolic(ctx):
        return jacobian_det([build(f) for f in forms], list(variables))
    rows = [[_partial(f, v).eval(ctx.values) for v in variables] for f in forms]
    return determinant(rows)


def _mats(name: str):
    from .groups import get_genset

    return get_genset(name).gens


def _hess():
    from .groups import hessian_matrices

    return hessian_matrices()


def _ind6():
    from .groups import induced6_matrices

    return induced6_matrices()


def _semi_scalar(form: str, genset: str, gen: str):
    from .groups import semi_invariant_scalar

    return semi_invariant_scalar(build(form), _mats(genset)[gen])


_semi_scalar = lru_cache(maxsize=None)(_semi_scalar)


def _hessian_semi(form: str, gen: str):
    from .groups import semi_invariant_scalar

    return semi_invariant_scalar(build(form), _hess()[gen])


_hessian_semi = lru_cache(maxsize=None)(_hessian_semi)


# ---------------------------------------------------------------------------
# Hessian invariants in z

_RES = "resolvents G, H, K of the Hessian invariants"


@_entry("IG-1", "z3", _RES, "cubic resolvent satisfied by G")
def _ig1(c: Context):
    g = c.form("G")
    return [("G", 4 * g**3 + c.form("H") ** 2 * g - c.form("C6") * g - 4 * c.form("C9"), 0)]


@_entry("IG-2", "z3", _RES, "H(H^3+8K^3) = 9 C12")
def _ig2(c: Context):
    h, k = c.form("H"), c.form("K")
    return [("H", h * (h**3 + 8 * k**3), 9 * c.form("C12"))]


@_entry("IG-3", "z3", _RES, "K(K^3-H^3) = 27 FC12")
def _ig3(c: Context):
    h, k = c.form("H"), c.form("K")
    return [("K", k * (k**3 - h**3), 27 * c.form("FC12"))]


@_entry("IG-4", "z3", _RES, "C18 in terms of H and K")
def _ig4(c: Context):
    h, k = c.form("H"), c.form("K")
    return [("C18", c.form("C18"), Fraction(-1, 27) * (h**6 - 20 * h**3 * k**3 - 8 * k**6))]


_SYZ = "syzygies among the Hessian invariants"


@_entry("IG-5", "z3", _SYZ, "432 C9^2 = C6^3 - 3 C6 C12 + 2 C18")
def _ig5(c: Context):
    c6, c12 = c.form("C6"), c.form("C12")
    return [("C9^2", 432 * c.form("C9") ** 2, c6**3 - 3 * c6 * c12 + 2 * c.form("C18"))]


@_entry("IG-6", "z3", _SYZ, "1728 FC12^3 = C18^2 - C12^3")
def _ig6(c: Context):
    return [("FC12^3", 1728 * c.form("FC12") ** 3, c.form("C18") ** 2 - c.form("C12") ** 3)]


@_entry("IG-7", "z3", "relations among the cubic coordinates", "six relations among X, Y, Z, phi, psi, chi, Q1, Q2")
def _ig7(c: Context):
    X, Y, Z, phi, psi, chi = (c.form(n) for n in ("X", "Y", "Z", "phi", "psi", "chi"))
    q1, q2 = c.form("Q1"), c.form("Q2")
    return [
        ("phi^3", phi**3, X * Y * Z),
        ("psi", psi, X + Y + Z),
        ("chi", chi, X * Y + Y * Z + Z * X),
        ("Q1Q2", chi + 3 * phi**2 + phi * psi, q1 * q2),
        ("Q1^3+Q2^3", psi * chi + 6 * phi * chi + 6 * phi**2 * psi + 9 * phi**3, q1**3 + q2**3),
        ("Q1^3-Q2^3", (X - Y) * (Y - Z) * (Z - X), q1**3 - q2**3),
    ]


# ---------------------------------------------------------------------------
# Burkhardt family

_BURK = "invariants of the Burkhardt group"


@_entry("BU-1", "y5", _BURK, "Phi^3 - 64 Psi^3 = t^2")
def _bu1(c: Context):
    return [("t^2", c.form("Phi") ** 3 - 64 * c.form("Psi") ** 3, c.form("t") ** 2)]


@_entry("BU-2", "y5", _BURK, "quadratic and cubic relations for Psi1")
def _bu2(c: Context):
    Phi, Psi, t, u = (c.form(n) for n in ("Phi", "Psi", "t", "u"))
    p1, p2, f3, t3 = (c.form(n) for n in ("Psi1", "Psi2", "Phi3", "t3"))
    return [
        ("Psi1^2", p1**2, 16 * Psi * p2 + u**2 * Phi),
        ("Psi1^3", p1**3, 2 * Phi**2 * f3 - t * t3 - 3 * u**2 * Phi * p1 - u**3 * t),
    ]


_FK_PAIRS = [
    ("u", "u_fk"),
    ("Phi", "Phi_fk"),
    ("Psi", "Psi_fk"),
    ("t", "t_fk"),
    ("Psi1", "Psi1_fk"),
    ("Psi2", "Psi2_fk"),
    ("Phi3", "Phi3_fk"),
    ("t3", "t3_fk"),
]


def _fk_context(c: Context) -> Context:
    return Context("fk4", [c.form("f0"), c.form("f1"), c.form("H_y"), c.form("K_y")])


@_entry("BU-3", "y5", "resolvents in f0, f1, H, K", "Burkhardt invariants rewritten in f0, f1, H, K")
def _bu3(c: Context):
    fk = _fk_context(c)
    return [(name, c.form(name), fk.form(fk_name)) for name, fk_name in _FK_PAIRS]


@_entry("BU-4", "fk4", "duality f0<->H, f1<->K", "swap f0<->H, f1<->K exchanges the resolvents")
def _bu4(c: Context):
    f0, f1, h, k = c.values
    sw = Context("fk4", [h, k, f0, f1])
    hk = Context("hk2", [h, k])
    return [
        ("u", sw.form("u_fk"), c.form("u_fk")),
        ("t3", sw.form("t3_fk"), c.form("t3_fk")),
        ("Phi", sw.form("Phi_fk"), hk.form("C12_hk")),
        ("Psi", sw.form("Psi_fk"), -3 * hk.form("FC12_hk")),
        ("t", sw.form("t_fk"), hk.form("C18_hk")),
        ("Psi1", sw.form("Psi1_fk"), c.form("Phi3_fk")),
    ]


@_entry(
    "BU-5",
    "fks5",
    "rational expressions Z3..Z7 in r2, r3, r4",
    "Z3..Z7 in r4 with sqrt(r2)=H/s, sqrt(r3)=K/s",
    strategy="ratfunc",
    report_only=True,
)
def _bu5(c: Context):
    f0, f1, h, k, s = c.values
    fk = Context("fk4", [f0, f1, h, k])
    Phi, Psi, t, u = (fk.form(n) for n in ("Phi_fk", "Psi_fk", "t_fk", "u_fk"))
    p1, p2, f3, t3 = (fk.form(n) for n in ("Psi1_fk", "Psi2_fk", "Phi3_fk", "t3_fk"))
    z3 = Phi**3 / (64 * Psi**3)
    z4 = p1**2 / (16 * Psi * p2)
    z5 = 2 * Phi * f3 / (3 * u**2 * p1)
    z6 = p1**2 / (3 * u**2 * Phi)
    z7 = u * t / (3 * Phi * p1)
    r4 = f1 / f0
    a, b = h / s, k / s  # sqrt(r2), sqrt(r3)
    r2, r3 = a * a, b * b
    lin = (1 - 4 * r4**3) * a - 6 * r4 * b
    plus = a + 2 * r4 * b
    e8 = 1 + 8 * r4**3
    return [
        ("t^2/64Psi^3", t**2 / (64 * Psi**3), z3 - 1),
        ("u^2Phi/16PsiPsi2", u**2 * Phi / (16 * Psi * p2), z4 - 1),
        ("tt3/3u^2PhiPsi1", t * t3 / (3 * u**2 * Phi * p1), z5 - z6 - z7 - 1),
        ("Z3", z3, Fraction(1, 64) * e8**3 / (r4**3 * (1 - r4**3) ** 3)),
        ("Z4", z4, Fraction(-1, 16) * lin**2 / (r4 * (1 - r4**3) * (a * b - 2 * r4 * r3 + r4**2 * r2))),
        ("Z5", z5, Fraction(2, 3) * e8 * (r2 * a - 4 * r3 * b - 6 * r4 * r2 * b) / (plus**2 * lin)),
        ("Z6", z6, Fraction(1, 3) * lin**2 / (plus**2 * e8)),
        ("Z7", z7, Fraction(-1, 3) * plus * (1 - 20 * r4**3 - 8 * r4**6) / (e8 * lin)),
    ]


@_entry("BU-6", "y5", "f0, f1 under B and C", "f0, f1 composed with the 5x5 B and C")
def _bu6(c: Context):
    g = _mats("burkhardt")
    s = sqrt_minus3()
    f0, f1 = c.form("f0"), c.form("f1")
    cb, cc = c.transform(g["B"]), c.transform(g["C"])
    return [
        ("f0 B", s * cb.form("f0"), f0 + 2 * f1),
        ("f1 B", s * cb.form("f1"), f0 - f1),
        ("f0 C", cc.form("f0"), f0),
        ("f1 C", cc.form("f1"), f1),
    ]


def _j_invariance(jname: str, gen: str):
    def fn(c: Context):
        lam = _semi_scalar(jname, "burkhardt", gen)
        scale = 1 if lam is None else lam
        return [(f"{jname} {gen}", c.transform(_mats("burkhardt")[gen]).form(jname), scale * c.form(jname))]

    def info():
        lam = _semi_scalar(jname, "burkhardt", gen)
        return {"scalar": None if lam is None else str(lam)}

    return fn, info


for _j in ("J4", "J6", "J10", "J12", "J18"):
    for _g in ("B", "C", "D", "S2"):
        _fn, _info = _j_invariance(_j, _g)
        register(
            IdentityEntry(
                f"JI-{_j}-{_g}",
                f"{_j} is semi-invariant under {_g}",
                "y5",
                _fn,
                "J-invariants of the Burkhardt group",
                report_only=True,
                heavy=_j in ("J12", "J18"),
                info=_info,
            )
        )


# ---------------------------------------------------------------------------
# six-variable identities

_W6 = "relations among the six-variable invariants"


@_entry("W-1", "w6", _W6, "W2^3 - 3 W2 W4 + 2 W6 = 432 W3^2")
def _w1(c: Context):
    w2, w4 = c.form("W2"), c.form("W4")
    return [("W3^2", w2**3 - 3 * w2 * w4 + 2 * c.form("W6"), 432 * c.form("W3") ** 2)]


@_entry("W-2", "w6", _W6, "W6^2 - W4^3 - 1728 FW4^3 = 1728 FW3 (27XYZ - U^3)^3")
def _w2(c: Context):
    u, v = c.form("U"), c.form("V")
    lhs = c.form("W6") ** 2 - c.form("W4") ** 3 - 1728 * c.form("FW4") ** 3
    return [("FW3", lhs, 1728 * c.form("FW3") * (27 * v - u**3) ** 3)]


@_entry("W-3", "w6", _W6, "27U^8 - 18 W4 U^4 - 8 W6 U^2 - W4^2 = 0")
def _w3(c: Context):
    u, w4 = c.form("U"), c.form("W4")
    return [("U", 27 * u**8 - 18 * w4 * u**4 - 8 * c.form("W6") * u**2 - w4**2, 0)]


@_entry("W-4", "w6", _W6, "8U^3 (W6^2 - W4^3 - 1728 FW4^3) = 27 FW3 (W4 - 9U^4)^3")
def _w4(c: Context):
    u, w4 = c.form("U"), c.form("W4")
    lhs = 8 * u**3 * (c.form("W6") ** 2 - w4**3 - 1728 * c.form("FW4") ** 3)
    return [("U^3", lhs, 27 * c.form("FW3") * (w4 - 9 * u**4) ** 3)]


_DIFF = "differential relations of the six-variable invariants"


@_entry("W-5", "w6", _DIFF, "d(W2,W3,W4,FW3)/d(X,Y,Z,phi) = 288 FW4^2")
def _w5(c: Context):
    jac = jacobian(c, ("W2", "W3", "W4", "FW3"), ("X", "Y", "Z", "phi"))
    return [("jac4", jac, 288 * c.form("FW4") ** 2)]


@_entry("W-6", "w6", _DIFF, "d(FV3,FV2)/d(Q1,Q2) = 3(FU3 + W3)")
def _w6(c: Context):
    jac = jacobian(c, ("FV3", "FV2"), ("Q1", "Q2"))
    return [("jac2", jac, 3 * (c.form("FU3") + c.form("W3")))]


def _main_pr(c: Context):
    y, z = c.form("y"), c.form("z")
    p = 9 * c.form("W4") - y * (y**3 + 8 * z**3)
    r = 27 * c.form("FW4") - z * (z**3 - y**3)
    return p, r


_MAIN = "three equations satisfied by x, y, z"


@_entry("W-7", "w6", _MAIN, "first equation in x, y, z", heavy=True, pullback_fallback=True)
def _w7(c: Context):
    x, y = c.form("x"), c.form("y")
    fw3, fv2, fu3, w2, w3 = (c.form(n) for n in ("FW3", "FV2", "FU3", "W2", "W3"))
    p, r = _main_pr(c)
    tt = 4 * fu3 - 4 * x**3 - x * y**2 + w2 * x + 4 * w3
    brace = (
        2**8 * 3**11 * fw3**2 * fv2
        + (p**2 - 2**6 * 3**10 * w2 * fw3**2)
        + 2**5 * r * p
        + 2**8 * r**2
    )
    lhs = 2**4 * 3**8 * fw3**2 * tt**3
    rhs = 2**10 * 3**11 * fw3**2 * fv2**3 * (fu3 + w3) - tt * fv2**2 * brace
    return [("eq1", lhs, rhs)]


@_entry("W-8", "w6", _MAIN, "second equation in x, y, z", heavy=True, pullback_fallback=True)
def _w8(c: Context):
    fw3 = c.form("FW3")
    p, r = _main_pr(c)
    lhs = p**4 + 2**12 * p * (3**18 * fw3**4 + r**3)
    return [("eq2", lhs, 2**12 * 3**20 * fw3**4 * c.form("W4"))]


@_entry("W-9", "w6", _MAIN, "third equation in x, y, z", heavy=True, pullback_fallback=True)
def _w9(c: Context):
    fw3 = c.form("FW3")
    p, r = _main_pr(c)
    q = 3**18 * fw3**4 + r**3
    lhs = p**6 - 2**11 * 5 * p**3 * q - 2**21 * q**2
    return [("eq3", lhs, 2**18 * 3**30 * fw3**6 * c.form("W6"))]


@_entry("W-10", "z3", "pullback of the six-variable invariants to z", "pullbacks of W2, W3, W4, FW4, W6")
def _w10(c: Context):
    pc = pullback_context(c)
    return [
        ("W2", pc.form("W2"), c.form("C6")),
        ("W3", pc.form("W3"), c.form("C9")),
        ("W4", pc.form("W4"), c.form("C12")),
        ("FW4", pc.form("FW4"), c.form("FC12")),
        ("W6", pc.form("W6"), c.form("C18")),
    ]


@_entry(
    "W-11",
    "w6",
    "single relation among W2, W3, W4, FW4",
    "6912 FW4^3 as a polynomial in W2, W3, W4",
    strategy="expand-after-pullback",
)
def _w11(c: Context):
    w2, w3, w4 = c.form("W2"), c.form("W3"), c.form("W4")
    rhs = (
        w2**6
        + 9 * w2**2 * w4**2
        + 432**2 * w3**4
        - 4 * w4**3
        - 6 * w2**4 * w4
        - 864 * w2**3 * w3**2
        + 2592 * w2 * w3**2 * w4
    )
    return [("FW4^3", 6912 * c.form("FW4") ** 3, rhs)]


# ---------------------------------------------------------------------------
# icosahedral family

_ICO = "icosahedral invariants and the Brioschi resolvent"


@_entry("KL-1", "a3", _ICO, "D^2 as a polynomial in A, B, C")
def _kl1(c: Context):
    a, b, cc, d = (c.form(n) for n in ("KA", "KB", "KC", "KD"))
    rhs = (
        -1728 * b**5
        + cc**3
        + 720 * a * cc * b**3
        - 80 * a**2 * cc**2 * b
        + 64 * a**3 * (5 * b**2 - a * cc) ** 2
    )
    return [("D^2", d**2, rhs)]


@_entry("KL-2", "a3", _ICO, "d(A,B,C)/d(A0,A1,A2) = -10 D")
def _kl2(c: Context):
    return [("jac", jacobian(c, ("KA", "KB", "KC"), ("A0", "A1", "A2")), -10 * c.form("KD"))]


@_entry("KL-3", "a3", _ICO, "each x_nu is a root of the Brioschi quintic")
def _kl3(c: Context):
    a, b, cc, d = (c.form(n) for n in ("KA", "KB", "KC", "KD"))
    out = []
    for nu in range(5):
        x = c.form(f"x_nu{nu}")
        out.append((f"x_nu{nu}", x**5 + 10 * b * x**3 + 5 * (9 * b**2 - a * cc) * x - d, 0))
    return out


@_entry("KL-4", "a3", _ICO, "sum of delta_nu and of their cubes vanish")
def _kl4(c: Context):
    ds = [c.form(f"delta{nu}") for nu in range(5)]
    return [("sum", sum(ds), 0), ("sum of cubes", sum(d**3 for d in ds), 0)]


_KL5_TABLE = {
    "S": {0: 1, 1: 2, 2: 3, 3: 4, 4: 0},
    "U": {0: 0, 1: 4, 2: 3, 3: 2, 4: 1},
    "T": {0: 0},
}


@_entry("KL-5", "a3", _ICO, "delta_nu permuted by S, U and fixed by T")
def _kl5(c: Context):
    g = _mats("icosahedral")
    out = []
    for gen, table in _KL5_TABLE.items():
        moved = c.transform(g[gen])
        for src, dst in table.items():
            out.append((f"{gen}(delta{src})", moved.form(f"delta{src}"), c.form(f"delta{dst}")))
    return out


# ---------------------------------------------------------------------------
# weight enumerators of codes

_CW = "code weight enumerators and Hessian invariants"


@_entry("CW-1", "z3", _CW, "beta6, pi9, alpha12 at (x,y,z) = (z1,z2,z3)")
def _cw1(c: Context):
    d = Context("xyz3", c.values)
    return [
        ("beta6", d.form("beta6"), c.form("C6")),
        ("pi9", d.form("pi9"), c.form("C9")),
        ("alpha12", d.form("alpha12"), c.form("C12")),
    ]


@_entry("CW-2", "z3", _CW, "psi4 and xi12 at (x,y) = (H,K)")
def _cw2(c: Context):
    d = Context("hk2", [c.form("H"), c.form("K")])
    return [
        ("psi4", d.form("psi4"), 9 * c.form("C12")),
        ("xi12", d.form("xi12"), -(27**3) * c.form("FC12") ** 3),
    ]


def _invariance(c: Context, genset: str, gens: Iterable[str], forms: Iterable[str], words=None):
    from .groups import get_genset

    gs = get_genset(genset)
    out = []
    for gen in gens:
        mat = gs.word(gen) if words else gs.gens[gen]
        moved = c.transform(mat)
        for f in forms:
            out.append((f"{f} {gen}", moved.form(f), c.form(f)))
    return out


@_entry("CW-3", "hk2", _CW, "psi4 and k6 invariant under M3 and N3")
def _cw3(c: Context):
    return _invariance(c, "g3", ("M3", "N3"), ("psi4", "k6"))


@_entry("CW-4", "hk2", _CW, "psi8, nu24 under H2 and k12 under G2")
def _cw4(c: Context):
    out = _invariance(c, "h2", ("M2", "N2"), ("psi8", "nu24"))
    # G2 is the kernel of the character M2 -> -1, N2 -> 1; N2 and M2 N2 M2 generate it.
    out += _invariance(c, "h2", ("N2", "M2N2M2"), ("k12",), words=True)
    return out


def _cw4_info():
    from .groups import semi_invariant_scalar

    lam = semi_invariant_scalar(build("k12"), _mats("h2")["M2"])
    return {"k12_under_M2": None if lam is None else str(lam)}


_CATALOG["CW-4"] = replace(_CATALOG["CW-4"], info=_cw4_info)


@_entry("CW-5", "hk2", _CW, "C12 and C18 in (H,K) invariant under M3 and N3")
def _cw5(c: Context):
    return _invariance(c, "g3", ("M3", "N3"), ("C12_hk", "C18_hk"))


def _cw_signs():
    from .groups import semi_invariant_scalar

    m3 = _mats("g3")["M3"]
    return {f: str(semi_invariant_scalar(build(f), m3)) for f in ("k6", "C18_hk")}


for _cid in ("CW-3", "CW-5"):
    _CATALOG[_cid] = replace(_CATALOG[_cid], info=_cw_signs)


# ---------------------------------------------------------------------------
# g-map and the cubic surface

_GMAP = "the map from the plane to the cubic surface"
_G = [f"g{i}" for i in range(1, 7)]


@_entry("GM-1", "z3", _GMAP, "g1+g2+g3 = 0 and g4+g5+g6 = 0")
def _gm1(c: Context):
    g = [c.form(n) for n in _G]
    return [("g123", g[0] + g[1] + g[2], 0), ("g456", g[3] + g[4] + g[5], 0)]


@_entry("GM-2", "z3", _GMAP, "sums of cubes equal 3 C9")
def _gm2(c: Context):
    g = [c.form(n) for n in _G]
    c9 = 3 * c.form("C9")
    return [("g123^3", sum(x**3 for x in g[:3]), c9), ("g456^3", sum(x**3 for x in g[3:]), c9)]


# image of g_i under each generator: (sign, index)
GMAP_TABLES: dict[str, list[tuple[int, int]]] = {
    "E": [(1, 4), (1, 6), (1, 5), (1, 1), (1, 2), (1, 3)],
    "A": [(1, 3), (1, 1), (1, 2), (1, 4), (1, 5), (1, 6)],
    "B": [(-1, 1), (-1, 3), (-1, 2), (-1, 4), (-1, 6), (-1, 5)],
    "C": [(1, 1), (1, 2), (1, 3), (1, 5), (1, 6), (1, 4)],
}


@_entry("GM-3", "z3", _GMAP, "g-transformation tables for E, A, B, C")
def _gm3(c: Context):
    mats = _hess()
    out = []
    for gen, table in GMAP_TABLES.items():
        moved = c.transform(mats[gen])
        for i, (sign, j) in enumerate(table, start=1):
            out.append((f"{gen}(g{i})", moved.form(f"g{i}"), sign * c.form(f"g{j}")))
    return out


HEX_HESSIAN_CONSTANT = 16


@_entry("GM-4", "x4", "Hessian of the hexahedral cubic", "Hessian determinant is 16 times four planes")
def _gm4(c: Context):
    return [("hessian", c.form("S_hex_hessian"), HEX_HESSIAN_CONSTANT * c.form("S_hex_planes"))]


_BASIC6 = ("X", "Y", "Z", "phi", "Q1", "Q2")


@_entry("GM-5", "z3", "induced 6x6 actions", "basic cubics composed with A, B, C, E follow the 6x6 matrices")
def _gm5(c: Context):
    m3, m6 = _hess(), _ind6()
    base = [c.form(n) for n in _BASIC6]
    out = []
    for gen in ("A", "B", "C", "E"):
        moved = c.transform(m3[gen])
        rows = m6[gen].rows()
        for i, name in enumerate(_BASIC6):
            rhs = 0
            for coef, val in zip(rows[i], base):
                if coef:
                    rhs = rhs + coef * val
            out.append((f"{gen}({name})", moved.form(name), rhs))
    return out


_GM6_FORMS = {"W2": "C6", "W3": "C9", "W4": "C12", "FW4": "FC12", "W6": "C18"}
_GM6_EXPECTED = {("W3", "B"): -1}


def _c9_sign():
    return _hessian_semi("C9", "E")


@_entry("GM-6", "z3", "transformation scalars pulled back to z", "pulled-back invariants under A, B, C, E")
def _gm6(c: Context):
    mats = _hess()
    out = []
    for gen in ("A", "B", "C", "E"):
        moved = pullback_context(c.transform(mats[gen]))
        here = pullback_context(c)
        for w in ("W2", "W3", "W4", "W6"):
            lam = _GM6_EXPECTED.get((w, gen), 1)
            if (w, gen) == ("W3", "E"):
                lam = _c9_sign() or 1
            out.append((f"{w} {gen}", moved.form(w), lam * here.form(w)))
    return out


_CATALOG["GM-6"] = replace(_CATALOG["GM-6"], info=lambda: {"C9_under_E": str(_c9_sign())})


@_entry("GM-6w", "w6", "transformation scalars in six variables", "6x6 A, B, C on W2, W3, FW3, FV3, FV2")
def _gm6w(c: Context):
    m6 = _ind6()
    out = []
    for gen in ("A", "B", "C"):
        moved = c.transform(m6[gen])
        for f in ("W2", "W3", "W4", "FW3", "FV3", "FV2"):
            sign = -1 if (f, gen) == ("W3", "B") else 1
            out.append((f"{f} {gen}", moved.form(f), sign * c.form(f)))
    return out


# ---------------------------------------------------------------------------
# engines


def _zero(x) -> bool:
    if isinstance(x, (MPoly, RatFunc)):
        return x.is_zero()
    return x == 0


def _diff(lhs, rhs):
    return lhs - rhs


def _summarize(d) -> dict:
    if isinstance(d, MPoly):
        text = d.to_text()
        return {"terms": d.num_terms(), "leading": text[:200]}
    if isinstance(d, RatFunc):
        return {"numerator_terms": d.num.num_terms(), "numerator": d.num.to_text()[:200]}
    return {"value": str(d)}


def _symbolic_ctx(entry: IdentityEntry, level: str) -> Context:
    if level == "pullback":
        return pullback_context(symbolic_context("z3"))
    return symbolic_context(entry.space)


def _expand_at(entry: IdentityEntry, level: str) -> tuple[bool, dict | None]:
    ctx = _symbolic_ctx(entry, level)
    for label, lhs, rhs in entry.builder(ctx):
        d = _diff(lhs, rhs)
        if not _zero(d):
            return False, {"equation": label, **_summarize(d)}
    return True, None


def _base_details(entry: IdentityEntry) -> dict:
    if entry.info is None:
        return {}
    try:
        return entry.info()
    except TermCapExceeded as exc:  # pragma: no cover - diagnostics only
        return {"info_error": str(exc)}


def verify_expand(id_or_entry) -> CheckResult:
    """Expand LHS - RHS canonically; pass iff every equation is identically zero."""
    entry = id_or_entry if isinstance(id_or_entry, IdentityEntry) else get_entry(id_or_entry)
    t0 = time.perf_counter()
    details: dict = {}
    status, witness = "pass", None
    try:
        if entry.strategy == "expand-after-pullback":
            ok, witness = _expand_at(entry, "pullback")
            details["level"] = "pullback"
        else:
            ok, witness = _expand_at(entry, entry.space)
            details["level"] = entry.space
            if not ok and entry.pullback_fallback:
                details["independent_witness"] = witness
                ok, witness = _expand_at(entry, "pullback")
                details["level"] = "pullback"
        status = "pass" if ok else "fail"
        details.update(_base_details(entry))
    except TermCapExceeded as exc:
        status, witness = "skipped", {"reason": str(exc)}
    return CheckResult(
        entry.id,
        entry.family,
        status,
        (time.perf_counter() - t0) * 1000,
        entry.strategy,
        entry.anchor,
        entry.report_only,
        witness,
        details,
    )


def _random_point(rng: random.Random, n: int) -> list[Fraction]:
    return [Fraction(rng.randint(-RANDOM_BOUND, RANDOM_BOUND), rng.randint(1, RANDOM_BOUND)) for _ in range(n)]


def _numeric_ctx(entry: IdentityEntry, level: str, rng: random.Random) -> Context:
    if level == "pullback":
        return pullback_context(Context("z3", _random_point(rng, 3)))
    space = get_space(entry.space)
    return Context(space, _random_point(rng, space.nvars))


def _random_at(entry: IdentityEntry, level: str, count: int, rng: random.Random):
    for _ in range(count):
        for attempt in range(MAX_RETRIES):
            ctx = _numeric_ctx(entry, level, rng)
            try:
                pairs = entry.builder(ctx)
                diffs = [(label, _diff(lhs, rhs)) for label, lhs, rhs in pairs]
            except ZeroDivisionError:
                continue
            break
        else:
            raise RuntimeError(f"{entry.id}: no admissible point after {MAX_RETRIES} retries")
        for label, d in diffs:
            if not _zero(d):
                point = [str(v) for v in (ctx.origin or ctx.values)]
                return False, {"equation": label, "point": point, "difference": str(d)[:200]}
    return True, None


def verify_random(id_or_entry, count: int = 10, seed: int = 0) -> CheckResult:
    """Evaluate both sides at ``count`` random rational points."""
    entry = id_or_entry if isinstance(id_or_entry, IdentityEntry) else get_entry(id_or_entry)
    rng = random.Random(f"{seed}:{entry.id}")
    t0 = time.perf_counter()
    details: dict = {"points": count, "seed": seed}
    if entry.strategy == "expand-after-pullback":
        level = "pullback"
        ok, witness = _random_at(entry, level, count, rng)
    else:
        level = entry.space
        ok, witness = _random_at(entry, level, count, rng)
        if not ok and entry.pullback_fallback:
            details["independent_witness"] = witness
            level = "pullback"
            ok, witness = _random_at(entry, level, count, rng)
    details["level"] = level
    return CheckResult(
        entry.id,
        entry.family,
        "pass" if ok else "fail",
        (time.perf_counter() - t0) * 1000,
        entry.strategy,
        entry.anchor,
        entry.report_only,
        witness,
        details,
    )


def _matches(entry: IdentityEntry, filt: str) -> bool:
    if filt == "all":
        return True
    return entry.id == filt or entry.id.startswith(filt + "-") or entry.family == filt


def select(filt: str = "all", include_heavy: bool = True) -> list[IdentityEntry]:
    return [e for e in catalog() if _matches(e, filt) and (include_heavy or not e.heavy)]


def run_catalog(filt: str = "all", method: str = "expand", seed: int = 0, count: int = 10, include_heavy: bool = True) -> list[CheckResult]:
    """Run every matching entry; results come back in catalog order."""
    out = []
    for entry in select(filt, include_heavy):
        if method == "random":
            out.append(verify_random(entry, count, seed))
        else:
            out.append(verify_expand(entry))
    return out


# ---------------------------------------------------------------------------
# mutation testing


def _monomial_value(values: Sequence, exps: Sequence[int]):
    acc = 1
    for v, e in zip(values, exps):
        if e:
            acc = acc * v**e
    return acc


def mutate(entry: IdentityEntry, rng: random.Random) -> tuple[IdentityEntry, dict]:
    """Raise one expanded coefficient of one left-hand side by 1."""
    pairs = entry.builder(symbolic_context(entry.space)) if entry.strategy != "expand-after-pullback" else None
    if pairs is None:
        pairs = entry.builder(_symbolic_ctx(entry, "pullback"))
    idx = rng.randrange(len(pairs))
    label, lhs, rhs = pairs[idx]
    side = lhs if isinstance(lhs, MPoly) and lhs.terms else rhs
    exps = None
    if isinstance(side, MPoly) and side.terms:
        monos = sorted(side.coefficients())
        exps = monos[rng.randrange(len(monos))]
    level_z = entry.strategy == "expand-after-pullback"

    def builder(ctx: Context):
        out = list(entry.builder(ctx))
        lab, l, r = out[idx]
        if exps is None:
            bump = 1
        else:
            vals = ctx.values
            if level_z:
                vals = _z_values(ctx)
            bump = _monomial_value(vals, exps)
        out[idx] = (lab, l + bump, r)
        return out

    mutant = replace(entry, id=entry.id + "~mut", builder=builder, pullback_fallback=False, info=None)
    return mutant, {"equation": label, "monomial": None if exps is None else list(exps)}


def _z_values(ctx: Context):
    return ctx.origin if ctx.origin is not None else ctx.values
