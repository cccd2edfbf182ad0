"""Weierstrass curves over exact fields and the elliptic-curve check battery.

Field elements may be ints, Fractions, CycloNums, MPolys or RatFuncs.  A
polynomial coefficient is promoted to a RatFunc on entry so that the group
law can divide freely; everything else is plain Python arithmetic.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exactnum import omega
from .forms import Context, symbolic_context
from .identities import IdentityEntry, register
from .polyring import MPoly, RatFunc, divide_exact, get_space, register_space

__all__ = [
    "CurvePoint",
    "INF",
    "LongCurve",
    "NotMultiplicative",
    "ShortCurve",
    "SingularCurve",
    "curve_E",
    "curve_E2t",
    "deuring",
    "hauptmodul_check",
    "hessian_family_checks",
    "hessian_j",
    "j_and_disc",
    "j_correspondence_check",
    "kodaira_In_check",
    "lutz_nagell_test",
    "named_curve",
    "rationality_criterion_check",
    "scalar_mul",
]

register_space("abu3", ("A", "B", "u"))


class SingularCurve(ArithmeticError):
    pass


class NotMultiplicative(ArithmeticError):
    pass


def is_zero(x) -> bool:
    if isinstance(x, (MPoly, RatFunc)):
        return x.is_zero()
    return x == 0


def _lift(x):
    if isinstance(x, MPoly):
        return RatFunc(x, normalize=False)
    if isinstance(x, int):
        return Fraction(x)
    return x


def _is_integer(x) -> bool:
    if isinstance(x, int):
        return True
    return isinstance(x, Fraction) and x.denominator == 1


@dataclass(frozen=True)
class CurvePoint:
    x: object = None
    y: object = None

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __repr__(self):
        return "O" if self.is_infinity else f"({self.x}, {self.y})"


INF = CurvePoint()


class LongCurve:
    """y² + a1·xy + a3·y = x³ + a2·x² + a4·x + a6."""

    def __init__(self, a1=0, a2=0, a3=0, a4=0, a6=0, check: bool = True):
        self.a = tuple(_lift(c) for c in (a1, a2, a3, a4, a6))
        if check and is_zero(self.disc):
            raise SingularCurve("discriminant vanishes")

    a1 = property(lambda s: s.a[0])
    a2 = property(lambda s: s.a[1])
    a3 = property(lambda s: s.a[2])
    a4 = property(lambda s: s.a[3])
    a6 = property(lambda s: s.a[4])

    @property
    def b2(self):
        return self.a1 * self.a1 + 4 * self.a2

    @property
    def b4(self):
        return 2 * self.a4 + self.a1 * self.a3

    @property
    def b6(self):
        return self.a3 * self.a3 + 4 * self.a6

    @property
    def b8(self):
        a1, a2, a3, a4, a6 = self.a
        return a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4

    @property
    def c4(self):
        return self.b2 * self.b2 - 24 * self.b4

    @property
    def c6(self):
        return -(self.b2**3) + 36 * self.b2 * self.b4 - 216 * self.b6

    @property
    def disc(self):
        b2, b4, b6, b8 = self.b2, self.b4, self.b6, self.b8
        return -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    @property
    def j(self):
        d = self.disc
        if is_zero(d):
            raise SingularCurve("discriminant vanishes")
        return _lift(self.c4**3) / _lift(d)

    def point(self, x, y, check: bool = True) -> CurvePoint:
        p = CurvePoint(_lift(x), _lift(y))
        if check and not self.contains(p):
            raise ValueError(f"{p} is not on the curve")
        return p

    def equation(self, p: CurvePoint):
        a1, a2, a3, a4, a6 = self.a
        x, y = p.x, p.y
        return y * y + a1 * x * y + a3 * y - (x**3 + a2 * x * x + a4 * x + a6)

    def contains(self, p: CurvePoint) -> bool:
        return p.is_infinity or is_zero(self.equation(p))

    def neg(self, p: CurvePoint) -> CurvePoint:
        if p.is_infinity:
            return p
        return CurvePoint(p.x, -p.y - self.a1 * p.x - self.a3)

    def add(self, p: CurvePoint, q: CurvePoint) -> CurvePoint:
        if p.is_infinity:
            return q
        if q.is_infinity:
            return p
        a1, a2, a3, a4, a6 = self.a
        # plain ints would divide to floats
        p, q = CurvePoint(_lift(p.x), _lift(p.y)), CurvePoint(_lift(q.x), _lift(q.y))
        if is_zero(p.x - q.x):
            if is_zero(p.y + q.y + a1 * q.x + a3):
                return INF
            den = 2 * p.y + a1 * p.x + a3
            lam = (3 * p.x * p.x + 2 * a2 * p.x + a4 - a1 * p.y) / den
            nu = (-(p.x**3) + a4 * p.x + 2 * a6 - a3 * p.y) / den
        else:
            den = q.x - p.x
            lam = (q.y - p.y) / den
            nu = (p.y * q.x - q.y * p.x) / den
        x3 = lam * lam + a1 * lam - a2 - p.x - q.x
        y3 = -(lam + a1) * x3 - nu - a3
        return CurvePoint(x3, y3)

    def mul(self, m: int, p: CurvePoint) -> CurvePoint:
        return scalar_mul(self, m, p)

    def __repr__(self):
        return f"LongCurve{tuple(str(c) for c in self.a)}"


class ShortCurve(LongCurve):
    """y² = x³ + A·x + B."""

    def __init__(self, A, B, check: bool = True):
        super().__init__(0, 0, 0, A, B, check=check)

    @property
    def A(self):
        return self.a4

    @property
    def B(self):
        return self.a6

    def __repr__(self):
        return f"ShortCurve(A={self.A}, B={self.B})"


def scalar_mul(curve: LongCurve, m: int, p: CurvePoint) -> CurvePoint:
    """Double-and-add; negative m goes through the inverse."""
    if m < 0:
        return scalar_mul(curve, -m, curve.neg(p))
    acc, base = INF, p
    while m:
        if m & 1:
            acc = curve.add(acc, base)
        m >>= 1
        if m:
            base = curve.add(base, base)
    return acc


def j_and_disc(curve: LongCurve):
    return curve.j, curve.disc


# ---------------------------------------------------------------------------
# named curves


def curve_E(ctx: Context) -> tuple[ShortCurve, CurvePoint]:
    """E: y² = x³ − 27·C12·x + 54·C18 with its point (3·C6, 108·C9)."""
    e = ShortCurve(-27 * ctx.form("C12"), 54 * ctx.form("C18"), check=False)
    return e, CurvePoint(_lift(3 * ctx.form("C6")), _lift(108 * ctx.form("C9")))


def curve_E2t(t) -> tuple[ShortCurve, CurvePoint]:
    t3 = t**3
    e = ShortCurve(-3 * t * (t3 + 8), -2 * (t3 * t3 - 20 * t3 - 8), check=False)
    return e, CurvePoint(_lift(3 * t * t), _lift(4 * (t3 - 1)))


def deuring(alpha) -> LongCurve:
    """y² + α·xy + y = x³."""
    return LongCurve(alpha, 0, 1, 0, 0, check=False)


def hessian_j(mu):
    """j of the plane cubic u³ + v³ + w³ = 3μ·uvw."""
    m3 = mu**3
    return _lift(27 * m3 * (m3 + 8) ** 3) / _lift((m3 - 1) ** 3)


def hauptmodul_j(rho):
    num = rho**3 * (rho + 6) ** 3 * (rho * rho - 6 * rho + 36) ** 3
    den = (rho - 3) ** 3 * (rho * rho + 3 * rho + 9) ** 3
    return _lift(num) / _lift(den)


def j1(r):
    return _lift(27 * (r + 1) * (9 * r + 1) ** 3) / _lift(r)


def j2(r):
    return _lift(27 * (r + 1) * (r + 9) ** 3) / _lift(r**3)


def _t():
    return get_space("t1").gen("t")


def named_curve(which: str, at: Sequence | None = None):
    """Curve and marked point (or None) for the CLI.

    ``at`` specializes the parameter: three z-values for E, one value of t, α
    or μ for the one-parameter families.
    """
    if which == "E":
        ctx = Context("z3", list(at)) if at else symbolic_context("z3")
        return curve_E(ctx)
    if which == "E2t":
        return curve_E2t(at[0] if at else _t())
    if which == "deuring":
        alpha = at[0] if at else get_space("al1").gen("alpha")
        return deuring(alpha), None
    if which in ("E1t", "hessfam"):
        # the Hessian pencil has no Weierstrass model here; report its j only
        return None, None
    raise KeyError(f"unknown curve {which!r}")


# ---------------------------------------------------------------------------
# torsion tests


def lutz_nagell_test(curve: ShortCurve, p: CurvePoint, sweep: int = 12) -> dict:
    """Decide whether P can be torsion using integrality and the divisibility test.

    Returns ``verdict`` ("not-torsion" or "torsion-possible"), the reason, and
    the independent bounded-order sweep.
    """
    A, B = curve.A, curve.B
    if not (_is_integer(A) and _is_integer(B)):
        raise ValueError("Lutz-Nagell needs integer A and B")
    D = 4 * A**3 + 27 * B**2
    if D == 0:
        raise SingularCurve("4A³ + 27B² = 0")
    out: dict = {"D": str(D)}
    verdict, reason = None, None
    if p.is_infinity:
        verdict, reason = "torsion-possible", "point at infinity"
    elif not (_is_integer(p.x) and _is_integer(p.y)):
        verdict, reason = "not-torsion", "non-integral coordinates"
    elif curve.add(p, p).is_infinity:
        verdict, reason = "torsion-possible", "[2]P = O"
    elif Fraction(D) % (Fraction(p.y) ** 2) != 0:
        verdict, reason = "not-torsion", "y(P)² does not divide 4A³+27B²"
    sweep_res = _sweep(curve, p, sweep)
    if verdict is None:
        if sweep_res["order"] is None and sweep_res["first_non_integral"] is not None:
            verdict = "not-torsion"
            reason = f"[{sweep_res['first_non_integral']}]P has non-integral coordinates"
        else:
            verdict, reason = "torsion-possible", "all tests inconclusive"
    out.update(verdict=verdict, reason=reason, sweep=sweep_res)
    return out


def _sweep(curve: LongCurve, p: CurvePoint, bound: int) -> dict:
    order, first_bad = None, None
    q = INF
    for m in range(1, bound + 1):
        q = curve.add(q, p)
        if q.is_infinity:
            order = m
            break
        if first_bad is None and not (_is_integer(q.x) and _is_integer(q.y)):
            first_bad = m
    return {
        "bound": bound,
        "order": order,
        "first_non_integral": first_bad,
        "verdict": "torsion" if order else "not-torsion",
    }


# ---------------------------------------------------------------------------
# fibres of one-parameter families


def _as_poly(x) -> MPoly:
    if isinstance(x, RatFunc):
        return x.as_poly()
    if isinstance(x, MPoly):
        return x
    return get_space("t1").one() * x


def _order_at(f: MPoly, c) -> int:
    if f.is_zero():
        raise ValueError("zero polynomial has no order")
    k, g = 0, f
    while True:
        v = g.eval([c])
        if v != 0:
            return k
        g = g.diff(0)
        k += 1


def _weight_bound(curve: LongCurve) -> int:
    degs = []
    for i, a in zip((1, 2, 3, 4, 6), curve.a):
        if not is_zero(a):
            degs.append((_as_poly(a).degree(), i))
    return max(-(-d // i) for d, i in degs) if degs else 0


def kodaira_In_check(curve: LongCurve, place) -> int:
    """n for a multiplicative fibre of type I_n at ``place`` (a value of t or "inf")."""
    disc = _as_poly(curve.disc)
    c4 = _as_poly(curve.c4)
    if place in ("inf", "∞", None):
        w = _weight_bound(curve)
        n = 12 * w - disc.degree()
        c4_ord = 4 * w - c4.degree() if not c4.is_zero() else None
    else:
        n = _order_at(disc, place)
        c4_ord = _order_at(c4, place) if not c4.is_zero() else None
    if n == 0:
        raise ValueError(f"t = {place} is not a zero of the discriminant")
    if c4_ord != 0:
        raise NotMultiplicative(f"c4 vanishes at t = {place}")
    return n


def rationality_criterion_check(curve: ShortCurve) -> dict:
    """Degree test for a rational elliptic surface: deg A ≤ 4, deg B ≤ 6, Δ nonconstant."""
    dA = _as_poly(curve.A).degree() if not is_zero(curve.A) else -1
    dB = _as_poly(curve.B).degree() if not is_zero(curve.B) else -1
    dD = _as_poly(curve.disc).degree()
    ok = dA <= 4 and dB <= 6 and dD > 0
    return {"status": "pass" if ok else "fail", "deg_p": dA, "deg_q": dB, "deg_disc": dD}


# ---------------------------------------------------------------------------
# stand-alone checks


def hauptmodul_check() -> dict:
    t = _t()
    rho = _lift(3 * (t + 2)) / _lift(t - 1)
    lhs = hauptmodul_j(rho)
    rhs = _lift(27 * t**3 * (t**3 + 8) ** 3) / _lift((t**3 - 1) ** 3)
    e2, _ = curve_E2t(t)
    spot = hauptmodul_j(Fraction(12)), 27 * 8 * 16**3 / Fraction(7**3)
    ok = lhs == rhs and e2.j == rhs and spot[0] == spot[1]
    return {"status": "pass" if ok else "fail", "spot_t2": str(spot[0])}


def j_correspondence_check() -> dict:
    r = get_space("r1").gen("r")
    rinv = _lift(get_space("r1").one()) / _lift(r)
    ident = j1(rinv) == j2(r)
    t = _t()
    sub = t**3 - 1
    long_ok = deuring(3 * t).j == _lift(27 * t**3 * (9 * t**3 - 8) ** 3) / _lift(t**3 - 1)
    j1_ok = j1(sub) == deuring(3 * t).j
    j2_ok = j2(sub) == curve_E2t(t)[0].j
    spot = j1(Fraction(1)) == j2(Fraction(1))
    ok = ident and long_ok and j1_ok and j2_ok and spot
    return {
        "status": "pass" if ok else "fail",
        "j1(1/r)=j2(r)": ident,
        "long_form_j": long_ok,
        "j1_matches_long_form": j1_ok,
        "j2_matches_E2t": j2_ok,
    }


NINE_POINTS = (
    (0, -1, 1),
    (0, "-w", 1),
    (0, "-w2", 1),
    (1, 0, -1),
    ("w", 0, "-w2"),
    ("w2", 0, "-w"),
    (-1, 1, 0),
    (-1, "w2", 0),
    (-1, "w", 0),
)


def _nine_points():
    w = omega()
    table = {"w": w, "w2": w * w, "-w": -w, "-w2": -(w * w)}
    return [tuple(table[c] if isinstance(c, str) else c for c in p) for p in NINE_POINTS]


def hessian_family_checks() -> dict:
    mu3 = get_space("mu3")
    u, v, mu = mu3.gens()
    mu_only = get_space("uvwm4").gen("mu")
    on = []
    for p in _nine_points():
        val = p[0] ** 3 + p[1] ** 3 + p[2] ** 3 - 3 * mu_only * (p[0] * p[1] * p[2])
        on.append(val.is_zero())
    y, x = -(v**3), -(u * v)
    image = y * y + 3 * mu * x * y + y - x**3
    quotient = divide_exact(image, v**3)
    expected = u**3 + v**3 + 3 * mu * u * v - 1
    z = symbolic_context("z3")
    e, _ = curve_E(z)
    H, K = z.form("H"), z.form("K")
    p2 = e.point(3 * H * H, 4 * (H**3 - K**3), check=False)
    psi, phi = z.form("psi"), z.form("phi")
    alt = (3 * (psi + 6 * phi) ** 2, 108 * phi * (psi * psi + 3 * psi * phi + 9 * phi * phi))
    ok = all(on) and quotient == expected and e.contains(p2) and _alt_match(p2, alt)
    return {
        "status": "pass" if ok else "fail",
        "nine_points_on_curve": on,
        "isogeny_quotient": quotient.to_text(),
        "p2_on_E": e.contains(p2),
    }


def _alt_match(p: CurvePoint, alt) -> bool:
    return is_zero(p.x - alt[0]) and is_zero(p.y - alt[1])


# ---------------------------------------------------------------------------
# catalog entries

_EC = "the elliptic curve attached to the Hessian invariants"
_E2 = "the rational elliptic surface with a 3-division section"
_HF = "the Hessian family and its Deuring form"


def _el(id_: str, space: str, anchor: str, description: str, **kw):
    def deco(fn):
        register(IdentityEntry(id_, description, space, fn, anchor, **kw))
        return fn

    return deco


def _pt_pairs(label: str, p: CurvePoint, x, y):
    if p.is_infinity:
        return [(f"{label} finite", 0, 1)]
    return [(f"{label} x", p.x, _lift(x)), (f"{label} y", p.y, _lift(y))]


@_el("EL-1", "z3", _EC, "P = (3C6, 108C9) lies on E")
def _el1(c: Context):
    e, p = curve_E(c)
    return [("on E", e.equation(p), 0)]


@_el("EL-2", "z3", _EC, "P2 = (3H², 4(H³−K³)) lies on E and matches its φ, ψ form")
def _el2(c: Context):
    e, _ = curve_E(c)
    H, K = c.form("H"), c.form("K")
    psi, phi = c.form("psi"), c.form("phi")
    p2 = CurvePoint(_lift(3 * H * H), _lift(4 * (H**3 - K**3)))
    return [
        ("on E", e.equation(p2), 0),
        ("x", p2.x, 3 * (psi + 6 * phi) ** 2),
        ("y", p2.y, 108 * phi * (psi * psi + 3 * psi * phi + 9 * phi * phi)),
    ]


@_el("EL-3", "z3", _EC, "j(E) = −C12³/𝔉C12³", strategy="ratfunc")
def _el3(c: Context):
    e, _ = curve_E(c)
    return [("j", e.j, -_lift(c.form("C12") ** 3) / _lift(c.form("FC12") ** 3))]


@_el("EL-4", "z3", _EC, "closed form of [2]P on E", strategy="ratfunc")
def _el4(c: Context):
    e, p = curve_E(c)
    q = e.add(p, p)
    C6, C9, C12 = (_lift(c.form(n)) for n in ("C6", "C9", "C12"))
    s = C6 * C6 - C12
    x = -6 * C6 + s * s / (64 * C9 * C9)
    y = -108 * C9 + 9 * C6 * s / (8 * C9) - s**3 / (512 * C9**3)
    return _pt_pairs("[2]P", q, x, y)


@_el("EL-5", "t1", _E2, "P2 on E2,t and [2]P2 = (3t², −4(t³−1)) = −P2", strategy="ratfunc")
def _el5(c: Context):
    t = c["t"]
    e, p = curve_E2t(t)
    q = e.add(p, p)
    minus = e.neg(p)
    return [("on curve", e.equation(p), 0)] + _pt_pairs("[2]P2", q, 3 * t * t, -4 * (t**3 - 1)) + _pt_pairs(
        "-P2", minus, q.x, q.y
    )


@_el("EL-6", "t1", _E2, "P2 is a 3-division point of E2,t", strategy="ratfunc")
def _el6(c: Context):
    e, p = curve_E2t(c["t"])
    return [("[3]P2 = O", int(scalar_mul(e, 3, p).is_infinity), 1), ("[1]P2", int(scalar_mul(e, 1, p) == p), 1)]


@_el("EL-7", "t1", _E2, "discriminant of E2,t")
def _el7(c: Context):
    t = c["t"]
    e, _ = curve_E2t(t)
    return [("disc", e.disc, 2**12 * 3**3 * (t - 1) ** 3 * (t * t + t + 1) ** 3)]


@_el("EL-8", "t1", _E2, "j(E2,t) = 27t³(t³+8)³/(t³−1)³", strategy="ratfunc")
def _el8(c: Context):
    t = c["t"]
    e, _ = curve_E2t(t)
    return [("j", e.j, _lift(27 * t**3 * (t**3 + 8) ** 3) / _lift((t**3 - 1) ** 3))]


@_el("EL-9", "t1", _E2, "j as a function of the Hauptmodul ρ = 3(t+2)/(t−1)", strategy="ratfunc")
def _el9(c: Context):
    t = c["t"]
    rho = _lift(3 * (t + 2)) / _lift(t - 1)
    return [
        ("j(rho)", hauptmodul_j(rho), curve_E2t(t)[0].j),
        ("hessian pencil", hessian_j(rho / 3), hauptmodul_j(rho)),
    ]


@_el("EL-10", "r1", _E2, "j1(1/r) = j2(r)", strategy="ratfunc")
def _el10(c: Context):
    r = _lift(c["r"])
    return [("j1(1/r)", j1(1 / r), j2(r))]


@_el("EL-11", "t1", _HF, "j of E_3t and of E2,t in terms of r = t³ − 1", strategy="ratfunc")
def _el11(c: Context):
    t = c["t"]
    e3 = deuring(3 * t)
    r = t**3 - 1
    return [
        ("j(E_3t)", e3.j, _lift(27 * t**3 * (9 * t**3 - 8) ** 3) / _lift(r)),
        ("j1", j1(r), e3.j),
        ("j2", j2(r), curve_E2t(t)[0].j),
    ]


@_el("EL-12", "al1", _HF, "Deuring form: Δ = α³ − 27 and j = α³(α³−24)³/(α³−27)", strategy="ratfunc")
def _el12(c: Context):
    a = c["alpha"]
    e = deuring(a)
    return [
        ("disc", e.disc, a**3 - 27),
        ("j", e.j, _lift(a**3 * (a**3 - 24) ** 3) / _lift(a**3 - 27)),
        ("1728 disc", 1728 * e.disc, e.c4**3 - e.c6**2),
    ]


@_el("EL-13", "uvwm4", _HF, "nine sections of the Hessian family")
def _el13(c: Context):
    mu = c["mu"]
    out = []
    for i, p in enumerate(_nine_points()):
        out.append((f"point {i}", p[0] ** 3 + p[1] ** 3 + p[2] ** 3, 3 * mu * (p[0] * p[1] * p[2])))
    return out


@_el("EL-14", "mu3", _HF, "the 3-isogeny substitution y = −v³, x = −uv")
def _el14(c: Context):
    u, v, mu = c["u"], c["v"], c["mu"]
    y, x = -(v**3), -(u * v)
    return [("image", y * y + 3 * mu * x * y + y - x**3, v**3 * (u**3 + v**3 + 3 * mu * u * v - 1))]


@_el("EL-15", "abu3", _EC, "j is unchanged by the twist A → u⁴A, B → u⁶B", strategy="ratfunc")
def _el15(c: Context):
    A, B, u = c["A"], c["B"], c["u"]
    base = ShortCurve(A, B, check=False)
    twisted = ShortCurve(u**4 * A, u**6 * B, check=False)
    return [("j", twisted.j, base.j), ("disc", twisted.disc, u**12 * base.disc)]


# ---------------------------------------------------------------------------
# certification at integer specializations


def specialize_E(z: Sequence[int]) -> tuple[ShortCurve, CurvePoint]:
    ctx = Context("z3", [int(v) for v in z])
    e, p = curve_E(ctx)
    return ShortCurve(e.A, e.B), p


def certify_non_torsion(z: Sequence[int]) -> dict:
    e, p = specialize_E(z)
    res = lutz_nagell_test(e, p)
    res["z"] = list(z)
    res["P"] = [str(p.x), str(p.y)]
    return res


def random_integer_triples(count: int, seed: int = 0, bound: int = 20) -> list[tuple[int, int, int]]:
    rng = random.Random(f"{seed}:triples")
    out = []
    while len(out) < count:
        z = tuple(rng.randint(-bound, bound) for _ in range(3))
        try:
            specialize_E(z)
        except SingularCurve:
            continue
        out.append(z)
    return out


def bad_places_E2t() -> dict:
    """Fibre types of E2,t at t = 1, ω, ω², ∞."""
    e, _ = curve_E2t(_t())
    w = omega()
    places = {"1": 1, "w": w, "w2": w * w, "inf": "inf"}
    return {k: f"I{kodaira_In_check(e, v)}" for k, v in places.items()}
