"""Truncated q-expansions with exponents in (1/d)·Z and rational coefficients.

A series knows every coefficient of q^(e/d) with e < ``prec``; nothing at or
past that frontier is ever reported.
"""

from __future__ import annotations

import time
from fractions import Fraction
from math import gcd, isqrt
from typing import Iterable, Sequence

from .identities import CheckResult

__all__ = [
    "QSeries",
    "delta",
    "eisenstein",
    "eta",
    "eta_quotient",
    "picard_fuchs_residual",
    "picard_fuchs_r_form",
    "theta_A2",
    "verify_theta_eisenstein",
]


class QSeries:
    __slots__ = ("d", "coeffs", "prec")

    def __init__(self, d: int, coeffs: dict[int, Fraction] | None = None, prec: int = 0):
        if d < 1:
            raise ValueError("exponent denominator must be positive")
        self.d = d
        self.prec = prec
        self.coeffs = {e: Fraction(c) for e, c in (coeffs or {}).items() if c and e < prec}

    # -- construction -------------------------------------------------------
    @classmethod
    def one(cls, d: int, prec: int) -> "QSeries":
        return cls(d, {0: Fraction(1)}, prec)

    @classmethod
    def monomial(cls, d: int, e: int, c=1, prec: int = 0) -> "QSeries":
        return cls(d, {e: Fraction(c)}, prec)

    def with_denominator(self, d: int) -> "QSeries":
        if d % self.d:
            raise ValueError(f"cannot refine 1/{self.d} to 1/{d}")
        m = d // self.d
        return QSeries(d, {e * m: c for e, c in self.coeffs.items()}, self.prec * m)

    def _match(self, other: "QSeries") -> tuple["QSeries", "QSeries"]:
        if self.d == other.d:
            return self, other
        d = self.d * other.d // gcd(self.d, other.d)
        return self.with_denominator(d), other.with_denominator(d)

    # -- queries ------------------------------------------------------------
    def valuation(self) -> int | None:
        """Numerator of the leading exponent, or None when no known term is nonzero."""
        return min(self.coeffs) if self.coeffs else None

    def coefficient(self, exponent) -> Fraction:
        e = Fraction(exponent) * self.d
        if e.denominator != 1:
            raise ValueError(f"exponent {exponent} is off the 1/{self.d} grid")
        if e >= self.prec:
            raise ValueError(f"coefficient of q^{exponent} is beyond the truncation")
        return self.coeffs.get(int(e), Fraction(0))

    def known_terms(self) -> list[tuple[Fraction, Fraction]]:
        return [(Fraction(e, self.d), c) for e, c in sorted(self.coeffs.items())]

    def coefficient_list(self, count: int | None = None) -> list[Fraction]:
        """Coefficients at exponents 0, 1/d, 2/d, … up to the frontier (or ``count``)."""
        top = self.prec if count is None else min(self.prec, count)
        return [self.coeffs.get(e, Fraction(0)) for e in range(top)]

    @property
    def frontier(self) -> Fraction:
        return Fraction(self.prec, self.d)

    def is_zero(self) -> bool:
        return not self.coeffs

    def first_mismatch(self, other: "QSeries") -> Fraction | None:
        a, b = self._match(other)
        top = min(a.prec, b.prec)
        for e in sorted(set(a.coeffs) | set(b.coeffs)):
            if e < top and a.coeffs.get(e, 0) != b.coeffs.get(e, 0):
                return Fraction(e, a.d)
        return None

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, QSeries):
            other = QSeries.monomial(self.d, 0, other, self.prec)
        a, b = self._match(other)
        out = dict(a.coeffs)
        for e, c in b.coeffs.items():
            out[e] = out.get(e, 0) + c
        return QSeries(a.d, out, min(a.prec, b.prec))

    __radd__ = __add__

    def __neg__(self):
        return QSeries(self.d, {e: -c for e, c in self.coeffs.items()}, self.prec)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, QSeries):
            c = Fraction(other)
            return QSeries(self.d, {e: v * c for e, v in self.coeffs.items()}, self.prec)
        a, b = self._match(other)
        va, vb = a.valuation(), b.valuation()
        if va is None or vb is None:
            # an all-unknown-or-zero factor pins nothing beyond its own frontier
            prec = min(a.prec + (vb if vb is not None else b.prec), b.prec + (va if va is not None else a.prec))
            return QSeries(a.d, {}, prec)
        prec = min(a.prec + vb, b.prec + va)
        out: dict[int, Fraction] = {}
        for e1, c1 in a.coeffs.items():
            if e1 + vb >= prec:
                continue
            for e2, c2 in b.coeffs.items():
                e = e1 + e2
                if e < prec:
                    out[e] = out.get(e, 0) + c1 * c2
        return QSeries(a.d, out, prec)

    __rmul__ = __mul__

    def shift(self, e: int) -> "QSeries":
        """Multiply by q^(e/d)."""
        return QSeries(self.d, {k + e: c for k, c in self.coeffs.items()}, self.prec + e)

    def inverse(self) -> "QSeries":
        v = self.valuation()
        if v is None:
            raise ZeroDivisionError("series has no known nonzero term")
        unit = self.shift(-v)
        lead = unit.coeffs[0]
        n = unit.prec
        inv: dict[int, Fraction] = {0: 1 / lead}
        keys = sorted(k for k in unit.coeffs if k > 0)
        for e in range(1, n):
            s = Fraction(0)
            for k in keys:
                if k > e:
                    break
                c = inv.get(e - k)
                if c:
                    s += unit.coeffs[k] * c
            if s:
                inv[e] = -s / lead
        return QSeries(self.d, inv, n).shift(-v)

    def __truediv__(self, other):
        if not isinstance(other, QSeries):
            return self * (1 / Fraction(other))
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        if k == 0:
            return QSeries.one(self.d, self.prec)
        result, base = None, self
        while k:
            if k & 1:
                result = base if result is None else result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def theta(self) -> "QSeries":
        """q·d/dq."""
        return QSeries(self.d, {e: c * Fraction(e, self.d) for e, c in self.coeffs.items()}, self.prec)

    def __repr__(self):
        terms = " + ".join(f"{c}*q^{Fraction(e, self.d)}" for e, c in sorted(self.coeffs.items())[:8])
        return f"QSeries({terms} + O(q^{self.frontier}))"


# ---------------------------------------------------------------------------
# standard expansions


def theta_A2(which: int, N: int) -> QSeries:
    """θ0 = Σ q^(x²−xy+y²) or θ1 = q^(1/3) Σ q^(x²−xy+y²+x−y), complete below q^N."""
    if N < 1:
        raise ValueError("N must be positive")
    d, prec = 3, 3 * N
    bound = isqrt(2 * N + 2) + 2
    out: dict[int, Fraction] = {}
    for x in range(-bound, bound + 1):
        for y in range(-bound, bound + 1):
            q = x * x - x * y + y * y
            e = 3 * q if which == 0 else 3 * (q + x - y) + 1
            if e < prec:
                out[e] = out.get(e, 0) + 1
    if which not in (0, 1):
        raise ValueError("which must be 0 or 1")
    return QSeries(d, out, prec)


def _sigma(m: int, r: int) -> int:
    return sum(k**r for k in range(1, m + 1) if m % k == 0)


def eisenstein(k: int, N: int) -> QSeries:
    if k == 4:
        c = 240
    elif k == 6:
        c = -504
    else:
        raise ValueError("only weights 4 and 6")
    coeffs = {0: Fraction(1)}
    for m in range(1, N):
        coeffs[m] = Fraction(c * _sigma(m, k - 1))
    return QSeries(1, coeffs, N)


def delta(N: int, method: str = "product") -> QSeries:
    if method == "product":
        return eta_quotient([(1, 24)], N, d=1)
    if method == "eisenstein":
        return (eisenstein(4, N) ** 3 - eisenstein(6, N) ** 2) * Fraction(1, 1728)
    raise ValueError(method)


def _euler_product(step: int, prec: int) -> dict[int, Fraction]:
    """Π_{m≥1} (1 − x^m) with x = q^(step/d), as exponent numerators below prec."""
    out: dict[int, Fraction] = {}
    n = 0
    while True:
        hit = False
        for m in ((n,) if n == 0 else (n, -n)):
            e = step * m * (3 * m - 1) // 2
            if e < prec:
                out[e] = out.get(e, 0) + (-1) ** (m % 2)
                hit = True
        if not hit and n > 0:
            break
        n += 1
    return out


def eta(scale: Fraction | int, d: int, prec: int) -> QSeries:
    """η(scale·τ) = q^(scale/24) Π (1 − q^(scale·m)); prec counts 1/d units."""
    lead = Fraction(scale, 24) * d
    step = Fraction(scale) * d
    if lead.denominator != 1 or step.denominator != 1:
        raise ValueError(f"η({scale}τ) needs exponent grain finer than 1/{d}")
    base = QSeries(d, _euler_product(int(step), prec), prec)
    return base.shift(int(lead))


def eta_quotient(spec: Sequence[tuple], N: int, d: int = 72) -> QSeries:
    """Π η(kτ)^e over (k, e) pairs, complete below q^N."""
    if not spec:
        return QSeries.one(d, N * d)
    lead = sum(Fraction(k, 24) * e for k, e in spec) * d
    if lead.denominator != 1:
        raise ValueError("leading exponent not representable")
    prec = N * d
    # work with the unit parts so truncation does not drift with the shifts
    unit = QSeries.one(d, prec)
    for k, e in spec:
        step = Fraction(k) * d
        if step.denominator != 1:
            raise ValueError("exponent grain too coarse")
        part = QSeries(d, _euler_product(int(step), prec), prec)
        unit = unit * (part**e if e >= 0 else part.inverse() ** (-e))
    return unit.shift(int(lead))


# ---------------------------------------------------------------------------
# checks


def _result(id_: str, ok: bool, t0: float, anchor: str, details: dict, report_only: bool = False) -> CheckResult:
    return CheckResult(
        id_,
        "QS",
        "pass" if ok else "fail",
        (time.perf_counter() - t0) * 1000,
        "series",
        anchor,
        report_only,
        None,
        details,
    )


def verify_theta_eisenstein(N: int = 20, perturb: bool = False) -> CheckResult:
    """θ0⁴+8θ0θ1³ = E4 and θ0⁶−20θ0³θ1³−8θ1⁶ = E6 below q^N."""
    if N < 5:
        raise ValueError("N must be at least 5")
    t0 = time.perf_counter()
    th0, th1 = theta_A2(0, N), theta_A2(1, N)
    if perturb:
        th0 = th0 + QSeries.monomial(3, 3 * 2, 1, th0.prec)
    c3 = th1**3
    e4 = th0**4 + 8 * th0 * c3
    e6 = th0**6 - 20 * th0**3 * c3 - 8 * c3 * c3
    details = {}
    ok = True
    for name, lhs, rhs in (("E4", e4, eisenstein(4, N)), ("E6", e6, eisenstein(6, N))):
        bad = lhs.first_mismatch(rhs)
        frac = [str(e) for e, _ in lhs.known_terms() if e.denominator != 1]
        details[name] = {
            "first_mismatch": None if bad is None else str(bad),
            "fractional_exponents": frac[:5],
            "window": str(min(lhs.frontier, Fraction(N))),
        }
        ok = ok and bad is None and not frac
    return _result("QS-theta", ok, t0, "theta series of the hexagonal lattice", details)


def _pf_series(N: int):
    d = 72
    r = eta_quotient([(3, 3), (Fraction(1, 3), -3)], N, d)
    t = 9 * r + 1
    f = eta_quotient([(Fraction(1, 3), 3), (1, -1)], N, d)
    return r, t, f


def _derivs(f: QSeries, x: QSeries) -> tuple[QSeries, QSeries]:
    dx = x.theta()
    f1 = f.theta() / dx
    f2 = f1.theta() / dx
    return f1, f2


def picard_fuchs_residual(N: int = 12, f: QSeries | None = None) -> CheckResult:
    """(t³−1)f'' + 3t²f' + t·f through the verifiable window."""
    t0 = time.perf_counter()
    _, t, f0 = _pf_series(N)
    f = f0 if f is None else f
    f1, f2 = _derivs(f, t)
    res = (t**3 - 1) * f2 + 3 * t * t * f1 + t * f
    details = {
        "window": str(res.frontier),
        "residual_terms": [[str(e), str(c)] for e, c in res.known_terms()[:5]],
        "t_minus_1_leading": [[str(e), str(c)] for e, c in (t - 1).known_terms()[:2]],
    }
    ok = res.is_zero() and res.prec > 0
    return _result("QS-pf", ok, t0, "Picard-Fuchs equation of the Hessian pencil", details)


def picard_fuchs_r_form(N: int = 12) -> CheckResult:
    """r(27r²+9r+1)f'' + (9r+1)²f' + 3(9r+1)f with derivatives in r; report only."""
    t0 = time.perf_counter()
    r, _, f = _pf_series(N)
    f1, f2 = _derivs(f, r)
    s = 9 * r + 1
    res = r * (27 * r * r + 9 * r + 1) * f2 + s * s * f1 + 3 * s * f
    details = {
        "window": str(res.frontier),
        "residual_terms": [[str(e), str(c)] for e, c in res.known_terms()[:5]],
    }
    return _result("QS-pf-r", res.is_zero() and res.prec > 0, t0, "the same pencil in the variable r", details, True)


def wrong_solution_residual(N: int = 12) -> CheckResult:
    """The residual with f replaced by η(τ/3)³ alone; expected to fail."""
    f = eta_quotient([(Fraction(1, 3), 3)], N, 72)
    return picard_fuchs_residual(N, f)


def coefficients_table(s: QSeries, count: int = 12) -> list[list[str]]:
    return [[str(e), str(c)] for e, c in s.known_terms()[:count]]


def series_from_list(values: Iterable, d: int = 1) -> QSeries:
    vals = list(values)
    return QSeries(d, {i: Fraction(v) for i, v in enumerate(vals)}, len(vals))
