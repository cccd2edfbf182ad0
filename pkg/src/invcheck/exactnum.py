"""Exact scalars: rationals and elements of cyclotomic fields Q(zeta_n).

Rationals are :class:`fractions.Fraction`.  An element of Q(zeta_n) is stored
as its residue modulo the n-th cyclotomic polynomial, i.e. a dense tuple of
``phi(n)`` rational coefficients in the power basis 1, zeta, ..., zeta^(phi-1).
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence, Union

import cmath

Rational = Fraction


class ConductorMismatch(ValueError):
    """Raised when two cyclotomic values live in incompatible fields."""


# ---------------------------------------------------------------------------
# integer polynomial helpers (coefficient lists, lowest degree first)


def _poly_divmod_int(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    """Divide integer polynomials where ``den`` is monic."""
    num = list(num)
    if den[-1] != 1:
        raise ValueError("divisor must be monic")
    dq = len(num) - len(den)
    if dq < 0:
        return [0], num
    quot = [0] * (dq + 1)
    for shift in range(dq, -1, -1):
        c = num[shift + len(den) - 1]
        quot[shift] = c
        if c:
            for k, d in enumerate(den):
                num[shift + k] -= c * d
    rem = num[: len(den) - 1] or [0]
    return quot, rem


def _trim(p: list) -> list:
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first.

    Obtained by dividing x^n - 1 by Phi_d for every proper divisor d of n.
    """
    if n < 1:
        raise ValueError("conductor must be positive")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _poly_divmod_int(poly, list(cyclotomic_polynomial(d)))
            assert not any(rem)
    return tuple(_trim(poly))


def euler_phi(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


def format_int_poly(coeffs: Sequence[int], var: str = "x") -> str:
    """Human-readable rendering of an integer polynomial, highest degree first."""
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if not c:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        mag = abs(c)
        body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
        parts.append(("-" if c < 0 else "+", body))
    if not parts:
        return "0"
    sign, body = parts[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


@lru_cache(maxsize=None)
def power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Row k holds zeta_n^k in the power basis, for 0 <= k < 2*phi(n) + n."""
    phi = euler_phi(n)
    cyc = cyclotomic_polynomial(n)
    rows = []
    cur = [1] + [0] * (phi - 1)
    for _ in range(2 * phi + n):
        rows.append(tuple(cur))
        # multiply by zeta and reduce with the monic Phi_n
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [c - top * cyc[j] for j, c in enumerate(cur)]
    return tuple(rows)


def zeta_power_coeffs(n: int, k: int) -> tuple[int, ...]:
    """Power-basis coordinates of zeta_n^k for any integer k."""
    return power_table(n)[k % n]


# ---------------------------------------------------------------------------


Scalar = Union[int, Fraction, "CycloNum"]


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, _RationalABC):
        return Fraction(x.numerator, x.denominator)
    raise TypeError(f"not a rational: {x!r}")


class CycloNum:
    """Immutable element of Q(zeta_n), reduced modulo Phi_n."""

    __slots__ = ("n", "coeffs", "_hash")

    def __init__(self, value: Union[int, Fraction, "CycloNum"] = 0, n: int = 1):
        if isinstance(value, CycloNum):
            if value.n == n:
                coeffs = value.coeffs
            elif value.is_rational():
                coeffs = (value.coeffs[0],) + (Fraction(0),) * (euler_phi(n) - 1)
            else:
                coeffs = value.embed(n).coeffs
        else:
            phi = euler_phi(n)
            coeffs = (_as_fraction(value),) + (Fraction(0),) * (phi - 1)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("CycloNum is immutable")

    @classmethod
    def from_coeffs(cls, n: int, coeffs: Iterable) -> "CycloNum":
        """Build from power-basis coefficients; longer inputs are reduced mod Phi_n."""
        phi = euler_phi(n)
        vals = [_as_fraction(c) for c in coeffs]
        if len(vals) > phi:
            out = [Fraction(0)] * phi
            for k, c in enumerate(vals):
                if c:
                    for j, t in enumerate(zeta_power_coeffs(n, k)):
                        if t:
                            out[j] += c * t
            vals = out
        else:
            vals = vals + [Fraction(0)] * (phi - len(vals))
        obj = cls.__new__(cls)
        object.__setattr__(obj, "n", n)
        object.__setattr__(obj, "coeffs", tuple(vals))
        object.__setattr__(obj, "_hash", None)
        return obj

    @classmethod
    def zeta(cls, n: int, k: int = 1) -> "CycloNum":
        return cls.from_coeffs(n, zeta_power_coeffs(n, k))

    # -- predicates ----------------------------------------------------------
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def is_integral_rational(self) -> bool:
        return self.is_rational() and self.coeffs[0].denominator == 1

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- coercion ------------------------------------------------------------
    def _coerce(self, other) -> "CycloNum | None":
        if isinstance(other, CycloNum):
            if other.n == self.n:
                return other
            if other.is_rational():
                return CycloNum(other.coeffs[0], self.n)
            if self.is_rational() or self.n % other.n == 0 or other.n % self.n == 0:
                return other
            raise ConductorMismatch(f"conductors {self.n} and {other.n}")
        if isinstance(other, (int, Fraction)) or isinstance(other, _RationalABC):
            return CycloNum(other, self.n)
        return None

    def _common(self, other) -> tuple["CycloNum", "CycloNum"] | None:
        o = self._coerce(other)
        if o is None:
            return None
        if o.n == self.n:
            return self, o
        if self.is_rational():
            return CycloNum(self.coeffs[0], o.n), o
        # one conductor divides the other: promote the smaller one
        if o.n % self.n == 0:
            return self.embed(o.n), o
        return self, o.embed(self.n)

    # -- arithmetic ----------------------------------------------------------
    def __add__(self, other):
        pair = self._common(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return CycloNum.from_coeffs(a.n, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycloNum.from_coeffs(self.n, [-x for x in self.coeffs])

    def __pos__(self):
        return self

    def __sub__(self, other):
        pair = self._common(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return CycloNum.from_coeffs(a.n, [x - y for x, y in zip(a.coeffs, b.coeffs)])

    def __rsub__(self, other):
        pair = self._common(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return CycloNum.from_coeffs(a.n, [y - x for x, y in zip(a.coeffs, b.coeffs)])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycloNum.from_coeffs(self.n, [x * other for x in self.coeffs])
        pair = self._common(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        n = a.n
        phi = len(a.coeffs)
        if phi == 1:
            return CycloNum.from_coeffs(n, [a.coeffs[0] * b.coeffs[0]])
        prod = [Fraction(0)] * (2 * phi - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        prod[i + j] += x * y
        return CycloNum.from_coeffs(n, prod)

    __rmul__ = __mul__

    def inverse(self) -> "CycloNum":
        return invert(self)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero in Q(zeta)")
            return CycloNum.from_coeffs(self.n, [x / other for x in self.coeffs])
        pair = self._common(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a * invert(b)

    def __rtruediv__(self, other):
        pair = self._common(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return b * invert(a)

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return invert(self) ** (-k)
        result = CycloNum(1, self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- comparison ----------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, CycloNum):
            if other.n == self.n:
                return self.coeffs == other.coeffs
            if self.is_rational() and other.is_rational():
                return self.coeffs[0] == other.coeffs[0]
            if self.is_rational() or other.is_rational():
                return False
            pair = self._common(other)
            return pair[0].coeffs == pair[1].coeffs
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        # normalised trace is independent of the conductor used to store the value,
        # so equal elements of nested fields hash alike
        h = self._hash
        if h is None:
            if self.is_rational():
                h = hash(self.coeffs[0])
            else:
                tr = _basis_traces(self.n)
                h = hash(sum(c * t for c, t in zip(self.coeffs, tr)) / len(tr)) ^ 0x5BD1E995
            object.__setattr__(self, "_hash", h)
        return h

    # -- field maps ----------------------------------------------------------
    def conjugate(self) -> "CycloNum":
        return conjugate(self)

    def embed(self, target: int) -> "CycloNum":
        return embed(self, target)

    def galois(self, k: int) -> "CycloNum":
        """Apply the automorphism zeta -> zeta^k (k coprime to n)."""
        if gcd(k, self.n) != 1:
            raise ValueError("exponent must be coprime to the conductor")
        out = [Fraction(0)] * len(self.coeffs)
        for j, c in enumerate(self.coeffs):
            if c:
                for m, t in enumerate(zeta_power_coeffs(self.n, j * k)):
                    if t:
                        out[m] += c * t
        return CycloNum.from_coeffs(self.n, out)

    def to_complex(self) -> complex:
        """Floating-point value under zeta_n = exp(2 pi i / n); diagnostics only."""
        z = cmath.exp(2j * cmath.pi / self.n)
        return sum(float(c) * z**k for k, c in enumerate(self.coeffs))

    # -- text ----------------------------------------------------------------
    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"CycloNum({render(self)!r}, n={self.n})"


@lru_cache(maxsize=None)
def _basis_traces(n: int) -> tuple[int, ...]:
    """Trace from Q(zeta_n) to Q of each power-basis element."""
    units = [k for k in range(1, n + 1) if gcd(k, n) == 1]
    out = []
    for j in range(euler_phi(n)):
        acc = [0] * euler_phi(n)
        for k in units:
            for m, t in enumerate(zeta_power_coeffs(n, j * k)):
                acc[m] += t
        assert not any(acc[1:])
        out.append(acc[0])
    return tuple(out)


# ---------------------------------------------------------------------------
# rational polynomial helpers used by inversion


def _qpoly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    b = _trim(list(b))
    if len(a) < len(b):
        return [Fraction(0)], a
    quot = [Fraction(0)] * (len(a) - len(b) + 1)
    lead = b[-1]
    for shift in range(len(a) - len(b), -1, -1):
        c = a[shift + len(b) - 1] / lead
        quot[shift] = c
        if c:
            for k, d in enumerate(b):
                a[shift + k] -= c * d
    rem = _trim(a[: len(b) - 1] or [Fraction(0)])
    return quot, rem


def _qpoly_sub_mul(a: list[Fraction], q: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    """a - q*b."""
    out = list(a) + [Fraction(0)] * max(0, len(q) + len(b) - 1 - len(a))
    for i, x in enumerate(q):
        if x:
            for j, y in enumerate(b):
                out[i + j] -= x * y
    return _trim(out)


def invert(a: CycloNum) -> CycloNum:
    """Multiplicative inverse by the extended Euclidean algorithm modulo Phi_n."""
    if a.is_zero():
        raise ZeroDivisionError("inverse of zero in Q(zeta)")
    if a.is_rational():
        return CycloNum(1 / a.coeffs[0], a.n)
    modulus = [Fraction(c) for c in cyclotomic_polynomial(a.n)]
    r0, r1 = modulus, _trim(list(a.coeffs))
    s0, s1 = [Fraction(0)], [Fraction(1)]
    while any(r1):
        q, r = _qpoly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _qpoly_sub_mul(s0, q, s1)
    # r0 is a nonzero constant since Phi_n is irreducible
    c = r0[0]
    result = CycloNum.from_coeffs(a.n, [x / c for x in s0])
    return result


def conjugate(a: CycloNum) -> CycloNum:
    """Complex conjugation zeta -> zeta^(n-1)."""
    if a.n <= 2:
        return a
    return a.galois(a.n - 1)


def embed(a: CycloNum, target: int) -> CycloNum:
    """Image under zeta_m -> zeta_target^(target/m)."""
    m = a.n
    if target == m:
        return a
    if target % m:
        raise ConductorMismatch(f"cannot embed conductor {m} into {target}")
    step = target // m
    out = [Fraction(0)] * euler_phi(target)
    for j, c in enumerate(a.coeffs):
        if c:
            for k, t in enumerate(zeta_power_coeffs(target, j * step)):
                if t:
                    out[k] += c * t
    return CycloNum.from_coeffs(target, out)


def to_cyclo(x: Scalar, n: int = 1) -> CycloNum:
    if isinstance(x, CycloNum):
        if x.n == n:
            return x
        if x.is_rational():
            return CycloNum(x.coeffs[0], n)
        return embed(x, n)
    return CycloNum(x, n)


def common_conductor(values: Iterable) -> int:
    n = 1
    for v in values:
        if isinstance(v, CycloNum) and not v.is_rational():
            n = lcm(n, v.n)
    return n


# named constants -------------------------------------------------------------


def omega() -> CycloNum:
    return CycloNum.zeta(3)


def imag_unit() -> CycloNum:
    return CycloNum.zeta(4)


def epsilon() -> CycloNum:
    return CycloNum.zeta(5)


def sqrt_minus3() -> CycloNum:
    """The square root of -3 chosen as 1 + 2*omega."""
    return 1 + 2 * omega()


def sqrt5() -> CycloNum:
    e = epsilon()
    return 1 + 2 * e + 2 * e**4


def sqrt3() -> CycloNum:
    return CycloNum.zeta(12) + CycloNum.zeta(12, 11)


def sqrt2() -> CycloNum:
    return CycloNum.zeta(8) + CycloNum.zeta(8, 7)


# text -----------------------------------------------------------------------


def _fmt_frac(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def render(a: Union[CycloNum, Fraction, int]) -> str:
    """Text such as ``-1/2 + 3*z12 - z12^3``; rationals print bare."""
    if not isinstance(a, CycloNum):
        return _fmt_frac(_as_fraction(a))
    sym = f"z{a.n}"
    pieces: list[tuple[bool, str]] = []
    for k, c in enumerate(a.coeffs):
        if not c:
            continue
        neg = c < 0
        mag = -c if neg else c
        if k == 0:
            body = _fmt_frac(mag)
        else:
            mono = sym if k == 1 else f"{sym}^{k}"
            body = mono if mag == 1 else f"{_fmt_frac(mag)}*{mono}"
        pieces.append((neg, body))
    if not pieces:
        return "0"
    neg, body = pieces[0]
    out = ("-" if neg else "") + body
    for neg, body in pieces[1:]:
        out += (" - " if neg else " + ") + body
    return out


_TERM = re.compile(
    r"\s*([+-])?\s*(?:(\d+)(?:/(\d+))?)?\s*(\*)?\s*(?:(z(\d+)|w|i)(?:\^(\d+))?)?\s*"
)


def parse(text: str, n: int | None = None) -> CycloNum:
    """Inverse of :func:`render`.  ``w`` and ``i`` are accepted for z3 and z4."""
    pos = 0
    terms: list[tuple[Fraction, int, int]] = []
    text = text.strip()
    if not text:
        raise ValueError("empty number")
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse {text!r} at {pos}")
        sign, num, den, star, sym, cond, power = m.groups()
        if num is None and sym is None:
            raise ValueError(f"cannot parse {text!r} at {pos}")
        if star and (num is None or sym is None):
            raise ValueError(f"dangling '*' in {text!r}")
        if terms and sign is None:
            raise ValueError(f"missing operator in {text!r}")
        coef = Fraction(int(num), int(den) if den else 1) if num else Fraction(1)
        if sign == "-":
            coef = -coef
        cnd, k = 1, 0
        if sym:
            cnd = int(cond) if cond else (3 if sym == "w" else 4)
            k = int(power) if power else 1
        terms.append((coef, cnd, k))
        pos = m.end()
    conductor = n or 1
    for _, cnd, k in terms:
        if k:
            conductor = lcm(conductor, cnd)
    total = CycloNum(0, conductor)
    for coef, cnd, k in terms:
        total = total + coef * (embed(CycloNum.zeta(cnd, k), conductor) if k else CycloNum(1, conductor))
    return total


def random_cyclo(rng, n: int, bound: int = 20) -> CycloNum:
    """Random element with small rational coefficients (for tests)."""
    phi = euler_phi(n)
    return CycloNum.from_coeffs(
        n, [Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in range(phi)]
    )


def integer_content(values: Iterable[int]) -> int:
    g = 0
    for v in values:
        g = gcd(g, v)
        if g == 1:
            break
    return g
