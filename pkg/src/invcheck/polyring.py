"""Sparse multivariate polynomials and rational functions over Q(zeta_n).

Storage: a polynomial is ``terms / den`` where ``terms`` maps a packed key to
an integer and ``den`` is a positive integer.  A key packs 16-bit exponent
slots; slot 0 holds the exponent of zeta_n (kept below phi(n)), slot i+1 the
exponent of variable i.  Adding keys multiplies monomials, so the product
kernel works on plain ints.
"""

from __future__ import annotations

from collections import defaultdict
from contextlib import contextmanager
from fractions import Fraction
from math import gcd, lcm
from typing import Callable, Iterable, Mapping, Sequence, Union

from . import _kernel
from ._kernel import TermCapExceeded
from .exactnum import CycloNum, euler_phi, power_table, render, to_cyclo, zeta_power_coeffs

BITS = 16
MASK = (1 << BITS) - 1
DEFAULT_TERM_CAP = 5_000_000

_term_cap = DEFAULT_TERM_CAP


def get_term_cap() -> int:
    return _term_cap


def set_term_cap(cap: int) -> None:
    global _term_cap
    if cap < 1:
        raise ValueError("term cap must be positive")
    _term_cap = cap


@contextmanager
def term_cap(cap: int):
    old = _term_cap
    set_term_cap(cap)
    try:
        yield
    finally:
        set_term_cap(old)


class SpaceMismatch(ValueError):
    pass


class NotDivisible(ArithmeticError):
    """Exact division failed; ``remainder`` is the witness."""

    def __init__(self, remainder: "MPoly"):
        super().__init__(f"not divisible, remainder {remainder}")
        self.remainder = remainder


# ---------------------------------------------------------------------------
# variable spaces


class VariableSpace:
    __slots__ = ("id", "names", "index", "shifts")

    def __init__(self, space_id: str, names: Sequence[str]):
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        self.id = space_id
        self.names = tuple(names)
        self.index = {name: i for i, name in enumerate(self.names)}
        self.shifts = tuple(BITS * (i + 1) for i in range(len(self.names)))

    @property
    def nvars(self) -> int:
        return len(self.names)

    def pack(self, exps: Sequence[int], zexp: int = 0) -> int:
        key = zexp
        for e, s in zip(exps, self.shifts):
            if e < 0 or e > MASK:
                raise OverflowError("exponent out of range")
            key |= e << s
        return key

    def unpack(self, key: int) -> tuple[int, tuple[int, ...]]:
        return key & MASK, tuple((key >> s) & MASK for s in self.shifts)

    def var_index(self, var) -> int:
        if isinstance(var, MPoly):
            keys = list(var.terms)
            if len(keys) == 1 and var.den == 1 and var.terms[keys[0]] == 1:
                exps = self.unpack(keys[0])[1]
                if sorted(exps) == [0] * (self.nvars - 1) + [1]:
                    return exps.index(1)
            raise KeyError("polynomial is not a single variable")
        if isinstance(var, int):
            if not 0 <= var < self.nvars:
                raise KeyError(f"no variable #{var} in space {self.id}")
            return var
        try:
            return self.index[var]
        except KeyError:
            raise KeyError(f"unknown variable {var!r} in space {self.id}") from None

    def gen(self, var: Union[str, int], n: int = 1) -> "MPoly":
        i = self.var_index(var)
        exps = [0] * self.nvars
        exps[i] = 1
        return MPoly(self, {self.pack(exps): 1}, 1, n)

    def gens(self, n: int = 1) -> tuple["MPoly", ...]:
        return tuple(self.gen(i, n) for i in range(self.nvars))

    def zero(self, n: int = 1) -> "MPoly":
        return MPoly(self, {}, 1, n)

    def one(self, n: int = 1) -> "MPoly":
        return MPoly.constant(self, 1, n)

    def __eq__(self, other):
        return isinstance(other, VariableSpace) and self.id == other.id and self.names == other.names

    def __hash__(self):
        return hash((self.id, self.names))

    def __repr__(self):
        return f"VariableSpace({self.id!r}, {self.names!r})"


_SPACES: dict[str, VariableSpace] = {}


def register_space(space_id: str, names: Sequence[str]) -> VariableSpace:
    sp = VariableSpace(space_id, names)
    existing = _SPACES.get(space_id)
    if existing is not None and existing != sp:
        raise ValueError(f"space {space_id} already registered with other variables")
    _SPACES[space_id] = sp
    return sp


def get_space(space_id: str) -> VariableSpace:
    try:
        return _SPACES[space_id]
    except KeyError:
        raise KeyError(f"unknown variable space {space_id!r}") from None


def registered_spaces() -> dict[str, VariableSpace]:
    return dict(_SPACES)


for _sid, _names in {
    "z3": ("z1", "z2", "z3"),
    "y5": ("Y0", "Y1", "Y2", "Y3", "Y4"),
    "w6": ("X", "Y", "Z", "phi", "Q1", "Q2"),
    "fk4": ("f0", "f1", "H", "K"),
    "fks5": ("f0", "f1", "H", "K", "s"),
    "hk2": ("H", "K"),
    "xyz3": ("x", "y", "z"),
    "a3": ("A0", "A1", "A2"),
    "t1": ("t",),
    "r1": ("r",),
    "al1": ("alpha",),
    "mu3": ("u", "v", "mu"),
    "uvwm4": ("u", "v", "w", "mu"),
    "xym3": ("x", "y", "mu"),
    "g6": ("g1", "g2", "g3", "g4", "g5", "g6"),
    "x4": ("x1", "x2", "x3", "x4"),
    "T2": ("T1", "T2"),
    "rho1": ("rho",),
}.items():
    register_space(_sid, _names)


# ---------------------------------------------------------------------------
# scalar helpers


def _scalar_parts(c, n: int) -> tuple[int, list[int], int]:
    """Split a scalar into (conductor, integer power-basis coords, denominator)."""
    if isinstance(c, CycloNum):
        if c.is_rational():
            fr = c.coeffs[0]
            return n, [fr.numerator], fr.denominator
        m = c.n if n == 1 else (n if n % c.n == 0 else lcm(n, c.n))
        cc = to_cyclo(c, m) if m != c.n else c
        d = 1
        for x in cc.coeffs:
            d = lcm(d, x.denominator)
        return m, [int(x * d) for x in cc.coeffs], d
    fr = c if isinstance(c, Fraction) else Fraction(c)
    return n, [fr.numerator], fr.denominator


def _is_scalar(x) -> bool:
    return isinstance(x, (int, Fraction, CycloNum))


# ---------------------------------------------------------------------------


class MPoly:
    """Immutable sparse polynomial over Q(zeta_n) in a fixed variable space."""

    __slots__ = ("space", "n", "terms", "den", "_deg")

    def __init__(self, space: VariableSpace, terms: Mapping[int, int] | None = None, den: int = 1, n: int = 1):
        terms = {k: v for k, v in (terms or {}).items() if v}
        if den <= 0:
            if den == 0:
                raise ZeroDivisionError("zero denominator")
            den = -den
            terms = {k: -v for k, v in terms.items()}
        if den != 1 and terms:
            g = gcd(den, *terms.values())
            if g != 1:
                den //= g
                terms = {k: v // g for k, v in terms.items()}
        elif not terms:
            den = 1
        self.space = space
        self.n = n
        self.terms = terms
        self.den = den
        self._deg = None

    @classmethod
    def _raw(cls, space, terms, den, n) -> "MPoly":
        """Trusted constructor: ``terms`` has no zeros; reduces content."""
        obj = cls.__new__(cls)
        if not terms:
            den = 1
        elif den != 1:
            g = gcd(den, *terms.values())
            if g != 1:
                den //= g
                terms = {k: v // g for k, v in terms.items()}
        obj.space = space
        obj.n = n
        obj.terms = terms
        obj.den = den
        obj._deg = None
        return obj

    # -- construction --------------------------------------------------------
    @classmethod
    def constant(cls, space: VariableSpace, c, n: int = 1) -> "MPoly":
        m, coords, d = _scalar_parts(c, n)
        return cls(space, {j: v for j, v in enumerate(coords) if v}, d, m)

    @classmethod
    def from_coefficients(cls, space: VariableSpace, coeffs: Mapping[tuple, object], n: int = 1) -> "MPoly":
        """Build from a map exponent-tuple -> scalar."""
        parts = []
        m = n
        for exps, c in coeffs.items():
            if isinstance(c, CycloNum) and not c.is_rational():
                m = lcm(m, c.n)
        d = 1
        for exps, c in coeffs.items():
            _, coords, cd = _scalar_parts(c, m)
            parts.append((exps, coords, cd))
            d = lcm(d, cd)
        terms: dict[int, int] = {}
        for exps, coords, cd in parts:
            scale = d // cd
            for j, v in enumerate(coords):
                if v:
                    k = space.pack(exps, j)
                    terms[k] = terms.get(k, 0) + v * scale
        return cls(space, terms, d, m)

    # -- basic queries -------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        """Number of stored (monomial, zeta-power) pairs."""
        return len(self.terms)

    def num_terms(self) -> int:
        return len({k >> BITS for k in self.terms})

    def is_constant(self) -> bool:
        return all(k >> BITS == 0 for k in self.terms)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.coefficients().get((0,) * self.space.nvars, Fraction(0))

    def coefficients(self) -> dict[tuple[int, ...], Union[Fraction, CycloNum]]:
        """Exponent tuple -> coefficient (Fraction for conductor 1, else CycloNum)."""
        groups: dict[int, list] = defaultdict(list)
        for k, v in self.terms.items():
            groups[k >> BITS].append((k & MASK, v))
        out = {}
        space = self.space
        for mono, parts in groups.items():
            exps = space.unpack(mono << BITS)[1]
            if self.n == 1:
                out[exps] = Fraction(parts[0][1], self.den)
            else:
                coords = [0] * euler_phi(self.n)
                for j, v in parts:
                    coords[j] = Fraction(v, self.den)
                out[exps] = CycloNum.from_coeffs(self.n, coords)
        return out

    def coefficient(self, exps: Sequence[int]):
        return self.coefficients().get(tuple(exps), Fraction(0))

    def degree(self) -> int:
        """Total degree; -1 stands for minus infinity (zero polynomial)."""
        if self._deg is None:
            if not self.terms:
                self._deg = -1
            else:
                best = 0
                shifts = self.space.shifts
                for k in self.terms:
                    s = 0
                    for sh in shifts:
                        s += (k >> sh) & MASK
                    if s > best:
                        best = s
                self._deg = best
        return self._deg

    def degree_in(self, var) -> int:
        sh = self.space.shifts[self.space.var_index(var)]
        return max(((k >> sh) & MASK for k in self.terms), default=-1)

    def monomial_degrees(self) -> set[int]:
        shifts = self.space.shifts
        return {sum((k >> sh) & MASK for sh in shifts) for k in self.terms}

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degs = self.monomial_degrees()
        if not degs:
            return True
        if len(degs) != 1:
            return False
        return degree is None or degs == {degree}

    def variables_used(self) -> set[str]:
        out = set()
        for i, sh in enumerate(self.space.shifts):
            if any((k >> sh) & MASK for k in self.terms):
                out.add(self.space.names[i])
        return out

    # -- conductor handling --------------------------------------------------
    def effective_conductor(self) -> int:
        return self.n if any(k & MASK for k in self.terms) else 1

    def embed(self, m: int) -> "MPoly":
        if m == self.n:
            return self
        if self.effective_conductor() == 1:
            return MPoly._raw(self.space, dict(self.terms), self.den, m)
        if m % self.n:
            raise ValueError(f"cannot embed conductor {self.n} into {m}")
        step = m // self.n
        out: dict[int, int] = {}
        for k, v in self.terms.items():
            j = k & MASK
            base = k - j
            for jj, t in enumerate(zeta_power_coeffs(m, j * step)):
                if t:
                    out[base + jj] = out.get(base + jj, 0) + v * t
        return MPoly(self.space, out, self.den, m)

    def _align(self, other: "MPoly") -> tuple["MPoly", "MPoly"]:
        if other.space is not self.space and other.space != self.space:
            raise SpaceMismatch(f"{self.space.id} vs {other.space.id}")
        if other.n == self.n:
            return self, other
        ea, eb = self.effective_conductor(), other.effective_conductor()
        if ea == 1:
            m = other.n
        elif eb == 1:
            m = self.n
        else:
            m = lcm(self.n, other.n)
        return self.embed(m), other.embed(m)

    def _lift(self, other) -> "MPoly | None":
        if isinstance(other, MPoly):
            return other
        if _is_scalar(other):
            return MPoly.constant(self.space, other, self.n)
        return None

    # -- arithmetic ----------------------------------------------------------
    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        a, b = self._align(o)
        if not b.terms:
            return a
        if not a.terms:
            return b
        d = lcm(a.den, b.den)
        terms = _kernel.combine(a.terms, d // a.den, b.terms, d // b.den)
        return MPoly._raw(a.space, terms, d, a.n)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._raw(self.space, {k: -v for k, v in self.terms.items()}, self.den, self.n)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        a, b = self._align(o)
        d = lcm(a.den, b.den)
        terms = _kernel.combine(a.terms, d // a.den, b.terms, -(d // b.den))
        return MPoly._raw(a.space, terms, d, a.n)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def _scale(self, c) -> "MPoly":
        if isinstance(c, int):
            if c == 0:
                return MPoly._raw(self.space, {}, 1, self.n)
            return MPoly._raw(self.space, {k: v * c for k, v in self.terms.items()}, self.den, self.n)
        if isinstance(c, Fraction):
            if c == 0:
                return MPoly._raw(self.space, {}, 1, self.n)
            return MPoly._raw(
                self.space, {k: v * c.numerator for k, v in self.terms.items()}, self.den * c.denominator, self.n
            )
        if isinstance(c, CycloNum) and c.is_rational():
            return self._scale(c.coeffs[0])
        return self * MPoly.constant(self.space, c, self.n)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._scale(other)
        o = self._lift(other)
        if o is None:
            return NotImplemented
        a, b = self._align(o)
        if not a.terms or not b.terms:
            return MPoly._raw(a.space, {}, 1, a.n)
        if a.degree() + b.degree() > MASK:
            raise OverflowError("degree exceeds packed exponent range")
        terms = _kernel.mul_terms(a.terms, b.terms, _term_cap)
        n = a.n
        if n > 1:
            terms = _kernel.reduce_zeta(terms, euler_phi(n), MASK, power_table(n))
        return MPoly._raw(a.space, terms, a.den * b.den, n)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = MPoly.constant(self.space, 1, self.n)
        if k == 0:
            return result
        if len(self.terms) == 1:
            (key, v), = self.terms.items()
            if key & MASK == 0 and self.degree() * k <= MASK:
                return MPoly._raw(self.space, {key * k: v**k}, self.den**k, self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __truediv__(self, other):
        if _is_scalar(other):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            if isinstance(other, CycloNum) and not other.is_rational():
                return self * other.inverse()
            if isinstance(other, CycloNum):
                other = other.coeffs[0]
            return self._scale(Fraction(1) / other)
        if isinstance(other, MPoly):
            if other.is_constant():
                return self / other.constant_value()
            return RatFunc(self, other)
        return NotImplemented

    def __rtruediv__(self, other):
        if _is_scalar(other):
            return RatFunc(MPoly.constant(self.space, other, self.n), self)
        return NotImplemented

    # -- comparison ----------------------------------------------------------
    def __eq__(self, other):
        if _is_scalar(other):
            other = MPoly.constant(self.space, other, self.n)
        if isinstance(other, RatFunc):
            return other == self
        if not isinstance(other, MPoly):
            return NotImplemented
        if other.space != self.space:
            return False
        a, b = self._align(other)
        return a.den == b.den and a.terms == b.terms

    __hash__ = None

    # -- substitution and evaluation -----------------------------------------
    def substitute(self, images: Sequence, target: VariableSpace | None = None):
        """Compose with ``images`` (one per variable): polynomials, fractions or scalars."""
        if len(images) != self.space.nvars:
            raise ValueError(f"expected {self.space.nvars} images, got {len(images)}")
        if not self.terms:
            return target.zero() if target is not None else Fraction(0)
        coeffs = sorted(self.coefficients().items(), reverse=True)
        nv = self.space.nvars
        caches: list[dict[int, object]] = [{1: img} for img in images]

        def power(var: int, e: int):
            cache = caches[var]
            val = cache.get(e)
            if val is None:
                half = power(var, e // 2)
                val = half * half
                if e % 2:
                    val = val * images[var]
                cache[e] = val
            return val

        def rec(items, var):
            if var == nv:
                return items[0][1]
            groups: dict[int, list] = {}
            for item in items:
                groups.setdefault(item[0][var], []).append(item)
            degs = sorted(groups, reverse=True)
            acc = None
            prev = degs[0]
            for e in degs:
                val = rec(groups[e], var + 1)
                if acc is None:
                    acc = val
                else:
                    acc = acc * power(var, prev - e) + val
                prev = e
            if prev:
                acc = acc * power(var, prev)
            return acc

        result = rec(coeffs, 0)
        if target is not None and _is_scalar(result):
            return MPoly.constant(target, result)
        return result

    def __call__(self, *point):
        return self.eval(point)

    def eval(self, point: Sequence):
        """Exact value at a point of scalars."""
        if len(point) != self.space.nvars:
            raise ValueError(f"point has {len(point)} coordinates, space has {self.space.nvars}")
        if not self.terms:
            return Fraction(0)
        return self.substitute(list(point))

    def substitute_map(self, mapping: Mapping[str, object], target: VariableSpace | None = None):
        """Substitute by variable name; unmapped variables must not occur."""
        images = []
        for i, name in enumerate(self.space.names):
            if name in mapping:
                images.append(mapping[name])
            else:
                images.append(None)
        used = self.variables_used()
        missing = [nm for nm, img in zip(self.space.names, images) if img is None and nm in used]
        if missing:
            raise KeyError(f"no image for {missing}")
        filler = target.zero() if target is not None else Fraction(0)
        images = [filler if img is None else img for img in images]
        return self.substitute(images, target)

    def substitute_linear(self, matrix: Sequence[Sequence]) -> "MPoly":
        """F(M v) where v is the variable vector."""
        nv = self.space.nvars
        if len(matrix) != nv or any(len(row) != nv for row in matrix):
            raise ValueError("matrix dimension does not match the variable count")
        gens = self.space.gens()
        images = []
        for row in matrix:
            acc = self.space.zero()
            for c, g in zip(row, gens):
                if c != 0:
                    acc = acc + g * c
            images.append(acc)
        return self.substitute(images, self.space)

    def rename(self, target: VariableSpace, order: Sequence[Union[str, int]] | None = None) -> "MPoly":
        """Move to another space, variable i going to ``order[i]`` (default: same position)."""
        idx = [target.var_index(o) for o in order] if order is not None else list(range(self.space.nvars))
        out = {}
        for k, v in self.terms.items():
            z, exps = self.space.unpack(k)
            new = [0] * target.nvars
            for i, e in enumerate(exps):
                if e:
                    new[idx[i]] += e
            out[target.pack(new, z)] = v
        return MPoly._raw(target, out, self.den, self.n)

    def diff(self, var) -> "MPoly":
        i = self.space.var_index(var)
        sh = self.space.shifts[i]
        step = 1 << sh
        out = {}
        for k, v in self.terms.items():
            e = (k >> sh) & MASK
            if e:
                out[k - step] = v * e
        return MPoly._raw(self.space, out, self.den, self.n)

    # -- text ----------------------------------------------------------------
    def sorted_items(self) -> list[tuple[tuple[int, ...], Union[Fraction, CycloNum]]]:
        """Terms in descending graded-lexicographic order."""
        return sorted(self.coefficients().items(), key=lambda it: (sum(it[0]), it[0]), reverse=True)

    def __str__(self) -> str:
        return self.to_text()

    def to_text(self) -> str:
        items = self.sorted_items()
        if not items:
            return "0"
        names = self.space.names
        out = []
        for exps, c in items:
            mono = "*".join(
                (nm if e == 1 else f"{nm}^{e}") for nm, e in zip(names, exps) if e
            )
            cv = c if isinstance(c, CycloNum) else CycloNum(c)
            neg = False
            if cv.is_rational():
                r = cv.coeffs[0]
                neg = r < 0
                ctext = render(-r if neg else r)
                compound = False
            else:
                # parenthesised so zeta symbols never read as variables
                ctext = f"({render(cv)})"
            if mono:
                body = mono if ctext == "1" else f"{ctext}*{mono}"
            else:
                body = ctext
            out.append((neg, body))
        neg, body = out[0]
        text = ("-" if neg else "") + body
        for neg, body in out[1:]:
            text += (" - " if neg else " + ") + body
        return text

    def __repr__(self) -> str:
        shown = self.to_text()
        if len(shown) > 200:
            shown = shown[:200] + "..."
        return f"MPoly[{self.space.id}]({shown})"

    # -- ordering helpers ----------------------------------------------------
    def leading(self) -> tuple[tuple[int, ...], Union[Fraction, CycloNum]]:
        items = self.coefficients()
        if not items:
            raise ValueError("zero polynomial has no leading term")
        exps = max(items, key=lambda e: (sum(e), e))
        return exps, items[exps]


# ---------------------------------------------------------------------------
# module-level operations


def arith(a: MPoly, b: MPoly, op: str) -> MPoly:
    if a.space != b.space:
        raise SpaceMismatch(f"{a.space.id} vs {b.space.id}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def partial_derivative(f: MPoly, var) -> MPoly:
    return f.diff(var)


def substitute_linear(f: MPoly, matrix) -> MPoly:
    return f.substitute_linear(matrix)


def substitute_map(f: MPoly, images, target: VariableSpace | None = None):
    if isinstance(images, Mapping):
        return f.substitute_map(images, target)
    return f.substitute(list(images), target)


def evaluate(f: MPoly, point: Sequence):
    return f.eval(point)


def _monomial_divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


def divide_with_remainder(f: MPoly, g: MPoly) -> tuple[MPoly, MPoly]:
    """Multivariate division by a single divisor in graded-lex order."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    f, g = f._align(g)
    space, n = f.space, f.n
    lead_e, lead_c = g.leading()
    lead_inv = (1 / lead_c) if not isinstance(lead_c, CycloNum) else lead_c.inverse()
    g_items = list(g.coefficients().items())
    rem_terms = dict(f.coefficients())
    quot: dict[tuple, object] = {}
    remainder: dict[tuple, object] = {}
    order = lambda e: (sum(e), e)  # noqa: E731
    while rem_terms:
        e = max(rem_terms, key=order)
        c = rem_terms[e]
        if _monomial_divides(lead_e, e):
            qe = tuple(x - y for x, y in zip(e, lead_e))
            qc = c * lead_inv
            quot[qe] = quot.get(qe, 0) + qc
            for ge, gc in g_items:
                te = tuple(x + y for x, y in zip(qe, ge))
                val = rem_terms.get(te, 0) - qc * gc
                if val == 0:
                    rem_terms.pop(te, None)
                else:
                    rem_terms[te] = val
        else:
            remainder[e] = c
            del rem_terms[e]
    return MPoly.from_coefficients(space, quot, n), MPoly.from_coefficients(space, remainder, n)


def divide_exact(f: MPoly, g: MPoly) -> MPoly:
    """Return q with f = q*g, or raise :class:`NotDivisible` carrying the remainder."""
    q, r = divide_with_remainder(f, g)
    if not r.is_zero():
        raise NotDivisible(r)
    return q


def determinant(matrix: Sequence[Sequence], exact_div: Callable | None = None):
    """Determinant of a square matrix over any commutative ring.

    Cofactor expansion up to 4x4; fraction-free (Bareiss) elimination above,
    which needs ``exact_div`` for ring elements that are not field scalars.
    """
    size = len(matrix)
    if any(len(row) != size for row in matrix):
        raise ValueError("matrix must be square")
    if size == 0:
        return 1
    if size <= 4:
        return _cofactor_det([list(r) for r in matrix])
    return _bareiss_det([list(r) for r in matrix], exact_div)


def _cofactor_det(m):
    size = len(m)
    if size == 1:
        return m[0][0]
    if size == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    total = 0
    for j in range(size):
        entry = m[0][j]
        if _is_zero(entry):
            continue
        minor = [row[:j] + row[j + 1 :] for row in m[1:]]
        term = entry * _cofactor_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def _is_zero(x) -> bool:
    if isinstance(x, (MPoly, RatFunc)):
        return x.is_zero()
    return x == 0


def _field_div(a, b):
    if isinstance(a, int) and isinstance(b, int):
        q = Fraction(a, b)
        return q.numerator if q.denominator == 1 else q
    return a / b


def _bareiss_det(m, exact_div):
    size = len(m)
    div = exact_div or _field_div
    sign = 1
    prev = 1
    for k in range(size - 1):
        if _is_zero(m[k][k]):
            swap = next((i for i in range(k + 1, size) if not _is_zero(m[i][k])), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = num if prev == 1 else div(num, prev)
        prev = m[k][k]
    det = m[size - 1][size - 1]
    return det if sign == 1 else -det


def jacobian_matrix(forms: Sequence[MPoly], variables: Sequence) -> list[list[MPoly]]:
    return [[f.diff(v) for v in variables] for f in forms]


def jacobian_det(forms: Sequence[MPoly], variables: Sequence) -> MPoly:
    if len(forms) != len(variables):
        raise ValueError("jacobian needs as many forms as variables")
    return determinant(jacobian_matrix(forms, variables), exact_div=divide_exact)


# ---------------------------------------------------------------------------
# rational functions


def _univariate_gcd(a: MPoly, b: MPoly) -> MPoly:
    """Monic gcd of univariate polynomials over Q(zeta_n)."""
    a, b = a._align(b)
    while not b.is_zero():
        _, r = divide_with_remainder(a, b)
        a, b = b, r
    if a.is_zero():
        return a
    _, lc = a.leading()
    return a / lc


class RatFunc:
    """Quotient num/den of polynomials.  Equality is cross-multiplication."""

    __slots__ = ("num", "den")

    def __init__(self, num: MPoly, den: MPoly | None = None, normalize: bool = True):
        if den is None:
            den = MPoly.constant(num.space, 1, num.n)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.space != den.space:
            raise SpaceMismatch(f"{num.space.id} vs {den.space.id}")
        num, den = num._align(den)
        if normalize:
            num, den = _normalize_pair(num, den)
        self.num = num
        self.den = den

    @property
    def space(self) -> VariableSpace:
        return self.num.space

    @property
    def n(self) -> int:
        return self.num.n

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.is_zero()

    def _lift(self, other) -> "RatFunc | None":
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, MPoly):
            return RatFunc(other, normalize=False)
        if _is_scalar(other):
            return RatFunc(MPoly.constant(self.space, other, self.n), normalize=False)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if o.den == self.den:
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, normalize=False)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if o.den == self.den:
            return RatFunc(self.num - o.num, self.den)
        return RatFunc(self.num * o.den - o.num * self.den, self.den * o.den)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return RatFunc(self.den**-k, self.num**-k)
        return RatFunc(self.num**k, self.den**k, normalize=False)

    def inverse(self) -> "RatFunc":
        return RatFunc(self.den, self.num)

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return ratfunc_eq(self, o)

    __hash__ = None

    def substitute(self, images, target: VariableSpace | None = None):
        num = self.num.substitute(images, target)
        den = self.den.substitute(images, target)
        if _is_scalar(den) and den == 0:
            raise ZeroDivisionError("denominator vanishes at substitution")
        if isinstance(den, (MPoly, RatFunc)) and den.is_zero():
            raise ZeroDivisionError("denominator vanishes at substitution")
        return num / den

    def eval(self, point):
        return self.substitute(list(point))

    def diff(self, var) -> "RatFunc":
        return RatFunc(self.num.diff(var) * self.den - self.num * self.den.diff(var), self.den * self.den)

    def as_poly(self) -> MPoly:
        """The polynomial equal to this fraction, or NotDivisible."""
        return divide_exact(self.num, self.den)

    def __str__(self):
        if self.den.is_constant() and self.den.constant_value() == 1:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RatFunc[{self.space.id}]({self})"


def _normalize_pair(num: MPoly, den: MPoly) -> tuple[MPoly, MPoly]:
    if num.is_zero():
        return num, MPoly.constant(num.space, 1, num.n)
    if den.is_constant():
        return num / den.constant_value(), MPoly.constant(num.space, 1, num.n)
    if num.space.nvars == 1:
        g = _univariate_gcd(num, den)
        if g.degree() > 0:
            num = divide_exact(num, g)
            den = divide_exact(den, g)
    else:
        # cancel the common monomial factor
        shifts = num.space.shifts
        common = None
        for k in list(num.terms) + list(den.terms):
            exps = [(k >> sh) & MASK for sh in shifts]
            common = exps if common is None else [min(a, b) for a, b in zip(common, exps)]
            if not any(common):
                break
        if common and any(common):
            shift = num.space.pack(common)
            num = MPoly._raw(num.space, {k - shift: v for k, v in num.terms.items()}, num.den, num.n)
            den = MPoly._raw(den.space, {k - shift: v for k, v in den.terms.items()}, den.den, den.n)
    # make the denominator's leading coefficient 1
    _, lc = den.leading()
    if lc != 1:
        num, den = num / lc, den / lc
    return num, den


def ratfunc_eq(r1: RatFunc, r2: RatFunc) -> bool:
    if r1.space != r2.space:
        raise SpaceMismatch(f"{r1.space.id} vs {r2.space.id}")
    return (r1.num * r2.den - r2.num * r1.den).is_zero()


def as_ratfunc(x, space: VariableSpace) -> RatFunc:
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, MPoly):
        return RatFunc(x, normalize=False)
    return RatFunc(MPoly.constant(space, x), normalize=False)


__all__ = [
    "BITS",
    "DEFAULT_TERM_CAP",
    "MPoly",
    "NotDivisible",
    "RatFunc",
    "SpaceMismatch",
    "TermCapExceeded",
    "VariableSpace",
    "arith",
    "as_ratfunc",
    "determinant",
    "divide_exact",
    "divide_with_remainder",
    "evaluate",
    "get_space",
    "get_term_cap",
    "jacobian_det",
    "jacobian_matrix",
    "partial_derivative",
    "ratfunc_eq",
    "register_space",
    "registered_spaces",
    "set_term_cap",
    "substitute_linear",
    "substitute_map",
    "term_cap",
]
