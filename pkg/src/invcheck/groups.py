"""Finite matrix groups over cyclotomic fields.

Matrices are stored as flat integer coordinate vectors over the power basis
of Q(zeta_n) with one shared denominator, which keeps products, hashing and
closure enumeration cheap compared with entry-wise ``CycloNum`` arithmetic.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence

from .exactnum import (
    CycloNum,
    common_conductor,
    euler_phi,
    imag_unit,
    omega,
    sqrt2,
    sqrt3,
    sqrt5,
    sqrt_minus3,
    epsilon,
    to_cyclo,
    zeta_power_coeffs,
)
from .polyring import MPoly

__all__ = [
    "Mat",
    "GenSet",
    "GroupClosure",
    "ClosureCapExceeded",
    "closure",
    "evaluate_word",
    "verify_matrix_relations",
    "semi_invariant_scalar",
    "express_in_basis",
    "center_order",
    "integrality_report",
    "get_genset",
    "list_gensets",
    "hessian_matrices",
    "induced6_matrices",
]


class ClosureCapExceeded(RuntimeError):
    pass


@lru_cache(maxsize=None)
def _high_powers(n: int) -> tuple[tuple[int, ...], ...]:
    phi = euler_phi(n)
    return tuple(zeta_power_coeffs(n, e) for e in range(2 * phi - 1))


def _entry_ints(c: CycloNum, scale: int) -> list[int]:
    return [int(x * scale) for x in c.coeffs]


def _convolve(x: Sequence[int], y: Sequence[int], n: int, phi: int) -> list[int]:
    acc = [0] * (2 * phi - 1)
    for p, a in enumerate(x):
        if a:
            for q, b in enumerate(y):
                if b:
                    acc[p + q] += a * b
    return _reduce(acc, n, phi)


def _reduce(acc: list[int], n: int, phi: int) -> list[int]:
    table = _high_powers(n)
    for e in range(len(acc) - 1, phi - 1, -1):
        c = acc[e]
        if c:
            for j, t in enumerate(table[e]):
                if t:
                    acc[j] += c * t
    return acc[:phi]


class Mat:
    """Exact square matrix over Q(zeta_n); immutable and hashable."""

    __slots__ = ("dim", "n", "phi", "num", "den", "_hash")

    def __init__(self, dim: int, n: int, num: Sequence[int], den: int):
        g = gcd(den, *num) if any(num) else den
        if den < 0:
            g = -g
        self.dim = dim
        self.n = n
        self.phi = euler_phi(n)
        self.num = tuple(v // g for v in num)
        self.den = den // g
        self._hash = None

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], n: int | None = None) -> "Mat":
        dim = len(rows)
        if any(len(r) != dim for r in rows):
            raise ValueError("matrix must be square")
        entries = [to_cyclo(x, 1) if not isinstance(x, CycloNum) else x for r in rows for x in r]
        if n is None:
            n = common_conductor(entries)
        entries = [to_cyclo(e, n) for e in entries]
        den = 1
        for e in entries:
            for c in e.coeffs:
                den = lcm(den, c.denominator)
        num = [v for e in entries for v in _entry_ints(e, den)]
        return cls(dim, n, num, den)

    @classmethod
    def identity(cls, dim: int, n: int = 1) -> "Mat":
        return cls.scalar(1, dim, n)

    @classmethod
    def scalar(cls, c, dim: int, n: int | None = None) -> "Mat":
        c = c if isinstance(c, CycloNum) else to_cyclo(c, 1)
        zero = to_cyclo(0, 1)
        rows = [[c if i == j else zero for j in range(dim)] for i in range(dim)]
        return cls.from_rows(rows, n if n is not None else c.n)

    def entry(self, i: int, j: int) -> CycloNum:
        off = (i * self.dim + j) * self.phi
        return CycloNum.from_coeffs(self.n, [Fraction(v, self.den) for v in self.num[off : off + self.phi]])

    def rows(self) -> tuple[tuple[CycloNum, ...], ...]:
        return tuple(tuple(self.entry(i, j) for j in range(self.dim)) for i in range(self.dim))

    def embed(self, n: int) -> "Mat":
        return self if n == self.n else Mat.from_rows(self.rows(), n)

    def _align(self, other: "Mat") -> tuple["Mat", "Mat"]:
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        if self.n == other.n:
            return self, other
        n = lcm(self.n, other.n)
        return self.embed(n), other.embed(n)

    def __mul__(self, other):
        if not isinstance(other, Mat):
            if isinstance(other, (int, Fraction, CycloNum)):
                return self.scale(other)
            return NotImplemented
        a, b = self._align(other)
        d, n, phi = a.dim, a.n, a.phi
        an, bn = a.num, b.num
        out: list[int] = []
        for i in range(d):
            for j in range(d):
                acc = [0] * (2 * phi - 1)
                for k in range(d):
                    ao = (i * d + k) * phi
                    bo = (k * d + j) * phi
                    for p in range(phi):
                        x = an[ao + p]
                        if x:
                            for q in range(phi):
                                y = bn[bo + q]
                                if y:
                                    acc[p + q] += x * y
                out.extend(_reduce(acc, n, phi) if phi > 1 else acc)
        return Mat(d, n, out, a.den * b.den)

    __rmul__ = __mul__

    def scale(self, c) -> "Mat":
        c = c if isinstance(c, CycloNum) else to_cyclo(c, 1)
        n = lcm(self.n, c.n)
        a = self.embed(n)
        c = to_cyclo(c, n)
        cden = 1
        for v in c.coeffs:
            cden = lcm(cden, v.denominator)
        cv = _entry_ints(c, cden)
        out: list[int] = []
        for k in range(a.dim * a.dim):
            out.extend(_convolve(a.num[k * a.phi : (k + 1) * a.phi], cv, n, a.phi))
        return Mat(a.dim, n, out, a.den * cden)

    def __neg__(self):
        return Mat(self.dim, self.n, [-v for v in self.num], self.den)

    def __pow__(self, k: int) -> "Mat":
        if k < 0:
            return self.inverse() ** (-k)
        result = Mat.identity(self.dim, self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        if self.dim != other.dim:
            return False
        if self.n != other.n:
            a, b = self._align(other)
            return a.num == b.num and a.den == b.den
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.dim, self.num, self.den)) if self.n <= 2 else hash((self.dim, self.n, self.num, self.den))
        return self._hash

    def is_scalar(self) -> bool:
        d, phi = self.dim, self.phi
        first = self.num[0:phi]
        for i in range(d):
            for j in range(d):
                off = (i * d + j) * phi
                block = self.num[off : off + phi]
                if i == j:
                    if block != first:
                        return False
                elif any(block):
                    return False
        return True

    def projective_canonical(self) -> "Mat":
        """Scale so the first nonzero entry (row-major) equals 1."""
        phi = self.phi
        for k in range(self.dim * self.dim):
            block = self.num[k * phi : (k + 1) * phi]
            if any(block):
                if block[0] == self.den and not any(block[1:]):
                    return self
                lead = CycloNum.from_coeffs(self.n, [Fraction(v, self.den) for v in block])
                return self.scale(lead.inverse())
        raise ZeroDivisionError("zero matrix has no projective class")

    def trace(self) -> CycloNum:
        total = to_cyclo(0, self.n)
        for i in range(self.dim):
            total = total + self.entry(i, i)
        return total

    def det(self) -> CycloNum:
        m = [list(r) for r in self.rows()]
        d = self.dim
        result = to_cyclo(1, self.n)
        for col in range(d):
            piv = next((r for r in range(col, d) if m[r][col]), None)
            if piv is None:
                return to_cyclo(0, self.n)
            if piv != col:
                m[col], m[piv] = m[piv], m[col]
                result = -result
            p = m[col][col]
            result = result * p
            inv = p.inverse()
            for r in range(col + 1, d):
                if m[r][col]:
                    f = m[r][col] * inv
                    m[r] = [x - f * y for x, y in zip(m[r], m[col])]
        return result

    def inverse(self) -> "Mat":
        d = self.dim
        m = [list(r) + [to_cyclo(1 if i == j else 0, self.n) for j in range(d)] for i, r in enumerate(self.rows())]
        for col in range(d):
            piv = next((r for r in range(col, d) if m[r][col]), None)
            if piv is None:
                raise ZeroDivisionError("singular matrix")
            m[col], m[piv] = m[piv], m[col]
            inv = m[col][col].inverse()
            m[col] = [x * inv for x in m[col]]
            for r in range(d):
                if r != col and m[r][col]:
                    f = m[r][col]
                    m[r] = [x - f * y for x, y in zip(m[r], m[col])]
        return Mat.from_rows([row[d:] for row in m], self.n)

    def to_text(self) -> str:
        from .exactnum import render

        return "[" + "; ".join(", ".join(render(e) for e in row) for row in self.rows()) + "]"

    def __repr__(self):
        return f"Mat({self.to_text()})"


# ---------------------------------------------------------------------------
# words and relations

_TOKEN = re.compile(r"\s*(\(|\)|\^-?\d+|\{[A-Za-z0-9_]+\}|[·*]|-|I\b|[A-Z][a-z0-9]*)")


def evaluate_word(word: str, gens: Mapping[str, Mat], literals: Mapping[str, Mat] | None = None, dim: int | None = None) -> Mat:
    """Evaluate a product like ``(ABF)^2`` or ``-FAB`` or ``{CD}``.

    Generator names are a capital letter followed by lowercase letters or
    digits (``S2``, ``M3``); ``I`` is the identity, ``{name}`` a literal.
    """
    literals = literals or {}
    if dim is None:
        dim = next(iter(gens.values())).dim
    n = lcm(*(g.n for g in gens.values())) if gens else 1
    tokens = []
    pos = 0
    text = word.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"cannot parse word {word!r} at {text[pos:]!r}")
        tokens.append(m.group(1))
        pos = m.end()

    def parse_seq(i: int) -> tuple[Mat, int]:
        acc = Mat.identity(dim, n)
        sign = 1
        while i < len(tokens) and tokens[i] != ")":
            tok = tokens[i]
            if tok in ("·", "*"):
                i += 1
                continue
            if tok == "-":
                sign = -sign
                i += 1
                continue
            if tok == "(":
                factor, i = parse_seq(i + 1)
                i += 1  # closing parenthesis
            elif tok == "I":
                factor, i = Mat.identity(dim, n), i + 1
            elif tok.startswith("{"):
                factor, i = literals[tok[1:-1]], i + 1
            elif tok in gens:
                factor, i = gens[tok], i + 1
            else:
                # split runs like "ABF" into single generator names
                raise ValueError(f"unknown generator {tok!r}")
            if i < len(tokens) and tokens[i].startswith("^"):
                factor = factor ** int(tokens[i][1:])
                i += 1
            acc = acc * factor
        return (-acc if sign < 0 else acc), i

    result, _ = parse_seq(0)
    return result


def _split_word(word: str, names: Iterable[str]) -> str:
    """Insert separators so a run like ``ABF`` or ``C^2D`` parses as generators."""
    names = sorted(names, key=len, reverse=True)
    out = []
    i = 0
    while i < len(word):
        if word[i] == "{":
            j = word.index("}", i)
            out.append(word[i : j + 1])
            i = j + 1
            continue
        for name in names:
            if word.startswith(name, i):
                out.append(" " + name + " ")
                i += len(name)
                break
        else:
            out.append(word[i])
            i += 1
    return "".join(out)


# ---------------------------------------------------------------------------
# generating sets


@dataclass
class GenSet:
    name: str
    dim: int
    gens: dict[str, Mat]
    relations: list[str] = field(default_factory=list)
    literals: dict[str, Mat] = field(default_factory=dict)
    anchor: str = ""
    note: str = ""

    def word(self, text: str) -> Mat:
        return evaluate_word(_split_word(text, self.gens), self.gens, self.literals, self.dim)


@dataclass
class GroupClosure:
    name: str
    mode: str
    elements: list[Mat]

    @property
    def order(self) -> int:
        return len(self.elements)


def closure(gens: GenSet | Sequence[Mat], mode: str = "matrix", cap: int = 100_000) -> GroupClosure:
    """Breadth-first closure; projective mode works with canonical scalings."""
    if isinstance(gens, GenSet):
        name, mats = gens.name, list(gens.gens.values())
    else:
        name, mats = "custom", list(gens)
    if mode not in ("matrix", "projective"):
        raise ValueError("mode must be 'matrix' or 'projective'")
    n = lcm(*(m.n for m in mats))
    mats = [m.embed(n) for m in mats]
    canon = (lambda m: m.projective_canonical()) if mode == "projective" else (lambda m: m)
    mats = [canon(m) for m in mats]
    ident = Mat.identity(mats[0].dim, n)
    seen = {ident: None}
    order = [ident]
    queue = deque([ident])
    while queue:
        g = queue.popleft()
        for s in mats:
            h = canon(g * s)
            if h not in seen:
                seen[h] = None
                order.append(h)
                if len(order) > cap:
                    raise ClosureCapExceeded(f"{name}: more than {cap} elements")
                queue.append(h)
    return GroupClosure(name, mode, order)


def verify_matrix_relations(gens: GenSet) -> list[dict]:
    out = []
    for rel in gens.relations:
        parts = [p.strip() for p in rel.split("=")]
        values = [gens.word(p) for p in parts]
        ok = all(v == values[0] for v in values[1:])
        entry = {"relation": rel, "status": "pass" if ok else "fail"}
        if not ok:
            entry["witness"] = {p: v.to_text() for p, v in zip(parts, values)}
        out.append(entry)
    return out


def center_order(gc: GroupClosure, generators: Sequence[Mat] | None = None) -> int:
    """Number of elements commuting with every generator (or every element)."""
    test = list(generators) if generators is not None else gc.elements
    return sum(1 for g in gc.elements if all(g * s == s * g for s in test))


def scalar_subgroup_order(gc: GroupClosure) -> int:
    return sum(1 for g in gc.elements if g.is_scalar())


def integrality_report(gc: GroupClosure) -> list[dict]:
    rows = []
    for g in gc.elements:
        d, t = g.det(), g.trace()
        rows.append(
            {
                "det": d,
                "trace": t,
                "integral": d.is_integral_rational() and t.is_integral_rational(),
            }
        )
    return rows


# ---------------------------------------------------------------------------
# forms under matrices


def semi_invariant_scalar(f: MPoly, g: Mat | Sequence[Sequence]):
    """Return lambda with f(g x) = lambda f(x), or None if no such scalar exists."""
    rows = g.rows() if isinstance(g, Mat) else g
    image = f.substitute_linear(rows)
    if not f.terms:
        return to_cyclo(0, 1) if not image.terms else None
    key, _ = f.leading()
    ratio = image.coefficient(key) / f.coefficient(key)
    return ratio if image == f * ratio else None


def express_in_basis(f: MPoly, basis: Sequence[MPoly]):
    """Coefficients c with f = sum c_i basis_i, or None."""
    monos: dict = {}
    columns = []
    for b in list(basis) + [f]:
        col = b.coefficients()
        columns.append(col)
        for m in col:
            monos.setdefault(m, len(monos))
    nrows, ncols = len(monos), len(basis)
    n = common_conductor(c for col in columns for c in col.values())
    zero = to_cyclo(0, n)
    aug = [[zero] * (ncols + 1) for _ in range(nrows)]
    for j, col in enumerate(columns):
        for m, c in col.items():
            aug[monos[m]][j] = to_cyclo(c, n)
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if aug[i][c]), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = aug[r][c].inverse()
        aug[r] = [x * inv for x in aug[r]]
        for i in range(nrows):
            if i != r and aug[i][c]:
                fac = aug[i][c]
                aug[i] = [x - fac * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    if any(aug[i][ncols] for i in range(r, nrows)):
        return None
    sol = [zero] * ncols
    for i, c in enumerate(pivots):
        sol[c] = aug[i][ncols]
    return sol


# ---------------------------------------------------------------------------
# registry


def hessian_matrices() -> dict[str, Mat]:
    w = omega()
    s = sqrt_minus3()
    return {
        "A": Mat.from_rows([[0, 1, 0], [0, 0, 1], [1, 0, 0]], 3),
        "B": Mat.from_rows([[1, 0, 0], [0, 0, 1], [0, 1, 0]], 3),
        "C": Mat.from_rows([[1, 0, 0], [0, w, 0], [0, 0, w**2]], 3),
        "D": Mat.from_rows([[1, 0, 0], [0, w, 0], [0, 0, w]], 3),
        "E": Mat.from_rows([[1, 1, 1], [1, w, w**2], [1, w**2, w]], 3).scale(s.inverse()),
    }


def induced6_matrices() -> dict[str, Mat]:
    """Actions on (X, Y, Z, phi, Q1, Q2); row i gives the image of coordinate i."""
    w = omega()
    wb = w**2
    s = sqrt_minus3()
    e_int = [
        [1, 1, 1, 6, 3, 3],
        [1, 1, 1, 6, 3 * wb, 3 * w],
        [1, 1, 1, 6, 3 * w, 3 * wb],
        [1, 1, 1, -3, 0, 0],
        [3, 3 * wb, 3 * w, 0, 0, 0],
        [3, 3 * w, 3 * wb, 0, 0, 0],
    ]
    return {
        "A": _perm_matrix([1, 2, 0, 3, 4, 5], 3),
        "B": _perm_matrix([0, 2, 1, 3, 5, 4], 3),
        "C": Mat.from_rows(_diag([1, 1, 1, 1, wb, w]), 3),
        "E": Mat.from_rows(e_int, 3).scale((s**3).inverse()),
    }


def induced6_det_display() -> Mat:
    """The integer matrix printed inside the determinant display for E."""
    w = omega()
    wb = w**2
    return Mat.from_rows(
        [
            [1, 1, 1, 9, 3, 3],
            [1, 1, 1, 9, 3 * wb, 3 * w],
            [1, 1, 1, 9, 3 * w, 3 * wb],
            [1, 1, 1, 0, 0, 0],
            [3, 3 * wb, 3 * w, 0, 0, 0],
            [3, 3 * w, 3 * wb, 0, 0, 0],
        ],
        3,
    )


def _perm_matrix(images: Sequence[int], n: int = 1, signs: Sequence[int] | None = None) -> Mat:
    """Row i has a single entry at column images[i]."""
    d = len(images)
    signs = signs or [1] * d
    return Mat.from_rows([[signs[i] if j == images[i] else 0 for j in range(d)] for i in range(d)], n)


def _diag(values: Sequence) -> list[list]:
    d = len(values)
    return [[values[i] if i == j else 0 for j in range(d)] for i in range(d)]


def _burkhardt() -> GenSet:
    w = omega()
    s = sqrt_minus3()
    b = Mat.from_rows(
        [
            [1, 2, 0, 0, 0],
            [1, -1, 0, 0, 0],
            [0, 0, 1, 1, 1],
            [0, 0, 1, w, w**2],
            [0, 0, 1, w**2, w],
        ],
        3,
    ).scale(s.inverse())
    gens = {
        "B": b,
        "C": _perm_matrix([0, 1, 4, 2, 3], 3),
        "D": _perm_matrix([0, 2, 1, 3, 4], 3, [-1] * 5),
        "S2": Mat.from_rows(_diag([1, w**2, 1, w**2, w**2]), 3),
    }
    lit = {
        "B2": _perm_matrix([0, 1, 2, 4, 3], 3, [-1] * 5),
        "CD": _perm_matrix([0, 2, 4, 1, 3], 3, [-1] * 5),
        "DC": _perm_matrix([0, 4, 1, 2, 3], 3, [-1] * 5),
        "C2D": _perm_matrix([0, 2, 3, 4, 1], 3, [-1] * 5),
        "DC2": _perm_matrix([0, 3, 1, 4, 2], 3, [-1] * 5),
        "CDsq": _perm_matrix([0, 4, 3, 2, 1], 3),
        "DCsq": _perm_matrix([0, 3, 4, 1, 2], 3),
    }
    rels = [
        "B^4 = I",
        "C^3 = I",
        "D^2 = I",
        "S2^3 = I",
        "B^2 = {B2}",
        "CD = {CD}",
        "DC = {DC}",
        "C^2D = {C2D}",
        "DC^2 = {DC2}",
        "(CD)^2 = (DC^2)^2 = {CDsq}",
        "(DC)^2 = (C^2D)^2 = {DCsq}",
    ]
    return GenSet("burkhardt", 5, gens, rels, lit, "Burkhardt generators B, C, D, S2")


def _maschke() -> GenSet:
    w = omega()
    s = sqrt_minus3()
    i = imag_unit()
    e = Mat.from_rows(
        [[s, 0, 0, 0], [0, 1, 1, 1], [0, 1, w, w**2], [0, 1, w**2, w]],
        3,
    ).scale(s.inverse())
    gens = {
        "A": _perm_matrix([0, 2, 3, 1]),
        "B": _perm_matrix([0, 1, 3, 2], 1, [-1, 1, 1, 1]),
        "C": Mat.from_rows(_diag([1, 1, w, w**2]), 3),
        "D": Mat.from_rows(_diag([w, 1, w, w]), 3),
        "E": e,
        "F": _perm_matrix([2, 1, 0, 3], 1, [-1, 1, -1, -1]),
        "J": Mat.scalar(i, 4),
    }
    lit = {
        "AB": _perm_matrix([0, 3, 2, 1], 1, [-1, 1, 1, 1]),
        "BA": _perm_matrix([0, 2, 1, 3], 1, [-1, 1, 1, 1]),
        "ABF": _perm_matrix([2, 3, 0, 1], 1, [1, -1, -1, 1]),
        "BFA": _perm_matrix([3, 2, 1, 0], 1, [1, 1, -1, -1]),
        "BFB": _perm_matrix([3, 1, 2, 0], 1, [1, 1, -1, 1]),
        "ABFBFA": _perm_matrix([1, 0, 3, 2], 1, [-1, 1, -1, 1]),
    }
    rels = [
        "B^2 = I",
        "F^2 = I",
        "(AB)^2 = I",
        "(BA)^2 = I",
        "(BFB)^2 = I",
        "(ABF)^2 = -I",
        "(BFA)^2 = -I",
        "(ABF·BFA)^2 = -I",
        "BFB = FBF",
        "ABF = -FAB",
        "AB = {AB}",
        "BA = {BA}",
        "ABF = {ABF}",
        "BFA = {BFA}",
        "BFB = {BFB}",
        "ABF·BFA = {ABFBFA}",
    ]
    return GenSet("maschke", 4, gens, rels, lit, "Maschke generators on P^3")


def _hessian216() -> GenSet:
    gens = hessian_matrices()
    rels = ["A^3 = I", "B^2 = I", "C^3 = I", "D^3 = I", "E^4 = I"]
    return GenSet("hessian216", 3, gens, rels, {}, "Hessian group generators A, B, C, D, E")


def _h72() -> GenSet:
    gens = {k: v for k, v in hessian_matrices().items() if k != "D"}
    rels = ["A^3 = I", "B^2 = I", "C^3 = I", "E^4 = I"]
    return GenSet("h72", 3, gens, rels, {}, "subgroup H generated by A, B, C, E")


def _g3() -> GenSet:
    r3 = sqrt3()
    gens = {
        "M3": Mat.from_rows([[1, 2], [1, -1]], 12).scale(r3.inverse()),
        "N3": Mat.from_rows(_diag([1, omega()]), 3),
    }
    return GenSet("g3", 2, gens, [], {}, "code group G3")


def _h2() -> GenSet:
    r2 = sqrt2()
    gens = {
        "M2": Mat.from_rows([[1, 1], [1, -1]], 8).scale(r2.inverse()),
        "N2": Mat.from_rows(_diag([1, imag_unit()]), 4),
    }
    return GenSet("h2", 2, gens, [], {}, "code group H2 of order 192")


def _g4() -> GenSet:
    w = omega()
    r3 = sqrt3()
    gens = {
        "P": _perm_matrix([1, 0, 2]),
        "R": _perm_matrix([1, 2, 0]),
        "Dg": Mat.from_rows(_diag([1, 1, w]), 3),
        "T": Mat.from_rows([[1, 1, 1], [1, w, w**2], [1, w**2, w]], 12).scale(r3.inverse()),
    }
    return GenSet("g4", 3, gens, [], {}, "code group G4 of order 2592")


def _induced6() -> GenSet:
    gens = induced6_matrices()
    lit = {"E2": _perm_matrix([0, 2, 1, 3, 5, 4], 3, [-1] * 6)}
    rels = ["A^3 = I", "B^2 = I", "C^3 = I", "E^4 = I", "E^2 = {E2}"]
    return GenSet("induced6", 6, gens, rels, lit, "actions of A, B, C, E on (X, Y, Z, phi, Q1, Q2)")


def _klein() -> GenSet:
    e = epsilon()
    r5 = sqrt5()
    gens = {
        "S": Mat.from_rows(_diag([1, e**4, e]), 5),
        "T": Mat.from_rows(
            [[1, 1, 1], [2, e**2 + e**3, e + e**4], [2, e + e**4, e**2 + e**3]], 5
        ).scale(r5.inverse()),
        "U": _perm_matrix([0, 2, 1], 1, [-1, -1, -1]),
    }
    return GenSet("icosahedral", 3, gens, [], {}, "icosahedral action on (A0, A1, A2)")


_BUILDERS = {
    "hessian216": _hessian216,
    "h72": _h72,
    "burkhardt": _burkhardt,
    "maschke": _maschke,
    "g3": _g3,
    "h2": _h2,
    "g4": _g4,
    "induced6": _induced6,
    "icosahedral": _klein,
}


@lru_cache(maxsize=None)
def get_genset(name: str) -> GenSet:
    try:
        return _BUILDERS[name]()
    except KeyError:
        raise KeyError(f"unknown generating set {name!r}") from None


def list_gensets() -> list[str]:
    return list(_BUILDERS)
