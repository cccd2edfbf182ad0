"""Registry of named invariant forms, each built in its own variable space.

Every form is written once as a builder over a :class:`Context`.  A context
holds one value per variable of a space.  The values can be polynomial
generators (symbolic build) or exact scalars (fast random evaluation), so the
same builder serves expansion checks and Schwartz-Zippel checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping, Sequence

from .exactnum import CycloNum, epsilon, sqrt5, to_cyclo
from .polyring import MPoly, VariableSpace, get_space

__all__ = [
    "Context",
    "FormDef",
    "UnknownForm",
    "build",
    "get_form",
    "list_forms",
    "pullback_z",
    "pullback_images",
    "symbolic_context",
]


class UnknownForm(KeyError):
    pass


class Context:
    """Variable values for one space plus a per-context cache of evaluated forms."""

    __slots__ = ("space", "values", "origin", "_cache")

    def __init__(self, space: VariableSpace | str, values: Sequence):
        self.space = get_space(space) if isinstance(space, str) else space
        if len(values) != self.space.nvars:
            raise ValueError(f"space {self.space.id} needs {self.space.nvars} values")
        self.values = tuple(values)
        self.origin: tuple | None = None
        self._cache: dict[str, object] = {}

    def __getitem__(self, name: str):
        return self.values[self.space.var_index(name)]

    def form(self, name: str):
        hit = self._cache.get(name)
        if hit is None:
            fd = get_form(name)
            if fd.space != self.space.id:
                raise ValueError(f"form {name} lives in {fd.space}, not {self.space.id}")
            hit = fd.builder(self)
            self._cache[name] = hit
        return hit

    def derive(self, space_id: str, values: Sequence) -> "Context":
        return Context(space_id, values)

    def transform(self, matrix) -> "Context":
        """Context at M·v, so ``transform(M).form(F)`` is F composed with M."""
        rows = matrix.rows() if hasattr(matrix, "rows") else matrix
        vals = []
        for row in rows:
            acc = 0
            for c, v in zip(row, self.values):
                if c:
                    acc = acc + c * v
            vals.append(acc)
        return Context(self.space, vals)


@dataclass(frozen=True)
class FormDef:
    name: str
    space: str
    degree: int
    builder: Callable[[Context], object]
    anchor: str
    homogeneous: bool = True


_FORMS: dict[str, FormDef] = {}
_BUILT: dict[str, MPoly] = {}
_SYMBOLIC: dict[str, Context] = {}


def _register(name: str, space: str, degree: int, anchor: str, homogeneous: bool = True):
    def deco(fn):
        if name in _FORMS:
            raise ValueError(f"duplicate form {name}")
        _FORMS[name] = FormDef(name, space, degree, fn, anchor, homogeneous)
        return fn

    return deco


def _simple(name: str, space: str, degree: int, anchor: str, fn: Callable, homogeneous: bool = True):
    _register(name, space, degree, anchor, homogeneous)(fn)


def get_form(name: str) -> FormDef:
    try:
        return _FORMS[name]
    except KeyError:
        raise UnknownForm(f"unknown form {name!r}") from None


def list_forms(space: str | None = None) -> list[FormDef]:
    return [fd for fd in _FORMS.values() if space is None or fd.space == space]


def symbolic_context(space_id: str) -> Context:
    ctx = _SYMBOLIC.get(space_id)
    if ctx is None:
        ctx = Context(space_id, get_space(space_id).gens())
        _SYMBOLIC[space_id] = ctx
    return ctx


def build(name: str) -> MPoly:
    """Expand a registered form; homogeneous forms are checked against their degree."""
    poly = _BUILT.get(name)
    if poly is None:
        fd = get_form(name)
        poly = symbolic_context(fd.space).form(name)
        if not isinstance(poly, MPoly):
            poly = MPoly.constant(get_space(fd.space), poly)
        if fd.homogeneous and poly.terms:
            if not poly.is_homogeneous() or poly.degree() != fd.degree:
                raise AssertionError(f"form {name} is not homogeneous of degree {fd.degree}")
        _BUILT[name] = poly
    return poly


# ---------------------------------------------------------------------------
# shared formulas (work on polynomials and on scalars alike)


def hess_c6(a, b, c):
    return a**6 + b**6 + c**6 - 10 * (a**3 * b**3 + b**3 * c**3 + c**3 * a**3)


def hess_c9(a, b, c):
    return (a**3 - b**3) * (b**3 - c**3) * (c**3 - a**3)


def hess_c12(a, b, c):
    s = a**3 + b**3 + c**3
    return s * (s**3 + 216 * a**3 * b**3 * c**3)


def hess_fc12(a, b, c):
    s = a**3 + b**3 + c**3
    p = a * b * c
    return p * (27 * p**3 - s**3)


def hess_c18(a, b, c):
    s = a**3 + b**3 + c**3
    p3 = a**3 * b**3 * c**3
    return s**6 - 540 * p3 * s**3 - 5832 * p3**2


def vandermonde3(a, b, c):
    return (a - b) * (b - c) * (c - a)


def _cubic_triple(ctx: Context, names: Sequence[str]):
    return tuple(ctx[n] for n in names)


# ---------------------------------------------------------------------------
# z-space: Hessian invariants and the cubic coordinates

_Z = ("z1", "z2", "z3")
_HESS = "hessian invariants"

_simple("X", "z3", 3, "cubic coordinates", lambda c: c["z1"] ** 3)
_simple("Y", "z3", 3, "cubic coordinates", lambda c: c["z2"] ** 3)
_simple("Z", "z3", 3, "cubic coordinates", lambda c: c["z3"] ** 3)
_simple("phi", "z3", 3, "cubic coordinates", lambda c: c["z1"] * c["z2"] * c["z3"])
_simple("psi", "z3", 3, "cubic coordinates", lambda c: c["z1"] ** 3 + c["z2"] ** 3 + c["z3"] ** 3)
_simple(
    "chi",
    "z3",
    6,
    "cubic coordinates",
    lambda c: c["z1"] ** 3 * c["z2"] ** 3 + c["z2"] ** 3 * c["z3"] ** 3 + c["z3"] ** 3 * c["z1"] ** 3,
)
_simple(
    "Q1",
    "z3",
    3,
    "cubic coordinates",
    lambda c: c["z1"] * c["z2"] ** 2 + c["z2"] * c["z3"] ** 2 + c["z3"] * c["z1"] ** 2,
)
_simple(
    "Q2",
    "z3",
    3,
    "cubic coordinates",
    lambda c: c["z1"] ** 2 * c["z2"] + c["z2"] ** 2 * c["z3"] + c["z3"] ** 2 * c["z1"],
)
_simple("G", "z3", 3, "resolvent roots", lambda c: vandermonde3(*_cubic_triple(c, _Z)))
_simple("H", "z3", 3, "resolvent roots", lambda c: c.form("psi") + 6 * c.form("phi"))
_simple("K", "z3", 3, "resolvent roots", lambda c: c.form("psi") - 3 * c.form("phi"))
_simple("C6", "z3", 6, _HESS, lambda c: hess_c6(*_cubic_triple(c, _Z)))
_simple("C9", "z3", 9, _HESS, lambda c: hess_c9(*_cubic_triple(c, _Z)))
_simple("C12", "z3", 12, _HESS, lambda c: hess_c12(*_cubic_triple(c, _Z)))
_simple("FC12", "z3", 12, _HESS, lambda c: hess_fc12(*_cubic_triple(c, _Z)))
_simple("C18", "z3", 18, _HESS, lambda c: hess_c18(*_cubic_triple(c, _Z)))


def _hessian_mats():
    from .groups import hessian_matrices

    return hessian_matrices()


# g-map: g_i are x = Q1 - Q2 composed with E, EC, EC^2, I, C, C^2
_GMAP_WORDS = {
    "g1": ("E",),
    "g2": ("E", "C"),
    "g3": ("E", "C", "C"),
    "g4": (),
    "g5": ("C",),
    "g6": ("C", "C"),
}


def _gmap_builder(word: tuple[str, ...]):
    def fn(c: Context):
        mats = _hessian_mats()
        ctx = c
        # (x o C) o E means evaluate x at C(E z): apply E first, then C.
        for name in word:
            ctx = ctx.transform(mats[name])
        return ctx.form("G")

    return fn


for _gname, _word in _GMAP_WORDS.items():
    _register(_gname, "z3", 3, "cubic surface map")(_gmap_builder(_word))


# ---------------------------------------------------------------------------
# six independent variables (X, Y, Z, phi, Q1, Q2)

_W = "six-variable invariants"


def _sym(c: Context):
    x, y, z = c["X"], c["Y"], c["Z"]
    return x + y + z, x * y + y * z + z * x, x * y * z


_simple("U", "w6", 1, _W, lambda c: _sym(c)[0])
_simple("V", "w6", 3, _W, lambda c: _sym(c)[2])
_simple("W2", "w6", 2, _W, lambda c: _sym(c)[0] ** 2 - 12 * _sym(c)[1])
_simple("W3", "w6", 3, _W, lambda c: vandermonde3(c["X"], c["Y"], c["Z"]))
_simple("FW3", "w6", 3, _W, lambda c: _sym(c)[2] - c["phi"] ** 3)
_simple("W4", "w6", 4, _W, lambda c: _sym(c)[0] * (_sym(c)[0] ** 3 + 216 * _sym(c)[2]))
_simple("FW4", "w6", 4, _W, lambda c: c["phi"] * (27 * _sym(c)[2] - _sym(c)[0] ** 3))
_simple(
    "W6",
    "w6",
    6,
    _W,
    lambda c: _sym(c)[0] ** 6 - 540 * _sym(c)[2] * _sym(c)[0] ** 3 - 5832 * _sym(c)[2] ** 2,
)


@_register("FV3", "w6", 3, _W)
def _fv3(c: Context):
    u, e2, _ = _sym(c)
    phi = c["phi"]
    return c["Q1"] ** 3 + c["Q2"] ** 3 - (u + 6 * phi) * e2 - 6 * phi**2 * u - 9 * phi**3


@_register("FV2", "w6", 2, _W)
def _fv2(c: Context):
    u, e2, _ = _sym(c)
    phi = c["phi"]
    return c["Q1"] * c["Q2"] - e2 - phi * u - 3 * phi**2


_simple("FU3", "w6", 3, _W, lambda c: c["Q1"] ** 3 - c["Q2"] ** 3 - c.form("W3"))
_simple("x", "w6", 1, "main theorem coordinates", lambda c: c["Q1"] - c["Q2"])
_simple("y", "w6", 1, "main theorem coordinates", lambda c: _sym(c)[0] + 6 * c["phi"])
_simple("z", "w6", 1, "main theorem coordinates", lambda c: _sym(c)[0] - 3 * c["phi"])


# ---------------------------------------------------------------------------
# five-variable Burkhardt space (Y0, ..., Y4)

_B = "Burkhardt invariants"
_Y234 = ("Y2", "Y3", "Y4")

_simple("Phi", "y5", 4, _B, lambda c: c["Y0"] ** 4 + 8 * c["Y0"] * c["Y1"] ** 3)
_simple("Psi", "y5", 4, _B, lambda c: c["Y0"] ** 3 * c["Y1"] - c["Y1"] ** 4)
_simple(
    "t",
    "y5",
    6,
    _B,
    lambda c: c["Y0"] ** 6 - 20 * c["Y0"] ** 3 * c["Y1"] ** 3 - 8 * c["Y1"] ** 6,
)
_simple("phi_y", "y5", 3, _B, lambda c: c["Y2"] * c["Y3"] * c["Y4"])
_simple("psi_y", "y5", 3, _B, lambda c: c["Y2"] ** 3 + c["Y3"] ** 3 + c["Y4"] ** 3)
_simple("u", "y5", 4, _B, lambda c: c["Y0"] * c.form("psi_y") + 6 * c["Y1"] * c.form("phi_y"))


@_register("Psi1", "y5", 6, _B)
def _psi1(c: Context):
    y0, y1 = c["Y0"], c["Y1"]
    phi, psi = c.form("phi_y"), c.form("psi_y")
    return psi * (-(y0**3) + 4 * y1**3) + 18 * phi * y0**2 * y1


@_register("Psi2", "y5", 8, _B)
def _psi2(c: Context):
    y0, y1 = c["Y0"], c["Y1"]
    phi, psi = c.form("phi_y"), c.form("psi_y")
    return -(psi**2) * y1**2 - 3 * phi * psi * y0**2 + 18 * phi**2 * y0 * y1


@_register("Phi3", "y5", 10, _B)
def _phi3(c: Context):
    y0, y1 = c["Y0"], c["Y1"]
    phi, psi = c.form("phi_y"), c.form("psi_y")
    return -(psi**3) * y0 + 18 * phi * psi**2 * y1 + 108 * phi**3 * y0


@_register("t3", "y5", 12, _B)
def _t3(c: Context):
    y0, y1 = c["Y0"], c["Y1"]
    phi, psi = c.form("phi_y"), c.form("psi_y")
    return (
        psi**3 * (y0**3 + 8 * y1**3)
        - 54 * phi * psi**2 * y0**2 * y1
        + 324 * phi**2 * psi * y0 * y1**2
        + 216 * phi**3 * (y0**3 - y1**3)
    )


_simple("C6_y", "y5", 6, _B, lambda c: hess_c6(*_cubic_triple(c, _Y234)))
_simple("C9_y", "y5", 9, _B, lambda c: hess_c9(*_cubic_triple(c, _Y234)))
_simple("C12_y", "y5", 12, _B, lambda c: hess_c12(*_cubic_triple(c, _Y234)))
_simple("FC12_y", "y5", 12, _B, lambda c: hess_fc12(*_cubic_triple(c, _Y234)))
_simple("C18_y", "y5", 18, _B, lambda c: hess_c18(*_cubic_triple(c, _Y234)))
_simple("f0", "y5", 1, _B, lambda c: c["Y0"] + 2 * c["Y1"])
_simple("f1", "y5", 1, _B, lambda c: c["Y0"] - c["Y1"])
_simple("G_y", "y5", 3, _B, lambda c: vandermonde3(*_cubic_triple(c, _Y234)))
_simple("H_y", "y5", 3, _B, lambda c: c.form("psi_y") + 6 * c.form("phi_y"))
_simple("K_y", "y5", 3, _B, lambda c: c.form("psi_y") - 3 * c.form("phi_y"))

_J = "Burkhardt J-invariants"


def _bf(c: Context):
    names = ("Phi", "Psi", "t", "u", "Psi1", "Psi2", "Phi3", "t3", "C6_y", "C12_y", "C18_y")
    return [c.form(n) for n in names]


_simple("J4", "y5", 4, _J, lambda c: c.form("Phi") + 8 * c.form("u"))
_simple("J6", "y5", 6, _J, lambda c: c.form("t") + 20 * c.form("Psi1") - 8 * c.form("C6_y"))


@_register("J10", "y5", 10, _J)
def _j10(c: Context):
    Phi, Psi, t, u, P1, P2, F3, t3, C6, C12, C18 = _bf(c)
    body = Phi * P1 + u * t + 2 * Phi * C6 + 2 * u * P1 - 2 * F3 - 2 * u * C6
    return body * Fraction(1, 24)


@_register("J12", "y5", 12, _J)
def _j12(c: Context):
    Phi, Psi, t, u, P1, P2, F3, t3, C6, C12, C18 = _bf(c)
    body = (
        3 * t * P1
        + 3 * u * Phi**2
        + 19 * P1**2
        - 9 * u**2 * Phi
        - 10 * C6 * t
        - 11 * t3
        + 9 * u**3
        - 2 * C6 * P1
        - 4 * C12
        + 4 * C6**2
    )
    return body * Fraction(1, 24)


@_register("J18", "y5", 18, _J)
def _j18(c: Context):
    Phi, Psi, t, u, P1, P2, F3, t3, C6, C12, C18 = _bf(c)
    body = (
        72 * t * Psi * P2
        + 9 * u * Phi**2 * P1
        + 9 * u**2 * Phi * t
        + 288 * C6 * Psi**3
        + 4 * Phi**2 * F3
        - 18 * t * t3
        - 42 * u**2 * Phi * P1
        - 20 * u**3 * t
        - 18 * C6 * t * P1
        - 18 * C6 * Phi**2 * u
        + 84 * C12 * t
        - 72 * u * Phi * F3
        + 162 * u**3 * P1
        - 240 * C6 * Psi * P2
        + 12 * C6 * u**2 * Phi
        - 6 * C6**2 * t
        + 24 * P1 * C12
        - 36 * u**2 * F3
        - 6 * C6 * t3
        - 18 * C6 * u**3
        - 12 * C6**2 * P1
        - 4 * C18
        + 6 * C6 * C12
        - 2 * C6**3
    )
    return body * Fraction(1, 864)


# ---------------------------------------------------------------------------
# (f0, f1, H, K): resolvent right-hand sides

_R = "resolvents in f0, f1, H, K"


def _fk(c: Context):
    return c["f0"], c["f1"], c["H"], c["K"]


_simple("u_fk", "fk4", 2, _R, lambda c: (_fk(c)[0] * _fk(c)[2] + 2 * _fk(c)[1] * _fk(c)[3]) * Fraction(1, 3))
_simple("Phi_fk", "fk4", 4, _R, lambda c: _fk(c)[0] * (_fk(c)[0] ** 3 + 8 * _fk(c)[1] ** 3) * Fraction(1, 9))
_simple("Psi_fk", "fk4", 4, _R, lambda c: _fk(c)[1] * (_fk(c)[0] ** 3 - _fk(c)[1] ** 3) * Fraction(1, 9))


@_register("t_fk", "fk4", 6, _R)
def _t_fk(c: Context):
    f0, f1, _, _ = _fk(c)
    return (f0**6 - 20 * f0**3 * f1**3 - 8 * f1**6) * Fraction(-1, 27)


@_register("Psi1_fk", "fk4", 4, _R)
def _psi1_fk(c: Context):
    f0, f1, h, k = _fk(c)
    return ((f0**3 - 4 * f1**3) * h - 6 * f0**2 * f1 * k) * Fraction(1, 9)


@_register("Psi2_fk", "fk4", 4, _R)
def _psi2_fk(c: Context):
    f0, f1, h, k = _fk(c)
    return (-(f0**2) * h * k + 2 * f0 * f1 * k**2 - f1**2 * h**2) * Fraction(1, 9)


@_register("Phi3_fk", "fk4", 4, _R)
def _phi3_fk(c: Context):
    f0, f1, h, k = _fk(c)
    return (f0 * (h**3 - 4 * k**3) - 6 * f1 * h**2 * k) * Fraction(1, 9)


@_register("t3_fk", "fk4", 6, _R)
def _t3_fk(c: Context):
    f0, f1, h, k = _fk(c)
    body = (
        f0**3 * (h**3 + 8 * k**3)
        - 18 * f0**2 * f1 * h**2 * k
        + 36 * f0 * f1**2 * h * k**2
        + 8 * f1**3 * (h**3 - k**3)
    )
    return body * Fraction(1, 27)


@_register("t3_fk_alt", "fk4", 6, _R)
def _t3_fk_alt(c: Context):
    f0, f1, h, k = _fk(c)
    body = (
        (f0**3 + 8 * f1**3) * h**3
        - 18 * f0**2 * f1 * h**2 * k
        + 36 * f0 * f1**2 * h * k**2
        + 8 * (f0**3 - f1**3) * k**3
    )
    return body * Fraction(1, 27)


# ---------------------------------------------------------------------------
# (H, K): Hessian invariants in resolvent roots, and binary code forms

_CODE = "code weight enumerators"
_simple("C12_hk", "hk2", 4, _HESS, lambda c: c["H"] * (c["H"] ** 3 + 8 * c["K"] ** 3) * Fraction(1, 9))
_simple("FC12_hk", "hk2", 4, _HESS, lambda c: c["K"] * (c["K"] ** 3 - c["H"] ** 3) * Fraction(1, 27))


@_register("C18_hk", "hk2", 6, _HESS)
def _c18_hk(c: Context):
    h, k = c["H"], c["K"]
    return (h**6 - 20 * h**3 * k**3 - 8 * k**6) * Fraction(-1, 27)


_simple("psi4", "hk2", 4, _CODE, lambda c: c["H"] ** 4 + 8 * c["H"] * c["K"] ** 3)
_simple("xi12", "hk2", 12, _CODE, lambda c: c["K"] ** 3 * (c["H"] ** 3 - c["K"] ** 3) ** 3)
_simple(
    "k6",
    "hk2",
    6,
    _CODE,
    lambda c: c["H"] ** 6 - 20 * c["H"] ** 3 * c["K"] ** 3 - 8 * c["K"] ** 6,
)
_simple(
    "psi8",
    "hk2",
    8,
    _CODE,
    lambda c: c["H"] ** 8 + 14 * c["H"] ** 4 * c["K"] ** 4 + c["K"] ** 8,
)
_simple(
    "nu24",
    "hk2",
    24,
    _CODE,
    lambda c: c["H"] ** 4 * c["K"] ** 4 * (c["H"] ** 4 - c["K"] ** 4) ** 4,
)


@_register("k12", "hk2", 12, _CODE)
def _k12(c: Context):
    h, k = c["H"], c["K"]
    return h**12 - 33 * (h**8 * k**4 + h**4 * k**8) + k**12


def _abc(c: Context):
    x, y, z = c["x"], c["y"], c["z"]
    return x**3 + y**3 + z**3, 3 * x * y * z, x**3 * y**3 + y**3 * z**3 + z**3 * x**3


_simple("a", "xyz3", 3, _CODE, lambda c: _abc(c)[0])
_simple("p", "xyz3", 3, _CODE, lambda c: _abc(c)[1])
_simple("b", "xyz3", 6, _CODE, lambda c: _abc(c)[2])
_simple("beta6", "xyz3", 6, _CODE, lambda c: _abc(c)[0] ** 2 - 12 * _abc(c)[2])
_simple("pi9", "xyz3", 9, _CODE, lambda c: hess_c9(c["x"], c["y"], c["z"]))
_simple("alpha12", "xyz3", 12, _CODE, lambda c: _abc(c)[0] * (_abc(c)[0] ** 3 + 8 * _abc(c)[1] ** 3))


# ---------------------------------------------------------------------------
# icosahedral forms in (A0, A1, A2)

_K = "icosahedral invariants"


def _a(c: Context):
    return c["A0"], c["A1"], c["A2"]


_simple("KA", "a3", 2, _K, lambda c: _a(c)[0] ** 2 + _a(c)[1] * _a(c)[2])


@_register("KB", "a3", 6, _K)
def _kb(c: Context):
    a0, a1, a2 = _a(c)
    return 8 * a0**4 * a1 * a2 - 2 * a0**2 * a1**2 * a2**2 + a1**3 * a2**3 - a0 * (a1**5 + a2**5)


@_register("KC", "a3", 10, _K)
def _kc(c: Context):
    a0, a1, a2 = _a(c)
    return (
        320 * a0**6 * a1**2 * a2**2
        - 160 * a0**4 * a1**3 * a2**3
        + 20 * a0**2 * a1**4 * a2**4
        + 6 * a1**5 * a2**5
        - 4 * a0 * (a1**5 + a2**5) * (32 * a0**4 - 20 * a0**2 * a1 * a2 + 5 * a1**2 * a2**2)
        + a1**10
        + a2**10
    )


@_register("KD", "a3", 15, _K)
def _kd(c: Context):
    a0, a1, a2 = _a(c)
    inner = (
        -1024 * a0**10
        + 3840 * a0**8 * a1 * a2
        - 3840 * a0**6 * a1**2 * a2**2
        + 1200 * a0**4 * a1**3 * a2**3
        - 100 * a0**2 * a1**4 * a2**4
        + a1**10
        + a2**10
        + 2 * a1**5 * a2**5
        + a0 * (a1**5 + a2**5) * (352 * a0**4 - 160 * a0**2 * a1 * a2 + 10 * a1**2 * a2**2)
    )
    return (a1**5 - a2**5) * inner


def _brioschi_root(nu: int):
    def fn(c: Context):
        a0, a1, a2 = _a(c)
        e = epsilon()
        return (
            -(e ** (nu % 5)) * a1 * (4 * a0**2 - a1 * a2)
            + e ** ((2 * nu) % 5) * (2 * a0 * a1**2 - a2**3)
            + e ** ((3 * nu) % 5) * (-2 * a0 * a2**2 + a1**3)
            + e ** ((4 * nu) % 5) * a2 * (4 * a0**2 - a1 * a2)
        )

    return fn


def _klein_delta(nu: int):
    def fn(c: Context):
        a0, a1, a2 = _a(c)
        e = epsilon()
        r5 = sqrt5()
        p, q = e ** ((4 * nu) % 5), e ** (nu % 5)
        tail = p * a1 + q * a2
        return (p * a1 - q * a2) * ((1 + r5) * a0 + tail) * ((1 - r5) * a0 + tail)

    return fn


for _nu in range(5):
    _register(f"x_nu{_nu}", "a3", 3, _K)(_brioschi_root(_nu))
    _register(f"delta{_nu}", "a3", 3, _K)(_klein_delta(_nu))


# ---------------------------------------------------------------------------
# the cubic surface in P^5 and its hexahedral model in P^3

_S = "cubic surface"


def _g(c: Context):
    return [c[f"g{i}"] for i in range(1, 7)]


_simple("S_lin1", "g6", 1, _S, lambda c: sum(_g(c)[:3]))
_simple("S_lin2", "g6", 1, _S, lambda c: sum(_g(c)[3:]))
_simple("S_cubic", "g6", 3, _S, lambda c: sum(v**3 for v in _g(c)[:3]) - sum(v**3 for v in _g(c)[3:]))


def _x(c: Context):
    return c["x1"], c["x2"], c["x3"], c["x4"]


_simple(
    "S_hex",
    "x4",
    3,
    _S,
    lambda c: _x(c)[0] ** 2 * _x(c)[1] + _x(c)[0] * _x(c)[1] ** 2 + _x(c)[2] ** 2 * _x(c)[3] + _x(c)[2] * _x(c)[3] ** 2,
)


@_register("S_hex_hessian", "x4", 4, _S)
def _hex_hessian(c: Context):
    from .polyring import determinant, partial_derivative

    f = build("S_hex")
    rows = [[partial_derivative(partial_derivative(f, i), j) for j in range(4)] for i in range(4)]
    det = determinant(rows)
    if c is symbolic_context("x4"):
        return det
    return det.eval(c.values)


@_register("S_hex_planes", "x4", 4, _S)
def _hex_planes(c: Context):
    x1, x2, x3, x4 = _x(c)
    return (x1**2 + x1 * x2 + x2**2) * (x3**2 + x3 * x4 + x4**2)


# ---------------------------------------------------------------------------
# pullback from six independent variables to z


def pullback_images() -> dict[str, MPoly]:
    return {name: build(name) for name in ("X", "Y", "Z", "phi", "Q1", "Q2")}


def pullback_z(f: MPoly) -> MPoly:
    """Substitute X=z1^3, Y=z2^3, Z=z3^3, phi=z1 z2 z3 and the two Q cubics."""
    if f.space.id != "w6":
        raise ValueError("pullback_z expects a polynomial in w6")
    imgs = pullback_images()
    return f.substitute_map(imgs, get_space("z3"))


def pullback_context(ctx: Context) -> Context:
    """Evaluate the six cubic coordinates of a z3 context as a w6 context."""
    out = Context("w6", [ctx.form(n) for n in ("X", "Y", "Z", "phi", "Q1", "Q2")])
    out.origin = ctx.values
    return out
