from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from invcheck.exactnum import (
    ConductorMismatch,
    CycloNum,
    cyclotomic_polynomial,
    embed,
    epsilon,
    imag_unit,
    omega,
    parse,
    render,
    sqrt2,
    sqrt3,
    sqrt5,
    sqrt_minus3,
)

CONDUCTORS = (3, 4, 5, 12)

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=30)


@st.composite
def cyclo(draw, n=None):
    n = n or draw(st.sampled_from(CONDUCTORS))
    phi = len(cyclotomic_polynomial(n)) - 1
    return CycloNum.from_coeffs(n, [draw(rationals) for _ in range(phi)])


@st.composite
def cyclo_triple(draw):
    n = draw(st.sampled_from(CONDUCTORS))
    return n, draw(cyclo(n)), draw(cyclo(n)), draw(cyclo(n))


# --- field axioms -----------------------------------------------------------


@given(cyclo_triple())
def test_associativity_and_distributivity(t):
    _, a, b, c = t
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(cyclo())
def test_inverse(a):
    if a.is_zero():
        with pytest.raises(ZeroDivisionError):
            a.inverse()
    else:
        assert a * a.inverse() == 1


@given(cyclo())
def test_conjugate_is_involution_and_multiplicative(a):
    assert a.conjugate().conjugate() == a
    assert (a * a).conjugate() == a.conjugate() * a.conjugate()


@given(cyclo())
def test_render_parse_round_trip(a):
    assert parse(render(a), a.n) == a


@given(cyclo(3), cyclo(3))
def test_embedding_is_a_ring_map(a, b):
    assert embed(a * b, 12) == embed(a, 12) * embed(b, 12)
    if b:
        assert embed(b.inverse(), 12) == embed(b, 12).inverse()


# --- exact spot values -----------------------------------------------------


def test_square_roots():
    w = omega()
    assert (1 + 2 * w) ** 2 == -3
    assert sqrt_minus3() ** 2 == -3
    e = epsilon()
    assert (1 + 2 * e + 2 * e**4) ** 2 == 5
    assert sqrt5() ** 2 == 5
    assert sqrt3() ** 2 == 3
    assert sqrt2() ** 2 == 2
    z = CycloNum.zeta(12)
    assert (z + z**11) ** 2 == 3


def test_conjugation_examples():
    w = omega()
    assert w.conjugate() == w**2
    assert CycloNum(Fraction(5, 3), 3).conjugate() == Fraction(5, 3)
    a = 1 + 2 * w
    assert a.conjugate() == -1 - 2 * w
    assert a.conjugate() * a == 3


def test_embedding_examples():
    assert embed(omega(), 12) == CycloNum.zeta(12, 4)
    assert embed(imag_unit(), 12) == CycloNum.zeta(12, 3)
    assert embed(CycloNum(Fraction(2, 7), 1), 5).coeffs[0] == Fraction(2, 7)
    with pytest.raises(ConductorMismatch):
        embed(CycloNum.zeta(5), 12)


def test_dividing_conductors_promote():
    assert (omega() + CycloNum.zeta(12)).n == 12
    with pytest.raises(ConductorMismatch):
        omega() + imag_unit()


# inverses computed with sympy.invert modulo the cyclotomic polynomial
SYMPY_INVERSES = [
    (3, [1, 2], ["-1/3", "-2/3"]),
    (5, [2, 1], ["5/11", "-3/11", "1/11", "-1/11"]),
    (12, [1, 1, 0, 2], ["4/61", "6/61", "5/61", "-23/61"]),
    (4, [3, -1], ["3/10", "1/10"]),
    (5, [1, 1, 1, -1], ["2/11", "1/11", "-4/11", "4/11"]),
]


@pytest.mark.parametrize("n,coeffs,expected", SYMPY_INVERSES)
def test_inverse_matches_sympy(n, coeffs, expected):
    a = CycloNum.from_coeffs(n, coeffs)
    assert a.inverse() == CycloNum.from_coeffs(n, [Fraction(x) for x in expected])


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)
