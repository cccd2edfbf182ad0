from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from invcheck import qseries as QS
from invcheck.qseries import QSeries

# frozen from sympy: sigma-function sums, truncated products, and a lattice count
E4 = [1, 240, 2160, 6720, 17520, 30240]
E6 = [1, -504, -16632, -122976, -532728, -1575504]
TAU = [1, -24, 252, -1472, 4830, -6048, -16744, 84480, -113643, -115920, 534612]
A2_COUNTS = [1, 6, 0, 6, 6, 0, 0, 12, 0, 6, 0, 0, 6, 12, 0]


def test_eisenstein_coefficients():
    assert QS.eisenstein(4, 6).coefficient_list(6) == E4
    assert QS.eisenstein(6, 6).coefficient_list(6) == E6


@pytest.mark.parametrize("method", ["product", "eisenstein"])
def test_delta_coefficients(method):
    d = QS.delta(12, method)
    assert [d.coefficient(n) for n in range(1, 12)] == TAU


def test_delta_formulas_agree_to_30():
    assert QS.delta(31).first_mismatch(QS.delta(31, "eisenstein")) is None


def test_theta_counts_lattice_vectors():
    th = QS.theta_A2(0, 15)
    assert [th.coefficient(n) for n in range(15)] == A2_COUNTS


def test_theta_eisenstein_identity():
    assert QS.verify_theta_eisenstein(20).status == "pass"
    bad = QS.verify_theta_eisenstein(20, perturb=True)
    assert bad.status == "fail"


def test_picard_fuchs():
    assert QS.picard_fuchs_residual(12).status == "pass"
    assert QS.picard_fuchs_r_form(12).status == "pass"
    assert QS.wrong_solution_residual(12).status == "fail"


series = st.lists(st.integers(-9, 9), min_size=1, max_size=8).map(lambda cs: QS.series_from_list(cs, 1))


@given(series, series, series)
def test_ring_axioms(a, b, c):
    assert (a * b).first_mismatch(b * a) is None
    assert ((a * b) * c).first_mismatch(a * (b * c)) is None
    assert (a * (b + c)).first_mismatch(a * b + a * c) is None


@given(series)
def test_inverse(a):
    if a.coefficient(0) == 0:
        return
    one = QSeries.one(1, a.prec)
    assert (a * a.inverse()).first_mismatch(one) is None


@given(series, st.integers(0, 4))
def test_powers(a, k):
    expected = QSeries.one(1, a.prec)
    for _ in range(k):
        expected = expected * a
    assert (a**k).first_mismatch(expected) is None


def test_precision_tracking():
    a = QS.series_from_list([1, 2, 3], 1)
    assert a.prec == 3
    b = a.shift(2)
    assert b.valuation() == 2
    assert (a * b).prec == 5
    assert b.coefficient(Fraction(2)) == 1
