from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from invcheck import elliptic as EL
from invcheck.elliptic import INF, CurvePoint, ShortCurve, scalar_mul
from invcheck.exactnum import omega
from invcheck.forms import symbolic_context
from invcheck.polyring import RatFunc, get_space

# --- group law ---------------------------------------------------------------

CONG1 = ShortCurve(-1, 0)
CONG1_POINTS = [INF, CurvePoint(0, 0), CurvePoint(1, 0), CurvePoint(-1, 0)]


def test_group_law_on_all_rational_points():
    # y^2 = x^3 - x has exactly these four rational points
    for p in CONG1_POINTS:
        assert CONG1.add(p, INF) == p
        assert CONG1.add(p, CONG1.neg(p)) == INF
        for q in CONG1_POINTS:
            assert CONG1.add(p, q) == CONG1.add(q, p)
            assert CONG1.contains(CONG1.add(p, q))
            for r in CONG1_POINTS:
                assert CONG1.add(CONG1.add(p, q), r) == CONG1.add(p, CONG1.add(q, r))


# the twist y^2 = x^3 - 36x has rank one, so it supplies non-torsion points
TWIST = ShortCurve(-36, 0)
GEN = CurvePoint(-3, 9)
TORSION = [INF, CurvePoint(0, 0), CurvePoint(6, 0), CurvePoint(-6, 0)]


@st.composite
def twist_points(draw):
    k = draw(st.integers(-3, 3))
    return TWIST.add(scalar_mul(TWIST, k, GEN), draw(st.sampled_from(TORSION)))


@settings(max_examples=50)
@given(twist_points(), twist_points(), twist_points())
def test_group_law_on_random_points(p, q, r):
    add = TWIST.add
    assert TWIST.contains(p) and TWIST.contains(add(p, q))
    assert add(add(p, q), r) == add(p, add(q, r))
    assert add(p, q) == add(q, p)
    assert add(p, TWIST.neg(p)) == INF


def test_scalar_mul_small_cases():
    assert scalar_mul(TWIST, 1, GEN) == GEN
    assert scalar_mul(TWIST, 0, GEN) == INF
    assert scalar_mul(TWIST, -2, GEN) == TWIST.neg(scalar_mul(TWIST, 2, GEN))


def test_singular_curve_rejected():
    with pytest.raises(EL.SingularCurve):
        ShortCurve(0, 0)


# --- the curve E and its specializations ------------------------------------------


def test_specialization_at_1_2_3():
    e, p = EL.specialize_E((1, 2, 3))
    assert (p.x, p.y) == (-5148, 373464)
    assert e.contains(p)
    res = EL.lutz_nagell_test(e, p)
    assert res["verdict"] == "not-torsion"
    assert res["sweep"]["verdict"] == "not-torsion"


def test_further_triples_certify_non_torsion():
    triples = EL.random_integer_triples(4, seed=11)
    for z in triples:
        assert EL.certify_non_torsion(z)["verdict"] == "not-torsion", z


def test_torsion_examples():
    assert EL.lutz_nagell_test(ShortCurve(0, 1), CurvePoint(-1, 0))["verdict"] == "torsion-possible"
    assert EL.lutz_nagell_test(CONG1, CurvePoint(0, 0))["verdict"] == "torsion-possible"


@pytest.mark.parametrize("m", [2, 3, 4])
def test_multiplication_commutes_with_specialization(m):
    e, p = EL.curve_E(symbolic_context("z3"))
    generic = scalar_mul(e, m, p)
    for z in EL.random_integer_triples(5, seed=m):
        es, ps = EL.specialize_E(z)
        special = scalar_mul(es, m, ps)
        pt = [Fraction(v) for v in z]
        assert (generic.x.eval(pt), generic.y.eval(pt)) == (special.x, special.y)


# --- function-field families ----------------------------------------------------


def test_e2t_torsion_and_discriminant():
    t = get_space("t1").gen("t")
    e, p2 = EL.curve_E2t(t)
    assert scalar_mul(e, 2, p2) == e.neg(p2)
    assert scalar_mul(e, 3, p2) == INF
    assert e.disc == 2**12 * 3**3 * (t - 1) ** 3 * (t**2 + t + 1) ** 3


def test_kodaira_types():
    e, _ = EL.named_curve("E2t", None)
    w = omega()
    for place in (1, w, w * w, "inf"):
        assert EL.kodaira_In_check(e, place) == 3
    with pytest.raises(ValueError):
        EL.kodaira_In_check(e, 2)
    assert EL.bad_places_E2t() == {"1": "I3", "w": "I3", "w2": "I3", "inf": "I3"}


def test_not_multiplicative():
    t = get_space("t1").gen("t")
    with pytest.raises(EL.NotMultiplicative):
        EL.kodaira_In_check(ShortCurve(0, t), 0)


def test_rationality_criterion():
    t = get_space("t1").gen("t")
    e, _ = EL.curve_E2t(t)
    assert EL.rationality_criterion_check(e) == {"status": "pass", "deg_p": 4, "deg_q": 6, "deg_disc": 9}
    assert EL.rationality_criterion_check(ShortCurve(0, t**7))["status"] == "fail"
    assert EL.rationality_criterion_check(ShortCurve(0, get_space("t1").one()))["status"] == "fail"


def test_j_identities():
    assert EL.hauptmodul_check()["status"] == "pass"
    assert EL.j_correspondence_check()["status"] == "pass"
    assert EL.hessian_family_checks()["status"] == "pass"


def test_deuring_j():
    a = get_space("al1").gen("alpha")
    e = EL.deuring(a)
    assert e.j == RatFunc(a**3 * (a**3 - 24) ** 3, a**3 - 27)


def test_hauptmodul_spot_value():
    # t = 2 gives rho = 12 and j = 27 * 8 * 16^3 / 7^3
    assert EL.hauptmodul_j(Fraction(12)) == Fraction(27 * 8 * 16**3, 7**3)


@given(st.integers(-30, 30), st.integers(-30, 30), st.integers(1, 6))
def test_j_twist_invariance(a, b, u):
    if 4 * a**3 + 27 * b**2 == 0:
        return
    assert ShortCurve(a, b).j == ShortCurve(u**4 * a, u**6 * b).j
