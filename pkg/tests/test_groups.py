import pytest

from invcheck.exactnum import omega
from invcheck.forms import build
from invcheck.polyring import get_space
from invcheck.groups import (
    ClosureCapExceeded,
    center_order,
    closure,
    evaluate_word,
    get_genset,
    integrality_report,
    list_gensets,
    scalar_subgroup_order,
    semi_invariant_scalar,
    verify_matrix_relations,
)

# (genset, matrix order, projective order); None where the matrix closure is not run
ORDERS = [
    ("hessian216", 1296, 216),
    ("h72", 216, 36),
    ("g3", 48, 12),
    ("h2", 192, 24),
    ("g4", 2592, 216),
    ("induced6", 72, 36),
    ("icosahedral", 60, 60),
]


@pytest.mark.parametrize("name,matrix,projective", ORDERS)
def test_orders(name, matrix, projective):
    gs = get_genset(name)
    assert closure(gs, "matrix").order == matrix
    assert closure(gs, "projective").order == projective


@pytest.mark.slow
def test_burkhardt_and_maschke_projective_orders():
    assert closure(get_genset("burkhardt"), "projective").order == 25920
    assert closure(get_genset("maschke"), "projective").order == 25920


@pytest.mark.parametrize("name", list_gensets())
def test_relations(name):
    for rel in verify_matrix_relations(get_genset(name)):
        assert rel["status"] == "pass", rel


def test_g4_center_and_quotient():
    gs = get_genset("g4")
    gc = closure(gs, "matrix")
    assert center_order(gc, list(gs.gens.values())) == 12
    assert gc.order // 12 == closure(gs, "projective").order == 216


def test_induced_six_dimensional_action():
    gs = get_genset("induced6")
    assert gs.gens["E"].det() == -1
    rows = integrality_report(closure(gs, "matrix"))
    assert len(rows) == 72
    assert all(r["integral"] for r in rows)


def _order(m) -> int:
    ident, k, p = m ** 0, 1, m
    while p != ident:
        p, k = p * m, k + 1
    return k


def test_generator_orders():
    gens = get_genset("hessian216").gens
    assert {k: _order(m) for k, m in gens.items()} == {"A": 3, "B": 2, "C": 3, "D": 3, "E": 4}


def test_closure_cap():
    with pytest.raises(ClosureCapExceeded):
        closure(get_genset("hessian216"), "matrix", cap=100)


def test_scalars_in_hessian_group():
    gc = closure(get_genset("hessian216"), "matrix")
    assert gc.order // scalar_subgroup_order(gc) == 216


def test_word_evaluation():
    gs = get_genset("hessian216")
    assert gs.word("A^3") == evaluate_word("I", {}, dim=3)
    assert gs.word("AB") == gs.gens["A"] * gs.gens["B"]


def test_semi_invariants():
    b = get_genset("hessian216").gens["B"]
    assert semi_invariant_scalar(build("C6"), b) == 1
    assert semi_invariant_scalar(build("G"), b) == -1
    assert semi_invariant_scalar(build("C6") + get_space("z3").gen("z1") ** 6, get_genset("hessian216").gens["A"]) is None
