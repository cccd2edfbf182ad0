import pytest

from invcheck import lines27 as L
from invcheck.exactnum import omega

w = omega()


def test_twenty_seven_lines_on_surface():
    lines = L.build_lines()
    assert len(lines) == 27
    assert len({ln.basis for ln in lines}) == 27
    for ln in lines:
        assert L._line_on_surface(ln.basis)
        for row in ln.basis:
            assert L.on_surface(row)


def test_incidence_graph():
    adj = L.incidence_graph()
    assert all(len(v) == 10 for v in adj.values())
    assert L.edge_count() == 135


def test_meets():
    assert L.proportional(L.meet("l1", "l4"), [0, 0, 0, 0, 1, -1])
    assert L.meet("l1", "l5") is None
    assert L.proportional(L.meet("l1,1", "l1,2"), [-2 * w, w, w, -2, 1, 1])


def test_double_sixes():
    ds = L.enumerate_double_sixes()
    assert len(ds) == 36
    assert all(d.is_valid() for d in ds)
    assert L.N_REFERENCE.key() in {d.key() for d in ds}


def test_schlafli_labeling():
    assert L.schlafli_labeling() == L.SCHLAFLI_REFERENCE
    assert len(L.SCHLAFLI_REFERENCE) == 15


def test_reference_tables():
    for d in (L.check_line_tables(), L.check_symbol_tables(), L.check_double_six_images()):
        assert not any(d.values()), d
    assert all(r["ok"] for r in L.check_intersection_table())


def test_conjugation():
    conj = L.conjugation_permutation()
    assert len(L.fixed_points(conj)) == 15
    assert sorted(L.fixed_points(conj)) == sorted(L.REAL_LABELS)
    assert L.cycle_type(conj) == [2] * 6
    images = L.perm_label_map(conj)
    assert tuple(images[x] for x in L.N_REFERENCE.a) == L.N_REFERENCE.b
    assert L.perm_sign(conj) == 1
    assert L.lattice_determinant(conj) == -1


@pytest.mark.parametrize("g", "EABC")
def test_generators_are_automorphisms(g):
    p = L.induced_permutation(g)
    assert L.is_automorphism(p)
    assert L.lattice_determinant(p) == 1


def test_word_action_is_a_homomorphism():
    for x in "EABC":
        for y in "EABC":
            assert L.induced_permutation(x + y) == L.compose(L.induced_permutation(x), L.induced_permutation(y))


def test_line_permutation_group_order():
    perms = [L.induced_permutation(g) for g in "EABC"]
    assert L.generated_perm_group(perms) == 72


def test_group_with_conjugation():
    perms = [L.induced_permutation(g) for g in "EABC"] + [L.conjugation_permutation()]
    assert L.generated_perm_group(perms) == 72


def test_automorphism_group():
    order, details = L.aut_order(return_details=True)
    assert order == 51840
    assert L.vertex_orbit_count() == 1


def test_identify_round_trip():
    for ln in L.build_lines():
        assert L.identify(ln.basis) == ln.label
