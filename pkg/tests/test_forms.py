import pytest

from invcheck.forms import Context, UnknownForm, build, list_forms, pullback_z
from invcheck.polyring import get_space


@pytest.mark.parametrize("fd", list_forms(), ids=lambda fd: fd.name)
def test_declared_degree(fd):
    f = build(fd.name)
    if fd.homogeneous:
        assert f.is_homogeneous(fd.degree)
    else:
        assert f.degree() == fd.degree


def test_spot_values():
    assert build("C6").eval([1, 0, 0]) == 1
    assert build("C6").eval([1, 1, 1]) == -27
    assert build("C6").eval([1, 2, 3]) == -1716
    assert build("C9").eval([1, 2, 3]) == 3458
    assert build("H").eval([1, 1, 1]) == 9
    assert build("K").eval([1, 1, 1]) == 0
    assert build("W4").eval([1, 1, 1, 0, 0, 0]) == 729
    assert build("t").eval([1, 1, 0, 0, 0]) == -27


def test_pullback_identifications():
    assert pullback_z(build("W2")) == build("C6")
    assert pullback_z(build("W3")) == build("C9")
    assert pullback_z(build("FW4")) == build("FC12")


@pytest.mark.parametrize("name", ["FW3", "FV2", "FV3"])
def test_pullback_kernel(name):
    assert pullback_z(build(name)).is_zero()


def test_pullback_kernel_combination():
    w6 = get_space("w6")
    q1, q2 = w6.gen("Q1"), w6.gen("Q2")
    assert pullback_z(build("FU3") - (q1**3 - q2**3) + build("W3")).is_zero()


def test_context_matches_build():
    ctx = Context("z3", [2, -1, 5])
    for name in ("C6", "C9", "C12", "FC12", "C18"):
        assert ctx.form(name) == build(name).eval([2, -1, 5])


def test_unknown_form():
    with pytest.raises(UnknownForm):
        build("no-such-form")
