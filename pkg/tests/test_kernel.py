import pytest
from hypothesis import given, strategies as st

from invcheck import _kernel, _pykernel

keys = st.integers(0, 2**40)
terms = st.dictionaries(keys, st.integers(-10**6, 10**6).filter(bool), max_size=20)

compiled = pytest.mark.skipif(_kernel.BACKEND != "cython", reason="compiled kernel not built")


@compiled
@given(terms, terms)
def test_mul_terms_agree(a, b):
    assert _kernel.mul_terms(a, b, 10**6) == _pykernel.mul_terms(a, b, 10**6)


@compiled
@given(terms, terms, st.integers(-5, 5), st.integers(-5, 5))
def test_combine_agree(a, b, sa, sb):
    assert _kernel.combine(a, sa, b, sb) == _pykernel.combine(a, sa, b, sb)


@compiled
def test_big_coefficients_fall_back_correctly():
    a = {1: 10**40, 2: -(10**30)}
    b = {3: 10**25}
    assert _kernel.mul_terms(a, b, 100) == _pykernel.mul_terms(a, b, 100)


def test_cap_enforced():
    a = {i: 1 for i in range(20)}
    b = {i << 20: 1 for i in range(20)}
    with pytest.raises(_pykernel.TermCapExceeded):
        _pykernel.mul_terms(a, b, 50)
    with pytest.raises(_kernel.TermCapExceeded):
        _kernel.mul_terms(a, b, 50)
