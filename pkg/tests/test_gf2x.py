import pytest
from hypothesis import given, strategies as st

from oracles import poly_mul_lists
from sysgriesmer.gf2x import (
    GF2mField,
    GF2Poly,
    cyclotomic_coset,
    element_pow,
    generator_from_defining_set,
    is_irreducible,
    minimal_polynomial,
    poly_divmod,
    poly_mul,
    root_of_unity,
    smallest_irreducible,
)

P = GF2Poly.from_coefficients


def test_poly_mul_examples():
    assert poly_mul(P([1, 1]), P([1, 1])) == P([1, 0, 1])
    p = P([1, 0, 1, 1])
    assert poly_mul(p, GF2Poly(1)) == p
    # hand expansion: (1+x)(1+x+x^2) = 1 + x^3
    assert poly_mul(P([1, 1]), P([1, 1, 1])) == P([1, 0, 0, 1])


@given(st.lists(st.integers(0, 1), min_size=1, max_size=20), st.lists(st.integers(0, 1), min_size=1, max_size=20))
def test_poly_mul_matches_schoolbook(a, b):
    expected = poly_mul_lists(a, b)
    assert list(poly_mul(P(a), P(b)).coefficients or [0]) == expected


@given(st.integers(1, 1 << 16), st.integers(1, 1 << 16))
def test_degree_adds(a, b):
    assert poly_mul(GF2Poly(a), GF2Poly(b)).degree == GF2Poly(a).degree + GF2Poly(b).degree


@given(st.integers(0, 1 << 20), st.integers(1, 1 << 10))
def test_divmod_roundtrip(a, b):
    q, r = poly_divmod(GF2Poly(a), GF2Poly(b))
    assert poly_mul(q, GF2Poly(b)) + r == GF2Poly(a)
    assert r.is_zero() or r.degree < GF2Poly(b).degree


def test_zero_polynomial_degree_is_none():
    assert GF2Poly(0).degree is None
    assert GF2Poly(0).coefficients == ()


def test_smallest_irreducible_is_x4_x_1():
    assert smallest_irreducible(4) == GF2Poly.from_exponents([4, 1, 0])
    assert not is_irreducible(GF2Poly.from_exponents([4, 2, 0]))  # (x^2+x+1)^2


def test_field_rejects_reducible_modulus():
    with pytest.raises(ValueError):
        GF2mField(2, GF2Poly.from_exponents([2, 0]))


def test_element_pow():
    f = GF2mField(4)
    a = f.x
    assert element_pow(a, 0) == f.one
    assert element_pow(a, 1) == a
    assert element_pow(a, 15) == f.one
    assert all(element_pow(a, j) != f.one for j in range(1, 15))


def test_minimal_polynomial_examples():
    f = GF2mField(4)
    a = f.x
    assert minimal_polynomial(f.one) == GF2Poly.from_exponents([1, 0])
    assert minimal_polynomial(a) == GF2Poly.from_exponents([4, 1, 0])
    assert minimal_polynomial(a**5) == GF2Poly.from_exponents([2, 1, 0])
    with pytest.raises(ValueError):
        minimal_polynomial(f.zero)


def _brute_minpoly(e):
    for value in range(2, 1 << (e.field.m + 1)):
        if GF2Poly(value)(e).is_zero():
            return GF2Poly(value)


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5, 6])
def test_minimal_polynomial_matches_brute_force(m):
    f = GF2mField(m)
    for e in f.elements()[1:]:
        mp = minimal_polynomial(e)
        assert mp(e).is_zero()
        assert m % mp.degree == 0
        assert mp == _brute_minpoly(e)


def test_root_of_unity_order():
    for n in (1, 3, 5, 7, 9, 15, 17, 21, 31):
        assert root_of_unity(n).multiplicative_order() == n


def test_generator_full_defining_set():
    defset = {0, 1, 2, 3, 4, 5, 6, 8, 9, 10, 12}
    g = generator_from_defining_set(15, defset)
    assert g.degree == 11
    assert 15 - g.degree == 4


def test_generator_edge_cases():
    assert generator_from_defining_set(7, set()) == GF2Poly(1)
    g = generator_from_defining_set(7, {1, 2, 4})
    assert g in (GF2Poly.from_exponents([3, 1, 0]), GF2Poly.from_exponents([3, 2, 0]))


def test_generator_rejects_incomplete_and_even():
    with pytest.raises(ValueError, match="missing"):
        generator_from_defining_set(15, {1, 2, 4})
    with pytest.raises(ValueError):
        generator_from_defining_set(14, {1})


def _complete_sets(n):
    cosets = sorted({cyclotomic_coset(i, n) for i in range(n)}, key=min)
    for mask in range(1 << len(cosets)):
        yield set().union(*[c for j, c in enumerate(cosets) if mask >> j & 1])


@pytest.mark.parametrize("n", [3, 5, 7, 9, 15])
def test_generator_divides_xn_minus_1(n):
    xn1 = GF2Poly.from_exponents([n, 0])
    for defset in _complete_sets(n):
        g = generator_from_defining_set(n, defset)
        assert g.degree == len(defset)
        assert poly_divmod(xn1, g)[1].is_zero()
