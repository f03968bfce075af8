"""Exact cyclotomic field arithmetic."""
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from qcliff.cyclotomic import (
    ConductorMismatchError,
    CyclotomicNumber,
    cyclotomic_polynomial,
    root_of_unity,
)


def test_cyclotomic_polynomial_base_cases():
    assert cyclotomic_polynomial(1).coeffs == (-1, 1)
    assert cyclotomic_polynomial(2).coeffs == (1, 1)
    # x^6 - 1 divided by Phi_1 * Phi_2 * Phi_3, frozen from exact division
    assert cyclotomic_polynomial(6).coeffs == (1, -1, 1)


@pytest.mark.parametrize("m", range(1, 31))
def test_cyclotomic_polynomial_against_sympy(m):
    x = sympy.symbols("x")
    expected = sympy.Poly(sympy.cyclotomic_poly(m, x), x).all_coeffs()[::-1]
    assert list(cyclotomic_polynomial(m).coeffs) == [int(c) for c in expected]


def test_root_of_unity_basis_and_wraparound():
    assert root_of_unity(4, 1).coeffs == (Fraction(0), Fraction(1))
    assert root_of_unity(3, 3) == CyclotomicNumber.one(3)
    assert root_of_unity(5, 0) == CyclotomicNumber.one(5)
    # x^2 mod Phi_3 = -1 - x
    assert root_of_unity(3, 2).coeffs == (Fraction(-1), Fraction(-1))


def test_minimal_polynomial_identity_m3():
    z = root_of_unity(3, 1)
    total = CyclotomicNumber.one(3) + z + z * z
    assert total.is_zero()


def test_unit_root_inverse():
    for m in (3, 4, 5, 12):
        z = root_of_unity(m, 1)
        assert z.invert() == root_of_unity(m, m - 1)


def test_multiply_i_squared():
    z = root_of_unity(4, 1)
    assert (z * z) == CyclotomicNumber.from_rational(4, -1)


def test_to_complex_values():
    assert root_of_unity(2, 1).to_complex() == pytest.approx(-1.0)
    assert root_of_unity(4, 1).to_complex() == pytest.approx(1j)
    assert root_of_unity(3, 1).to_complex() == pytest.approx(
        -0.5 + 0.8660254037844386j, abs=1e-12
    )


def test_conductor_mismatch_raises():
    with pytest.raises(ConductorMismatchError):
        root_of_unity(3, 1) + root_of_unity(4, 1)


def test_invert_zero_raises():
    with pytest.raises(ZeroDivisionError):
        CyclotomicNumber.zero(5).invert()


def _elements(max_conductor=16, max_coeff=10):
    def build(m, ints):
        deg = len(cyclotomic_polynomial(m).coeffs) - 1
        coeffs = tuple(Fraction(ints[i % len(ints)]) for i in range(deg))
        return CyclotomicNumber(m, coeffs)

    return st.integers(1, max_conductor).flatmap(
        lambda m: st.lists(
            st.integers(-max_coeff, max_coeff), min_size=1, max_size=8
        ).map(lambda ints: build(m, ints))
    )


@settings(max_examples=120, deadline=None)
@given(_elements(), _elements())
def test_product_invert_roundtrip(a, b):
    if a.conductor != b.conductor or b.is_zero():
        return
    assert (a * b) * b.invert() == a


@settings(max_examples=120, deadline=None)
@given(_elements(), _elements())
def test_conjugation_is_an_involutive_homomorphism(a, b):
    assert a.conjugate().conjugate() == a
    if a.conductor == b.conductor:
        assert (a * b).conjugate() == a.conjugate() * b.conjugate()


@settings(max_examples=120, deadline=None)
@given(_elements(max_coeff=1000), _elements(max_coeff=1000))
def test_to_complex_respects_arithmetic(a, b):
    if a.conductor != b.conductor:
        return
    assert (a * b).to_complex() == pytest.approx(
        a.to_complex() * b.to_complex(), abs=1e-6, rel=1e-12
    )
    assert (a + b).to_complex() == pytest.approx(
        a.to_complex() + b.to_complex(), abs=1e-12, rel=1e-12
    )


@pytest.mark.parametrize("m", range(1, 17))
def test_opposite_roots_multiply_to_one(m):
    one = CyclotomicNumber.one(m)
    for k in range(m):
        assert root_of_unity(m, k) * root_of_unity(m, m - k) == one
