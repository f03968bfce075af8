"""Discrete Fourier conjugation and the exponential clock/shift identities."""
from fractions import Fraction

import numpy as np
import pytest

from conftest import max_abs
from qcliff.cliffalg import clock, omega_commute_exponent, shift
from qcliff.cyclotomic import CyclotomicNumber, session_conductor
from qcliff.monomial import slot_operator
from qcliff.qsu2 import build_rep, polar_decompose
from qcliff.weylqm import (
    p_conjugated,
    p_formula,
    sylvester,
    sylvester_unitary,
    verify_weyl_pair,
)


def test_sylvester_trivial_and_hadamard():
    assert sylvester(1).fourier[0][0] == CyclotomicNumber.one(2)
    s2 = sylvester(2).fourier
    values = [[cell.to_complex() for cell in row] for row in s2]
    assert values == [[1, 1], [1, -1]]


@pytest.mark.parametrize("n", range(2, 9))
def test_sylvester_unitary_exact(n):
    assert sylvester_unitary(n)


def test_p_formula_values():
    for n in (2, 5, 8):
        mat = p_formula(n)
        for i in range(n):
            assert mat[i][i].is_zero()
    assert p_formula(2)[0][1] == CyclotomicNumber.from_rational(4, Fraction(-1, 2))
    assert p_formula(3)[0][1].to_complex() == pytest.approx(
        -0.5 - 1 / (2 * np.sqrt(3)) * 1j
    )


@pytest.mark.parametrize("n", range(2, 9))
def test_conjugated_momentum_structure(n):
    conj = p_conjugated(n)
    formula = p_formula(n)
    half = CyclotomicNumber.from_rational(session_conductor(n), Fraction(n - 1, 2))
    for i in range(n):
        assert conj[i][i] == half
        for j in range(n):
            if i != j:
                assert conj[i][j] == formula[i][j]


def test_conjugated_momentum_n2_frozen():
    conj = p_conjugated(2)
    as_fracs = [[cell.rational_value() for cell in row] for row in conj]
    assert as_fracs == [
        [Fraction(1, 2), Fraction(-1, 2)],
        [Fraction(-1, 2), Fraction(1, 2)],
    ]


@pytest.mark.parametrize("n", range(2, 9))
def test_verify_weyl_pair_sweep(n):
    report = verify_weyl_pair(n)
    assert report["exact_ok"], report
    assert report["float_ok"], report
    assert report["fourier_shift_to_clock_exponent"] == -1
    assert report["diagonal_discrepancy"] == (n - 1) / 2


def test_float_exponential_residual_n5():
    assert verify_weyl_pair(5)["float_exponential_residual"] < 1e-9


def test_formula_exponential_global_phase():
    for n in (2, 3, 5, 7):
        report = verify_weyl_pair(n)
        phase = complex(*report["formula_exponential_phase"])
        assert phase == pytest.approx(np.exp(-1j * np.pi * (n - 1) / n))
        assert report["formula_exponential_phase_residual"] < 1e-9


@pytest.mark.parametrize("n", range(2, 9))
def test_clock_shift_exchange_orientation(n):
    cond = session_conductor(n)
    a = slot_operator(n, cond, 1, {0: clock(n)})
    b = slot_operator(n, cond, 1, {0: shift(n)})
    assert omega_commute_exponent(a, b) == 1 % n


def test_conjugated_momentum_against_float_oracle():
    for n in (2, 3, 5, 7):
        w = np.exp(2j * np.pi / n)
        s = np.array([[w ** (k * l) for l in range(n)] for k in range(n)]) / np.sqrt(n)
        p_float = s.conj().T @ np.diag(np.arange(n)) @ s
        exact = np.array(
            [[cell.to_complex() for cell in row] for row in p_conjugated(n)]
        )
        assert max_abs(p_float - exact) < 1e-12


def test_polar_shift_agrees_with_weyl_shift():
    for two_j in range(1, 8):
        dim = two_j + 1
        polar = polar_decompose(build_rep(two_j, 2))
        expected = np.zeros((dim, dim))
        for j in range(dim):
            expected[shift(dim).perm[j], j] = 1.0
        assert max_abs(polar.shift - expected) == 0.0
