"""q-numbers, angular momentum representations, and polar decomposition."""
import cmath

import numpy as np
import pytest

from conftest import max_abs
from qcliff.cliffalg import shift
from qcliff.qsu2 import (
    amplitudes_squared,
    build_rep,
    cyclic_shift_matrix,
    polar_decompose,
    polar_report,
    qnum,
    verify_commutators,
)

Q_GRID = [0.5, 2, cmath.exp(1j * cmath.pi / 7)]


def test_qnum_basics():
    for q in (0.5, 2, 3, cmath.exp(1j * 0.3)):
        assert qnum(0, q) == 0
        assert qnum(1, q) == pytest.approx(1)
    assert qnum(2, 2) == pytest.approx(2.5)


def test_qnum_limit_and_errors():
    assert qnum(5, 1) == 5.0
    assert qnum(7, 1 + 1e-8) == pytest.approx(7, abs=1e-6)
    with pytest.raises(ValueError):
        qnum(1, 0)
    with pytest.raises(ValueError):
        qnum(1, -1)


def test_jplus_spin_half_classical():
    rep = build_rep(1, 1)
    assert np.array_equal(rep.Jplus.real, np.array([[0, 1], [0, 0]]))
    assert np.array_equal(rep.Jminus.real, np.array([[0, 0], [1, 0]]))
    assert np.array_equal(rep.J3.real, np.diag([0.5, -0.5]))


def test_jplus_spin_one_amplitudes():
    rep = build_rep(2, 1)
    amps = [rep.Jplus[0, 1], rep.Jplus[1, 2]]
    assert amps == pytest.approx([np.sqrt(2), np.sqrt(2)])
    rep_q2 = build_rep(2, 2)
    assert rep_q2.Jplus[0, 1] == pytest.approx(np.sqrt(2.5))


def test_classical_squared_amplitudes_are_exact_integers():
    for two_j in range(0, 11):
        plus_sq, minus_sq = amplitudes_squared(two_j, 1)
        j2 = two_j
        for i in range(two_j + 1):
            assert plus_sq[i] == i * (j2 - i + 1)
            assert minus_sq[i] == (j2 - i) * (i + 1)


def test_commutators_spin_half_any_q():
    for q in Q_GRID:
        rep = build_rep(1, q)
        ladder = rep.Jplus @ rep.Jminus - rep.Jminus @ rep.Jplus
        assert max_abs(ladder - np.diag([1.0, -1.0])) < 1e-12
        assert max(verify_commutators(rep).values()) < 1e-12


def test_classical_su2_recovered():
    for two_j in range(0, 7):
        assert max(verify_commutators(build_rep(two_j, 1)).values()) < 1e-10


def test_spin_zero_trivial():
    rep = build_rep(0, 2)
    assert max(verify_commutators(rep).values()) == 0.0
    assert polar_decompose(rep).max_residual() == 0.0


@pytest.mark.parametrize("q", Q_GRID)
def test_commutator_residuals_grid(q):
    for two_j in range(0, 11):
        assert max(verify_commutators(build_rep(two_j, q)).values()) < 1e-10


def test_polar_spin_half_classical():
    rep = build_rep(1, 1)
    polar = polar_decompose(rep)
    assert max_abs(polar.modulus_plus - np.diag([1.0, 0.0])) < 1e-12
    assert polar.max_residual() < 1e-12
    # shift^-1 maps |-1/2> (index 1) to |+1/2> (index 0) cyclically
    inv = polar.shift.T
    assert inv[0, 1] == 1.0


@pytest.mark.parametrize("q", [0.5, 2])
def test_polar_residuals_real_q(q):
    for two_j in range(0, 11):
        assert polar_decompose(build_rep(two_j, q)).max_residual() < 1e-10


def test_polar_residuals_unit_modulus_q():
    q = cmath.exp(1j * cmath.pi / 7)
    for two_j in range(0, 7):
        assert polar_decompose(build_rep(two_j, q)).max_residual() < 1e-10


def test_polar_shift_is_the_package_shift_matrix():
    for two_j in range(1, 8):
        polar = polar_decompose(build_rep(two_j, 2))
        assert polar.orientation == "forward"
        dim = two_j + 1
        expected = np.zeros((dim, dim))
        for j in range(dim):
            expected[shift(dim).perm[j], j] = 1.0
        assert np.array_equal(polar.shift.real, expected)
        power = np.linalg.matrix_power(polar.shift, dim)
        assert max_abs(power - np.eye(dim)) == 0.0


def test_ladder_commutator_equals_diagonal_qnumbers():
    for q in Q_GRID:
        for two_j in range(0, 11):
            rep = build_rep(two_j, q)
            lhs = rep.Jplus @ rep.Jminus - rep.Jminus @ rep.Jplus
            rhs = np.diag([qnum(two_j - 2 * i, q) for i in range(two_j + 1)])
            assert max_abs(lhs - rhs) < 1e-10


def test_root_of_unity_degeneracy_is_flagged_not_failed():
    q = cmath.exp(2j * cmath.pi / 3)  # n = 3 <= 2j+1 makes [3]_q = 0
    report = polar_report(4, q)
    assert report["degenerate"]


def test_nondegenerate_root_of_unity_above_dimension():
    q = cmath.exp(2j * cmath.pi / 9)  # n = 9 > 2j+1
    report = polar_report(6, q)
    assert not report["degenerate"]
    assert report["max_residual"] < 1e-10


def test_cyclic_shift_orientations_are_transposes():
    fwd = cyclic_shift_matrix(4, True)
    assert np.array_equal(fwd.T, cyclic_shift_matrix(4, False))
