"""Clock/shift construction, generator relations, and the frame quadruple."""
import numpy as np
import pytest

from conftest import max_abs
from qcliff.cliffalg import (
    FrameQuadruple,
    clifford_generators,
    clock,
    frame_quadruple,
    omega_commute_exponent,
    shift,
)
from qcliff.phaseword import FRAME_THETA


def test_order_one_is_trivial():
    assert clock(1).is_identity()
    assert shift(1).is_identity()


def test_pauli_case_matrices():
    assert max_abs(clock(2).dense() - np.diag([1.0, -1.0])) == 0.0
    assert max_abs(shift(2).dense() - np.array([[0, 1], [1, 0.0]])) == 0.0


def test_shift_order_and_exchange_n3():
    s = shift(3)
    assert s.power(3).is_identity()
    z = clock(3)
    conj = z.compose(s).compose(z.inverse()).compose(s.inverse()).dense()
    w = np.exp(2j * np.pi / 3)
    assert min(max_abs(conj - w * np.eye(3)), max_abs(conj - w.conjugate() * np.eye(3))) < 1e-12


def test_jordan_wigner_quadruple_at_n2():
    gens = clifford_generators(2, 4).generators
    dense = [g.as_sum().to_dense(2) for g in gens]
    for i in range(4):
        assert max_abs(dense[i] @ dense[i] - np.eye(4)) < 1e-12
        for j in range(i + 1, 4):
            assert max_abs(dense[i] @ dense[j] + dense[j] @ dense[i]) < 1e-12


def test_two_generator_pair():
    for n in (2, 3, 5, 7):
        gens = clifford_generators(n, 2).generators
        assert omega_commute_exponent(gens[0], gens[1]) == 1


def test_cubes_are_identity_at_n3():
    gens = clifford_generators(3, 4).generators
    for g in gens:
        assert max_abs(g.as_sum().power(3).to_dense(2) - np.eye(9)) < 1e-12


@pytest.mark.parametrize("n", range(2, 9))
def test_pairwise_relations_sweep(n):
    gens = clifford_generators(n, 4).generators
    for i in range(4):
        for j in range(i + 1, 4):
            assert omega_commute_exponent(gens[i], gens[j]) == 1 % n


def test_frame_collapse_at_n2():
    fq = frame_quadruple(2)
    assert (fq.sigma1 * fq.Sigma2).as_sum() == (fq.Sigma2 * fq.sigma1).as_sum()


def test_frame_diagonal_relations_n3():
    fq = frame_quadruple(3)
    lhs = (fq.sigma2 * fq.Sigma1).as_sum()
    rhs = (fq.Sigma1 * fq.sigma2).as_sum()
    assert (lhs - rhs).is_zero()


def test_frame_skew_diagonal_n5():
    fq = frame_quadruple(5)
    assert omega_commute_exponent(fq.sigma1, fq.Sigma2) == 2


def test_self_commutation_exponent_zero():
    fq = frame_quadruple(3)
    assert omega_commute_exponent(fq.sigma1, fq.sigma1) == 0


@pytest.mark.parametrize("n", range(2, 9))
def test_exponent_matrix_matches_frame_theta(n):
    fq = frame_quadruple(n)
    measured = fq.exponent_matrix()
    expected = tuple(tuple(v % n for v in row) for row in FRAME_THETA)
    assert measured == expected


def test_commuting_copies_disjoint_slots():
    fq0 = frame_quadruple(3, gamma_offset=0)
    fq1 = frame_quadruple(3, gamma_offset=2)
    for a in fq0.operators():
        for b in fq1.operators():
            assert omega_commute_exponent(a, b) == 0


def test_frame_relations_reproduced_by_dense_oracle():
    fq = frame_quadruple(3)
    w = np.exp(2j * np.pi / 3)
    ops = [op.as_sum().to_dense(4) for op in fq.operators()]
    for i in range(4):
        for j in range(4):
            if i == j:
                continue
            r = FRAME_THETA[i][j] % 3
            assert max_abs(ops[i] @ ops[j] - w**r * (ops[j] @ ops[i])) < 1e-10


def test_frame_quadruple_constructor_rejects_wrong_relations():
    fq = frame_quadruple(3)
    with pytest.raises(Exception):
        FrameQuadruple(3, fq.sigma2, fq.sigma1, fq.Sigma1, fq.Sigma2)
