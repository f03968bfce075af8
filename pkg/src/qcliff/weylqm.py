"""Finite-dimensional quantum kinematics: position, momentum, Fourier matrix.

The n x n Fourier (Sylvester-type) matrix is kept as its unscaled cyclotomic
numerator with an implicit 1/sqrt(n) per factor, so any paired product
(conjugations, unitarity) is exactly cyclotomic: the 1/sqrt(n) pair combines
to the rational 1/n and Gauss sums cancel exactly.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .cliffalg import clock, shift
from .cyclotomic import CyclotomicNumber, omega, session_conductor

CycloMatrix = tuple[tuple[CyclotomicNumber, ...], ...]


def _zero(n: int) -> CyclotomicNumber:
    return CyclotomicNumber.zero(session_conductor(n))


def fourier_numerator(n: int) -> CycloMatrix:
    """(w^(k l)) without the 1/sqrt(n); the true matrix is this over sqrt(n)."""
    return tuple(
        tuple(omega(n, k * l) for l in range(n)) for k in range(n)
    )


def _dagger(mat: CycloMatrix) -> CycloMatrix:
    size = len(mat)
    return tuple(
        tuple(mat[l][k].conjugate() for l in range(size)) for k in range(size)
    )


def _matmul(a: CycloMatrix, b: CycloMatrix) -> CycloMatrix:
    size = len(a)
    return tuple(
        tuple(
            sum((a[i][k] * b[k][j] for k in range(size)), _zero_like(a))
            for j in range(size)
        )
        for i in range(size)
    )


def _zero_like(mat: CycloMatrix) -> CyclotomicNumber:
    return CyclotomicNumber.zero(mat[0][0].conductor)


def _scale(mat: CycloMatrix, value: Fraction) -> CycloMatrix:
    return tuple(tuple(cell.scale(value) for cell in row) for row in mat)


def _mono_to_matrix(mono, n: int) -> CycloMatrix:
    cond = session_conductor(n)
    out = [[CyclotomicNumber.zero(cond) for _ in range(n)] for _ in range(n)]
    for j in range(n):
        out[mono.perm[j]][j] = mono.phases[j]
    return tuple(tuple(row) for row in out)


def _to_complex(mat: CycloMatrix) -> np.ndarray:
    return np.array([[cell.to_complex() for cell in row] for row in mat])


def position_diagonal(n: int) -> CycloMatrix:
    """diag(0, 1, ..., n-1) as exact scalars."""
    cond = session_conductor(n)
    out = [[CyclotomicNumber.zero(cond) for _ in range(n)] for _ in range(n)]
    for k in range(n):
        out[k][k] = CyclotomicNumber.from_rational(cond, k)
    return tuple(tuple(row) for row in out)


def sylvester_unitary(n: int) -> bool:
    """S-dagger S = I exactly (Gauss sums cancel in the paired product)."""
    s = fourier_numerator(n)
    prod = _scale(_matmul(_dagger(s), s), Fraction(1, n))
    cond = session_conductor(n)
    one = CyclotomicNumber.one(cond)
    zero = CyclotomicNumber.zero(cond)
    return all(
        prod[i][j] == (one if i == j else zero)
        for i in range(n)
        for j in range(n)
    )


def p_formula(n: int) -> CycloMatrix:
    """The closed-form entry table: 0 on the diagonal, 1/(wbar^(a-k) - 1) off it."""
    if n < 2:
        raise ValueError("need n >= 2")
    cond = session_conductor(n)
    one = CyclotomicNumber.one(cond)
    out = []
    for alpha in range(n):
        row = []
        for kappa in range(n):
            if alpha == kappa:
                row.append(CyclotomicNumber.zero(cond))
            else:
                row.append((omega(n, kappa - alpha) - one).invert())
        out.append(tuple(row))
    return tuple(out)


def p_conjugated(n: int) -> CycloMatrix:
    """S-dagger Q S computed exactly (entries are Gauss-type sums over n)."""
    if n < 2:
        raise ValueError("need n >= 2")
    s = fourier_numerator(n)
    return _scale(_matmul(_matmul(_dagger(s), position_diagonal(n)), s), Fraction(1, n))


@dataclass(frozen=True, eq=False)
class WeylSystem:
    n: int
    q_diagonal: CycloMatrix
    fourier: CycloMatrix        # unscaled numerator (w^(kl))
    momentum_formula: CycloMatrix
    momentum_conjugated: CycloMatrix


def sylvester(n: int) -> WeylSystem:
    if n < 1:
        raise ValueError("need n >= 1")
    if n == 1:
        cond = session_conductor(1)
        one = ((CyclotomicNumber.one(cond),),)
        zero = ((CyclotomicNumber.zero(cond),),)
        return WeylSystem(1, zero, one, zero, zero)
    return WeylSystem(
        n,
        position_diagonal(n),
        fourier_numerator(n),
        p_formula(n),
        p_conjugated(n),
    )


def verify_weyl_pair(n: int) -> dict:
    """The four-part report on the clock/shift exponential identities.

    (i), (ii) are exact; (iii) is the float exponential check; (iv) records
    how the closed-form momentum-entry table differs from the conjugated one
    (constant diagonal (n-1)/2) and the global phase that difference causes.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    cond = session_conductor(n)
    system = sylvester(n)
    one = CyclotomicNumber.one(cond)
    half = Fraction(n - 1, 2)

    # (i) w^Q is the clock matrix
    clock_matrix = _mono_to_matrix(clock(n), n)
    omega_q = tuple(
        tuple(
            omega(n, k) if k == l else CyclotomicNumber.zero(cond)
            for l in range(n)
        )
        for k in range(n)
    )
    omega_q_is_clock = omega_q == clock_matrix

    # (ii) S-dagger clock S is the shift matrix, exactly
    s = system.fourier
    conj = _scale(_matmul(_matmul(_dagger(s), clock_matrix), s), Fraction(1, n))
    shift_matrix = _mono_to_matrix(shift(n), n)
    conj_is_shift = conj == shift_matrix

    # Fourier exchange in the other direction: S-dagger shift S = clock^-1
    exchanged = _scale(_matmul(_matmul(_dagger(s), shift_matrix), s), Fraction(1, n))
    clock_inverse = _mono_to_matrix(clock(n).inverse(), n)
    shift_to_clock_exponent = -1 if exchanged == clock_inverse else None

    # (iii) float check: exp((2 pi i / n) P) = shift within 1e-9
    p_float = _to_complex(system.momentum_conjugated)
    eigvals, eigvecs = np.linalg.eigh(p_float)
    exp_p = eigvecs @ np.diag(np.exp(2j * np.pi / n * eigvals)) @ eigvecs.conj().T
    shift_float = _to_complex(shift_matrix)
    float_residual = float(np.max(np.abs(exp_p - shift_float)))

    # (iv) diagonal discrepancy and the induced global phase
    p_conj = system.momentum_conjugated
    p_form = system.momentum_formula
    offdiag_match = all(
        p_conj[i][j] == p_form[i][j]
        for i in range(n)
        for j in range(n)
        if i != j
    )
    diag_value = CyclotomicNumber.from_rational(cond, half)
    diag_is_half = all(p_conj[i][i] == diag_value for i in range(n))
    diff_ok = all(
        (p_conj[i][j] - p_form[i][j])
        == (diag_value if i == j else CyclotomicNumber.zero(cond))
        for i in range(n)
        for j in range(n)
    )
    pf_float = _to_complex(p_form)
    vals_f, vecs_f = np.linalg.eigh(pf_float)
    exp_pf = vecs_f @ np.diag(np.exp(2j * np.pi / n * vals_f)) @ vecs_f.conj().T
    expected_phase = np.exp(-1j * np.pi * (n - 1) / n)
    phase_residual = float(np.max(np.abs(exp_pf - expected_phase * shift_float)))

    report = {
        "n": n,
        "sylvester_unitary": sylvester_unitary(n),
        "omega_Q_is_clock": omega_q_is_clock,
        "fourier_conjugates_clock_to_shift": conj_is_shift,
        "fourier_shift_to_clock_exponent": shift_to_clock_exponent,
        "float_exponential_residual": float_residual,
        "momentum_offdiagonal_matches_formula": offdiag_match,
        "momentum_diagonal_value": [half.numerator, half.denominator],
        "momentum_diagonal_is_half_n_minus_1": diag_is_half,
        "diagonal_discrepancy": float(half),
        "difference_is_half_identity": diff_ok,
        "formula_exponential_phase": [expected_phase.real, expected_phase.imag],
        "formula_exponential_phase_residual": phase_residual,
    }
    report["exact_ok"] = bool(
        report["sylvester_unitary"]
        and omega_q_is_clock
        and conj_is_shift
        and offdiag_match
        and diag_is_half
        and diff_ok
    )
    report["float_ok"] = float_residual < 1e-9 and phase_residual < 1e-9
    return report
