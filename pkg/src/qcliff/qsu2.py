"""q-deformed angular momentum: q-numbers, matrix representations, polar form.

This module is float-based (the ladder amplitudes are square roots); all
claims are therefore residual-norm statements with a 1e-10 budget rather
than the exact zero tests used elsewhere.  Basis ordering is m descending
from +j (row 0) to -j, which fixes the cyclic-shift orientation.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

DEGENERACY_TOL = 1e-12


def qnum(x, q):
    """[x]_q = (q^x - q^-x) / (q - q^-1); x at q = 1; sin(x*t)/sin(t) on the circle."""
    if q == 0:
        raise ValueError("q must be nonzero")
    if isinstance(q, complex) and q.imag != 0:
        theta = cmath.phase(q)
        if abs(abs(q) - 1.0) > 1e-12:
            raise ValueError("complex q must sit on the unit circle")
        if math.sin(theta) == 0:
            raise ValueError("q = +-1 has no q-number formula")
        return math.sin(x * theta) / math.sin(theta)
    q = float(q.real) if isinstance(q, complex) else float(q)
    if q == 1.0:
        return float(x)
    if q == -1.0:
        raise ValueError("q = -1 has no q-number formula")
    if q < 0:
        raise ValueError("negative real q is not supported")
    return (q**x - q**-x) / (q - 1.0 / q)


def amplitudes_squared(two_j: int, q) -> tuple[list, list]:
    """([j-m]q[j+m+1]q, [j+m]q[j-m+1]q) per row i (m = j - i), pre square root.

    These are the exact squared ladder amplitudes; at q = 1 they are the
    integer products (j-m)(j+m+1) and (j+m)(j-m+1) without rounding.
    """
    plus_sq = [qnum(i, q) * qnum(two_j - i + 1, q) for i in range(two_j + 1)]
    minus_sq = [qnum(two_j - i, q) * qnum(i + 1, q) for i in range(two_j + 1)]
    return plus_sq, minus_sq


@dataclass(frozen=True, eq=False)
class AngularMomentumRep:
    two_j: int
    q: complex
    J3: np.ndarray
    Jplus: np.ndarray
    Jminus: np.ndarray


def build_rep(two_j: int, q) -> AngularMomentumRep:
    """(2j+1)-dimensional J3, J+, J- at deformation q (q=1 is the Lie case)."""
    if two_j < 0:
        raise ValueError("two_j must be non-negative")
    dim = two_j + 1
    J3 = np.zeros((dim, dim), dtype=complex)
    Jplus = np.zeros((dim, dim), dtype=complex)
    Jminus = np.zeros((dim, dim), dtype=complex)
    plus_sq, minus_sq = amplitudes_squared(two_j, q)
    for i in range(dim):
        J3[i, i] = (two_j - 2 * i) / 2
        if i >= 1:
            # raise m -> m+1: row i-1, column i
            Jplus[i - 1, i] = cmath.sqrt(plus_sq[i])
        if i <= two_j - 1:
            Jminus[i + 1, i] = cmath.sqrt(minus_sq[i])
    return AngularMomentumRep(two_j, q, J3, Jplus, Jminus)


def _max_abs(mat: np.ndarray) -> float:
    return float(np.max(np.abs(mat))) if mat.size else 0.0


def verify_commutators(rep: AngularMomentumRep) -> dict[str, float]:
    """Residual norms of [J3,J+]=J+, [J3,J-]=-J-, [J+,J-]=[2J3]_q."""
    J3, Jp, Jm = rep.J3, rep.Jplus, rep.Jminus
    two_j3 = np.diag(
        [qnum(rep.two_j - 2 * i, rep.q) for i in range(rep.two_j + 1)]
    ).astype(complex)
    return {
        "raising": _max_abs(J3 @ Jp - Jp @ J3 - Jp),
        "lowering": _max_abs(J3 @ Jm - Jm @ J3 + Jm),
        "ladder": _max_abs(Jp @ Jm - Jm @ Jp - two_j3),
    }


def cyclic_shift_matrix(dim: int, forward: bool = True) -> np.ndarray:
    """Permutation e_i -> e_(i+1 mod dim) (forward) or its transpose."""
    out = np.zeros((dim, dim))
    for i in range(dim):
        out[(i + 1) % dim, i] = 1.0
    return out if forward else out.T


@dataclass(frozen=True, eq=False)
class PolarDecomposition:
    modulus_plus: np.ndarray   # sqrt(J+ J-), diagonal
    modulus_minus: np.ndarray  # sqrt(J- J+), diagonal
    shift: np.ndarray
    orientation: str           # "forward" | "reversed"
    residuals: dict[str, float]
    degenerate: bool

    def max_residual(self) -> float:
        return max(self.residuals.values())


def polar_decompose(rep: AngularMomentumRep) -> PolarDecomposition:
    """Split J+ and J- into a diagonal modulus times a cyclic shift.

    The shift orientation is selected empirically so that all four
    reconstruction identities hold; the wrap-around column is annihilated
    by the vanishing top/bottom modulus entry.
    """
    dim = rep.two_j + 1
    plus_sq, minus_sq = amplitudes_squared(rep.two_j, rep.q)
    mod_plus = np.diag([cmath.sqrt(v) for v in minus_sq]).astype(complex)
    mod_minus = np.diag([cmath.sqrt(v) for v in plus_sq]).astype(complex)
    degenerate = any(
        abs(qnum(x, rep.q)) < DEGENERACY_TOL for x in range(1, rep.two_j + 1)
    )

    best = None
    for orientation in ("forward", "reversed"):
        shift = cyclic_shift_matrix(dim, orientation == "forward").astype(complex)
        inv = shift.T
        residuals = {
            "plus_left": _max_abs(rep.Jplus - mod_plus @ inv),
            "plus_right": _max_abs(rep.Jplus - inv @ mod_minus),
            "minus_left": _max_abs(rep.Jminus - shift @ mod_plus),
            "minus_right": _max_abs(rep.Jminus - mod_minus @ shift),
        }
        candidate = PolarDecomposition(
            mod_plus, mod_minus, shift, orientation, residuals, degenerate
        )
        if best is None or candidate.max_residual() < best.max_residual():
            best = candidate
    return best


def polar_report(two_j: int, q) -> dict:
    """Commutator and reconstruction residuals for one (j, q) cell."""
    rep = build_rep(two_j, q)
    comm = verify_commutators(rep)
    polar = polar_decompose(rep)
    return {
        "two_j": two_j,
        "q": [complex(q).real, complex(q).imag],
        "commutator_residuals": comm,
        "polar_residuals": polar.residuals,
        "orientation": polar.orientation,
        "degenerate": polar.degenerate,
        "max_residual": max(max(comm.values()), polar.max_residual()),
    }
