"""Clock/shift matrices, C_4^(n)-style generator systems, and the frame quadruple.

Orientation convention, fixed once for the whole package: ``shift`` maps basis
vector e_i to e_(i+1 mod n), so clock * shift = w * shift * clock with
exponent exactly +1.  This is the orientation under which the discrete
Fourier conjugation and the polar decomposition come out exactly; the
construction below is nevertheless checked exhaustively, not trusted.
"""
from __future__ import annotations

from dataclasses import dataclass

from .cyclotomic import CyclotomicNumber, half_root, omega, root_of_unity, session_conductor
from .monomial import (
    LocalMonomial,
    OperatorSum,
    SlotOperator,
    identity_operator,
    slot_operator,
)
from .phaseword import FRAME_THETA


class ConstructionError(RuntimeError):
    """No orientation choice satisfied the defining relations (a bug, not bad input)."""


def clock(n: int, conductor: int | None = None) -> LocalMonomial:
    """diag(1, w, ..., w^(n-1)) with w the primitive n-th root of unity."""
    m = conductor or session_conductor(n)
    w = root_of_unity(m, m // n)
    return LocalMonomial(n, tuple(range(n)), tuple(w**k for k in range(n)))


def shift(n: int, conductor: int | None = None) -> LocalMonomial:
    """Cyclic permutation e_i -> e_(i+1 mod n), unit phases."""
    m = conductor or session_conductor(n)
    one = CyclotomicNumber.one(m)
    return LocalMonomial(n, tuple((j + 1) % n for j in range(n)), (one,) * n)


def _twist(n: int, conductor: int) -> LocalMonomial:
    """shift o clock^-1, rescaled by zeta_2n^(n-1) so its n-th power is the identity."""
    lam = half_root(n, n - 1) if conductor == session_conductor(n) else root_of_unity(
        conductor, (conductor // (2 * n)) * (n - 1)
    )
    base = shift(n, conductor).compose(clock(n, conductor).inverse())
    return LocalMonomial(n, base.perm, tuple(lam * p for p in base.phases))


def omega_commute_exponent(a, b) -> int | None:
    """The unique r mod n with a*b = w^r * (b*a), or None if not w-proportional."""
    a = a.single_term() if isinstance(a, OperatorSum) else a
    b = b.single_term() if isinstance(b, OperatorSum) else b
    if a.is_zero() or b.is_zero():
        raise ValueError("w-commutation is undefined for zero operators")
    ab = a * b
    ba = b * a
    if ab.signature() != ba.signature():
        return None
    ratio = ab.scalar / ba.scalar
    n = a.dim
    w = omega(n) if a.conductor == session_conductor(n) else root_of_unity(a.conductor, a.conductor // n)
    power = CyclotomicNumber.one(a.conductor)
    for r in range(n):
        if ratio == power:
            return r
        power = power * w
    return None


@dataclass(frozen=True)
class CliffordSystem:
    """m generators with g_i g_j = w g_j g_i (i<j) and g_i^n = id."""

    n: int
    m: int
    generators: tuple[SlotOperator, ...]

    def __post_init__(self):
        ident = identity_operator(self.generators[0].dim, self.generators[0].conductor)
        for i in range(self.m):
            if self.generators[i].power(self.n) != ident:
                raise ConstructionError(f"generator {i} is not of order {self.n}")
            for j in range(i + 1, self.m):
                r = omega_commute_exponent(self.generators[i], self.generators[j])
                if r != 1 % self.n:
                    raise ConstructionError(
                        f"pair ({i},{j}) has exponent {r}, expected 1"
                    )


def clifford_generators(n: int, m: int = 4, conductor: int | None = None) -> CliffordSystem:
    """Generators from clock e, shift f, and the rescaled twist f*e^-1.

    Pattern: g1 = e@0, g2 = f@0, g3 = twist@0 (x) e@1, g4 = twist@0 (x) f@1.
    The CliffordSystem constructor re-checks every relation exactly.
    """
    if n < 2:
        raise ValueError("order must be at least 2")
    if m not in (2, 4):
        raise ValueError("only 2 or 4 generators are supported")
    cond = conductor or session_conductor(n)
    e = clock(n, cond)
    f = shift(n, cond)
    if m == 2:
        gens = [
            slot_operator(n, cond, 1, {0: e}),
            slot_operator(n, cond, 1, {0: f}),
        ]
    else:
        c = _twist(n, cond)
        gens = [
            slot_operator(n, cond, 1, {0: e}),
            slot_operator(n, cond, 1, {0: f}),
            slot_operator(n, cond, 1, {0: c, 1: e}),
            slot_operator(n, cond, 1, {0: c, 1: f}),
        ]
    return CliffordSystem(n, m, tuple(gens))


def shift_slots(op: SlotOperator, delta: int) -> SlotOperator:
    return slot_operator(
        op.dim,
        op.conductor,
        op.scalar,
        {slot + delta: mono for slot, mono in op.factors},
    )


@dataclass(frozen=True)
class FrameQuadruple:
    """The four tensor-square operators s1, s2, S1, S2 of a generator system.

    Their pairwise w-exponents form FRAME_THETA and each has order n; both
    facts are verified exactly at construction time.
    """

    n: int
    sigma1: SlotOperator
    sigma2: SlotOperator
    Sigma1: SlotOperator
    Sigma2: SlotOperator

    def __post_init__(self):
        ops = self.operators()
        ident = identity_operator(ops[0].dim, ops[0].conductor)
        for i in range(4):
            if ops[i].power(self.n) != ident:
                raise ConstructionError(f"frame operator {i} is not of order {self.n}")
            for j in range(4):
                if i == j:
                    continue
                r = omega_commute_exponent(ops[i], ops[j])
                if r != FRAME_THETA[i][j] % self.n:
                    raise ConstructionError(
                        f"frame pair ({i},{j}) has exponent {r}, "
                        f"expected {FRAME_THETA[i][j] % self.n}"
                    )

    def operators(self) -> tuple[SlotOperator, ...]:
        return (self.sigma1, self.sigma2, self.Sigma1, self.Sigma2)

    def exponent_matrix(self) -> tuple[tuple[int, ...], ...]:
        ops = self.operators()
        return tuple(
            tuple(
                0 if i == j else omega_commute_exponent(ops[i], ops[j])
                for j in range(4)
            )
            for i in range(4)
        )


def frame_quadruple(n: int, gamma_offset: int = 0, conductor: int | None = None) -> FrameQuadruple:
    """s1 = g1(x)g3, s2 = g2(x)g3, S1 = g1(x)g4, S2 = g2(x)g4.

    The first factor sits on generator slot ``gamma_offset`` (base slots
    2*gamma_offset..2*gamma_offset+1) and the second one generator slot to
    its right, matching the commuting-copy layout.
    """
    if gamma_offset < 0:
        raise ValueError("offset must be non-negative")
    system = clifford_generators(n, 4, conductor)
    g1, g2, g3, g4 = system.generators
    base = 2 * gamma_offset
    left = {1: shift_slots(g1, base), 2: shift_slots(g2, base)}
    right = {3: shift_slots(g3, base + 2), 4: shift_slots(g4, base + 2)}
    return FrameQuadruple(
        n,
        sigma1=left[1] * right[3],
        sigma2=left[2] * right[3],
        Sigma1=left[1] * right[4],
        Sigma2=left[2] * right[4],
    )
