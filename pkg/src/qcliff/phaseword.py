"""Symbolic algebra of generators with g_i g_j = w^T[i][j] g_j g_i.

Terms carry an exact rational coefficient, a power of the deformation unit w,
a Laurent monomial in formal commuting parameters (the matrix coordinates),
and a normal-ordered generator word.  With ``modulus=None`` the unit w is
treated as transcendental, so identities proved here hold for every order n
at once and for w = exp(2*pi*i*alpha) with alpha irrational; with a modulus
both w-exponents and generator exponents reduce mod n.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import Rational

#: w-commutation exponents of the frame quadruple (order s1, s2, S1, S2),
#: rows/columns/diagonals relations combined into one antisymmetric matrix.
FRAME_THETA: tuple[tuple[int, ...], ...] = (
    (0, 1, 1, 2),
    (-1, 0, 0, 1),
    (-1, 0, 0, 1),
    (-2, -1, -1, 0),
)

ParamVector = tuple[tuple[str, int], ...]


class AlgebraMismatchError(ValueError):
    pass


@dataclass(frozen=True)
class PhaseAlgebra:
    """G generators, antisymmetric integer exponent matrix, optional modulus."""

    num_generators: int
    theta: tuple[tuple[int, ...], ...]
    modulus: int | None = None

    def __post_init__(self):
        G = self.num_generators
        if len(self.theta) != G or any(len(row) != G for row in self.theta):
            raise ValueError("theta must be G x G")
        for i in range(G):
            if self.theta[i][i] != 0:
                raise ValueError("theta must have zero diagonal")
            for j in range(G):
                if self.theta[i][j] != -self.theta[j][i]:
                    raise ValueError("theta must be antisymmetric")
        if self.modulus is not None and self.modulus < 1:
            raise ValueError("modulus must be positive")

    def reduce_omega(self, e: int) -> int:
        return e % self.modulus if self.modulus else e

    def reduce_gen(self, e: int) -> int:
        return e % self.modulus if self.modulus else e


@dataclass(frozen=True)
class PhaseTerm:
    coeff: Fraction
    omega_exp: int
    params: ParamVector
    gen_exps: tuple[int, ...]

    def key(self) -> tuple:
        return (self.gen_exps, self.params, self.omega_exp)


def _merge_params(a: ParamVector, b: ParamVector) -> ParamVector:
    out = dict(a)
    for name, exp in b:
        out[name] = out.get(name, 0) + exp
    return tuple(sorted((k, v) for k, v in out.items() if v != 0))


@dataclass(frozen=True)
class PhasePolynomial:
    algebra: PhaseAlgebra
    terms: tuple[PhaseTerm, ...]

    @staticmethod
    def from_terms(algebra: PhaseAlgebra, terms) -> "PhasePolynomial":
        buckets: dict[tuple, Fraction] = {}
        for t in terms:
            if t.coeff == 0:
                continue
            buckets[t.key()] = buckets.get(t.key(), Fraction(0)) + t.coeff
        kept = [
            PhaseTerm(c, key[2], key[1], key[0])
            for key, c in buckets.items()
            if c != 0
        ]
        kept.sort(key=PhaseTerm.key)
        return PhasePolynomial(algebra, tuple(kept))

    @staticmethod
    def zero(algebra: PhaseAlgebra) -> "PhasePolynomial":
        return PhasePolynomial(algebra, ())

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "PhasePolynomial") -> None:
        if self.algebra != other.algebra:
            raise AlgebraMismatchError("operands live in different phase algebras")

    def __add__(self, other: "PhasePolynomial") -> "PhasePolynomial":
        self._check(other)
        return PhasePolynomial.from_terms(self.algebra, self.terms + other.terms)

    def __sub__(self, other: "PhasePolynomial") -> "PhasePolynomial":
        return self + (-other)

    def __neg__(self) -> "PhasePolynomial":
        return PhasePolynomial(
            self.algebra,
            tuple(PhaseTerm(-t.coeff, t.omega_exp, t.params, t.gen_exps) for t in self.terms),
        )

    def __mul__(self, other: "PhasePolynomial") -> "PhasePolynomial":
        self._check(other)
        alg = self.algebra
        theta = alg.theta
        G = alg.num_generators
        out = []
        for a in self.terms:
            for b in other.terms:
                cross = 0
                for i in range(G):
                    ei = a.gen_exps[i]
                    if not ei:
                        continue
                    for j in range(i):
                        ej = b.gen_exps[j]
                        if ej:
                            cross += ei * ej * theta[i][j]
                out.append(
                    PhaseTerm(
                        a.coeff * b.coeff,
                        alg.reduce_omega(a.omega_exp + b.omega_exp + cross),
                        _merge_params(a.params, b.params),
                        tuple(
                            alg.reduce_gen(x + y)
                            for x, y in zip(a.gen_exps, b.gen_exps)
                        ),
                    )
                )
        return PhasePolynomial.from_terms(alg, out)

    def scale(self, value: Rational) -> "PhasePolynomial":
        v = Fraction(value)
        return PhasePolynomial.from_terms(
            self.algebra,
            [PhaseTerm(t.coeff * v, t.omega_exp, t.params, t.gen_exps) for t in self.terms],
        )

    def times_omega(self, k: int) -> "PhasePolynomial":
        return PhasePolynomial.from_terms(
            self.algebra,
            [
                PhaseTerm(t.coeff, self.algebra.reduce_omega(t.omega_exp + k), t.params, t.gen_exps)
                for t in self.terms
            ],
        )

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for t in self.terms:
            bits = []
            if t.coeff != 1 or (t.omega_exp == 0 and not t.params and not any(t.gen_exps)):
                bits.append(str(t.coeff))
            if t.omega_exp:
                bits.append(f"w^{t.omega_exp}" if t.omega_exp != 1 else "w")
            for name, exp in t.params:
                bits.append(name if exp == 1 else f"{name}^{exp}")
            for i, e in enumerate(t.gen_exps):
                if e:
                    bits.append(f"g{i}" if e == 1 else f"g{i}^{e}")
            parts.append("*".join(bits) if bits else "1")
        return " + ".join(parts)


# -- constructors -------------------------------------------------------


def unit(algebra: PhaseAlgebra, coeff: Rational = 1) -> PhasePolynomial:
    G = algebra.num_generators
    return PhasePolynomial.from_terms(
        algebra, [PhaseTerm(Fraction(coeff), 0, (), (0,) * G)]
    )


def generator(algebra: PhaseAlgebra, index: int) -> PhasePolynomial:
    if not 0 <= index < algebra.num_generators:
        raise IndexError("generator index out of range")
    exps = tuple(1 if i == index else 0 for i in range(algebra.num_generators))
    return PhasePolynomial.from_terms(algebra, [PhaseTerm(Fraction(1), 0, (), exps)])


def parameter(algebra: PhaseAlgebra, name: str, exp: int = 1) -> PhasePolynomial:
    G = algebra.num_generators
    return PhasePolynomial.from_terms(
        algebra, [PhaseTerm(Fraction(1), 0, ((name, exp),), (0,) * G)]
    )


def omega_unit(algebra: PhaseAlgebra, k: int = 1) -> PhasePolynomial:
    G = algebra.num_generators
    return PhasePolynomial.from_terms(
        algebra, [PhaseTerm(Fraction(1), algebra.reduce_omega(k), (), (0,) * G)]
    )


def word(algebra: PhaseAlgebra, indices, coeff: Rational = 1) -> PhasePolynomial:
    poly = unit(algebra, coeff)
    for i in indices:
        poly = poly * generator(algebra, i)
    return poly


def normal_order(indices, algebra: PhaseAlgebra) -> PhaseTerm:
    """Sort a generator word into non-decreasing index order.

    Every adjacent transposition of (j, i) with j > i contributes
    theta[j][i] to the w-exponent; the result is order-independent.
    """
    indices = list(indices)
    omega_exp = 0
    for pos, j in enumerate(indices):
        for i in indices[pos + 1 :]:
            if j > i:
                omega_exp += algebra.theta[j][i]
    exps = [0] * algebra.num_generators
    for i in indices:
        exps[i] += 1
    return PhaseTerm(
        Fraction(1),
        algebra.reduce_omega(omega_exp),
        (),
        tuple(algebra.reduce_gen(e) for e in exps),
    )


# -- the algebras used by the verification suites -----------------------


def frame_theta(modulus: int | None = None) -> PhaseAlgebra:
    """Four generators with the frame exponent matrix (order s1, s2, S1, S2)."""
    return PhaseAlgebra(4, FRAME_THETA, modulus)


def two_copy_theta(modulus: int | None = None) -> PhaseAlgebra:
    """Eight generators: two frame blocks, zero cross-block (commuting copies)."""
    theta = [[0] * 8 for _ in range(8)]
    for i in range(4):
        for j in range(4):
            theta[i][j] = FRAME_THETA[i][j]
            theta[4 + i][4 + j] = FRAME_THETA[i][j]
    return PhaseAlgebra(8, tuple(tuple(row) for row in theta), modulus)


def weyl_pairs_theta(pairs: int, modulus: int | None = None) -> PhaseAlgebra:
    """2*pairs generators: each pair w-commutes (exponent 1), pairs commute.

    This is the faithful symbolic model of clock/shift factors on separate
    tensor slots; two pairs model one quantum-matrix copy, with the frame
    quadruple appearing as the words g0g2, g1g2, g0g3, g1g3.
    """
    G = 2 * pairs
    theta = [[0] * G for _ in range(G)]
    for p in range(pairs):
        theta[2 * p][2 * p + 1] = 1
        theta[2 * p + 1][2 * p] = -1
    return PhaseAlgebra(G, tuple(tuple(row) for row in theta), modulus)


# -- parameter-side manipulation ----------------------------------------


def substitute_bound(
    poly: PhasePolynomial,
    eliminate: str = "Y",
    numerator: tuple[str, ...] = ("y", "X"),
    denominator: tuple[str, ...] = ("x",),
) -> PhasePolynomial:
    """Impose a product identity (default xY = yX) by eliminating one parameter.

    Y^e is rewritten to (yX/x)^e in the Laurent parameter ring.
    """
    if eliminate in numerator or eliminate in denominator:
        raise ValueError("malformed bound: eliminated parameter reappears")
    out = []
    for t in poly.terms:
        params = dict(t.params)
        e = params.pop(eliminate, 0)
        if e:
            for name in numerator:
                params[name] = params.get(name, 0) + e
            for name in denominator:
                params[name] = params.get(name, 0) - e
        out.append(
            PhaseTerm(
                t.coeff,
                t.omega_exp,
                tuple(sorted((k, v) for k, v in params.items() if v != 0)),
                t.gen_exps,
            )
        )
    return PhasePolynomial.from_terms(poly.algebra, out)


def divide_by_binomial(
    poly: PhasePolynomial,
    lead: ParamVector,
    trail: ParamVector,
) -> tuple[PhasePolynomial, PhasePolynomial]:
    """Divide by the central binomial (lead - trail) in the parameters.

    ``lead`` must contain a variable absent from ``trail`` (default use:
    lead = xY, trail = yX), which guarantees termination.  Returns
    (quotient, remainder); the input equals quotient*(lead - trail) + remainder
    and the remainder has no term whose parameters are divisible by ``lead``.
    """
    lead_d = dict(lead)
    trail_d = dict(trail)
    marker = next((v for v in lead_d if v not in trail_d), None)
    if marker is None:
        raise ValueError("leading monomial must own a variable the trailing one lacks")
    for t in poly.terms:
        if any(exp < 0 for _, exp in t.params):
            raise ValueError("division requires non-negative parameter exponents")

    alg = poly.algebra
    quotient: list[PhaseTerm] = []
    current = poly
    while True:
        target = None
        for t in current.terms:
            params = dict(t.params)
            if all(params.get(v, 0) >= e for v, e in lead_d.items()):
                if target is None or dict(t.params).get(marker, 0) > dict(target.params).get(marker, 0):
                    target = t
        if target is None:
            return (
                PhasePolynomial.from_terms(alg, quotient),
                current,
            )
        params = dict(target.params)
        for v, e in lead_d.items():
            params[v] -= e
        q = PhaseTerm(
            target.coeff,
            target.omega_exp,
            tuple(sorted((k, v) for k, v in params.items() if v != 0)),
            target.gen_exps,
        )
        quotient.append(q)
        # current -= q * (lead - trail)
        lead_term = PhaseTerm(q.coeff, q.omega_exp, _merge_params(q.params, lead), q.gen_exps)
        trail_term = PhaseTerm(q.coeff, q.omega_exp, _merge_params(q.params, trail), q.gen_exps)
        current = PhasePolynomial.from_terms(
            alg,
            current.terms
            + (
                PhaseTerm(-lead_term.coeff, lead_term.omega_exp, lead_term.params, lead_term.gen_exps),
                trail_term,
            ),
        )


def is_divisible(poly: PhasePolynomial, lead: ParamVector, trail: ParamVector) -> bool:
    _, rem = divide_by_binomial(poly, lead, trail)
    return rem.is_zero()
