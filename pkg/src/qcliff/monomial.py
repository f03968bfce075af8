"""Monomial matrices, slot-indexed tensor operators, and their formal sums.

A SlotOperator is scalar * (tensor product of monomial factors over named
slots, identity everywhere else), modelling operators on an infinite tensor
product of n-dimensional spaces with only finitely many non-identity factors.
An OperatorSum is a canonical linear combination of those, so ``a - b`` being
the empty sum is an exact zero test.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sp

from .cyclotomic import CyclotomicNumber, Rational

DENSE_DIM_GUARD = 10_000


class DimensionMismatchError(ValueError):
    pass


class SlotOverflowError(ValueError):
    pass


@dataclass(frozen=True)
class LocalMonomial:
    """d x d generalized permutation matrix: M[perm[j], j] = phases[j]."""

    dim: int
    perm: tuple[int, ...]
    phases: tuple[CyclotomicNumber, ...]
    degenerate: bool = field(default=False, compare=False)

    def __post_init__(self):
        if sorted(self.perm) != list(range(self.dim)):
            raise ValueError("perm must be a permutation of 0..dim-1")
        if len(self.phases) != self.dim:
            raise ValueError("need one phase per column")
        if not self.degenerate and any(p.is_zero() for p in self.phases):
            raise ValueError("zero phase on a non-degenerate monomial")

    @staticmethod
    def identity(dim: int, conductor: int) -> "LocalMonomial":
        one = CyclotomicNumber.one(conductor)
        return LocalMonomial(dim, tuple(range(dim)), (one,) * dim)

    def is_identity(self) -> bool:
        return self.perm == tuple(range(self.dim)) and all(
            p.is_rational() and p.rational_value() == 1 for p in self.phases
        )

    def compose(self, other: "LocalMonomial") -> "LocalMonomial":
        """Matrix product self @ other (still monomial)."""
        if self.dim != other.dim:
            raise DimensionMismatchError(f"{self.dim} != {other.dim}")
        perm = tuple(self.perm[other.perm[j]] for j in range(self.dim))
        phases = tuple(
            self.phases[other.perm[j]] * other.phases[j] for j in range(self.dim)
        )
        return LocalMonomial(
            self.dim, perm, phases, degenerate=self.degenerate or other.degenerate
        )

    def kron(self, other: "LocalMonomial") -> "LocalMonomial":
        """Kronecker product, row-major (self is the most significant factor)."""
        dim = self.dim * other.dim
        perm = [0] * dim
        phases = []
        for ja in range(self.dim):
            for jb in range(other.dim):
                j = ja * other.dim + jb
                perm[j] = self.perm[ja] * other.dim + other.perm[jb]
                phases.append(self.phases[ja] * other.phases[jb])
        return LocalMonomial(
            dim, tuple(perm), tuple(phases), degenerate=self.degenerate or other.degenerate
        )

    def inverse(self) -> "LocalMonomial":
        if any(p.is_zero() for p in self.phases):
            raise ZeroDivisionError("degenerate monomial is not invertible")
        perm = [0] * self.dim
        phases = [None] * self.dim
        for j in range(self.dim):
            perm[self.perm[j]] = j
            phases[self.perm[j]] = self.phases[j].invert()
        return LocalMonomial(self.dim, tuple(perm), tuple(phases))

    def power(self, k: int) -> "LocalMonomial":
        if k < 0:
            return self.inverse().power(-k)
        conductor = self.phases[0].conductor
        result = LocalMonomial.identity(self.dim, conductor)
        base = self
        while k:
            if k & 1:
                result = result.compose(base)
            base = base.compose(base)
            k >>= 1
        return result

    def dense(self) -> np.ndarray:
        out = np.zeros((self.dim, self.dim), dtype=complex)
        for j in range(self.dim):
            out[self.perm[j], j] = self.phases[j].to_complex()
        return out

    def sort_key(self) -> tuple:
        return (self.perm, tuple(p.sort_key() for p in self.phases))

    def to_json(self) -> dict:
        return {
            "perm": list(self.perm),
            "phases": [p.to_json() for p in self.phases],
        }


def mono_compose(a: LocalMonomial, b: LocalMonomial) -> LocalMonomial:
    return a.compose(b)


def mono_kron(a: LocalMonomial, b: LocalMonomial) -> LocalMonomial:
    return a.kron(b)


@dataclass(frozen=True)
class SlotOperator:
    """scalar * (monomial factors at slots, implicit identity tail).

    Canonical form: every stored factor is normalized so its first nonzero
    phase is 1 (the pulled-out phase lives in ``scalar``), and identity
    factors are pruned.  Use :func:`slot_operator` to construct.
    """

    dim: int
    conductor: int
    scalar: CyclotomicNumber
    factors: tuple[tuple[int, LocalMonomial], ...]

    def signature(self) -> tuple:
        return tuple((slot, mono.sort_key()) for slot, mono in self.factors)

    def slots(self) -> frozenset[int]:
        return frozenset(slot for slot, _ in self.factors)

    def is_zero(self) -> bool:
        return self.scalar.is_zero()

    def __mul__(self, other: "SlotOperator") -> "SlotOperator":
        if self.dim != other.dim:
            raise DimensionMismatchError(f"{self.dim} != {other.dim}")
        left = dict(self.factors)
        right = dict(other.factors)
        merged = {}
        for slot in left.keys() | right.keys():
            a = left.get(slot)
            b = right.get(slot)
            if a is None:
                merged[slot] = b
            elif b is None:
                merged[slot] = a
            else:
                merged[slot] = a.compose(b)
        return slot_operator(self.dim, self.conductor, self.scalar * other.scalar, merged)

    def scale(self, value: CyclotomicNumber | Rational) -> "SlotOperator":
        scalar = self.scalar * value if isinstance(value, CyclotomicNumber) else self.scalar.scale(value)
        return SlotOperator(self.dim, self.conductor, scalar, self.factors)

    def power(self, k: int) -> "SlotOperator":
        result = identity_operator(self.dim, self.conductor)
        base = self
        if k < 0:
            base = self.inverse()
            k = -k
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "SlotOperator":
        if self.scalar.is_zero():
            raise ZeroDivisionError("zero operator is not invertible")
        return slot_operator(
            self.dim,
            self.conductor,
            self.scalar.invert(),
            {slot: mono.inverse() for slot, mono in self.factors},
        )

    def as_sum(self) -> "OperatorSum":
        return OperatorSum.from_terms(self.dim, self.conductor, [self])

    def to_json(self) -> dict:
        return {
            "scalar": self.scalar.to_json(),
            "factors": {str(slot): mono.to_json() for slot, mono in self.factors},
        }


def slot_operator(
    dim: int,
    conductor: int,
    scalar: CyclotomicNumber | Rational,
    factors: dict[int, LocalMonomial],
) -> SlotOperator:
    """Build a canonical SlotOperator (phase pivots pulled out, identities pruned)."""
    if not isinstance(scalar, CyclotomicNumber):
        scalar = CyclotomicNumber.from_rational(conductor, scalar)
    kept: dict[int, LocalMonomial] = {}
    for slot, mono in factors.items():
        if slot < 0:
            raise SlotOverflowError("slot indices must be non-negative")
        if mono.dim != dim:
            raise DimensionMismatchError("factor dim differs from base dim")
        pivot = next((p for p in mono.phases if not p.is_zero()), None)
        if pivot is None:
            return SlotOperator(dim, conductor, CyclotomicNumber.zero(conductor), ())
        if not (pivot.is_rational() and pivot.rational_value() == 1):
            inv = pivot.invert()
            mono = LocalMonomial(
                mono.dim,
                mono.perm,
                tuple(p * inv for p in mono.phases),
                degenerate=mono.degenerate,
            )
            scalar = scalar * pivot
        if not mono.is_identity():
            kept[slot] = mono
    if scalar.is_zero():
        return SlotOperator(dim, conductor, scalar, ())
    return SlotOperator(dim, conductor, scalar, tuple(sorted(kept.items())))


def identity_operator(dim: int, conductor: int) -> SlotOperator:
    return SlotOperator(dim, conductor, CyclotomicNumber.one(conductor), ())


@dataclass(frozen=True)
class OperatorSum:
    """Canonical formal sum of SlotOperators; empty terms means zero."""

    dim: int
    conductor: int
    terms: tuple[SlotOperator, ...]

    @staticmethod
    def from_terms(dim: int, conductor: int, terms) -> "OperatorSum":
        buckets: dict[tuple, SlotOperator] = {}
        for term in terms:
            if term.is_zero():
                continue
            key = term.signature()
            if key in buckets:
                merged_scalar = buckets[key].scalar + term.scalar
                buckets[key] = SlotOperator(dim, conductor, merged_scalar, term.factors)
            else:
                buckets[key] = term
        kept = sorted(
            (t for t in buckets.values() if not t.is_zero()),
            key=SlotOperator.signature,
        )
        return OperatorSum(dim, conductor, tuple(kept))

    @staticmethod
    def zero(dim: int, conductor: int) -> "OperatorSum":
        return OperatorSum(dim, conductor, ())

    @staticmethod
    def identity(dim: int, conductor: int) -> "OperatorSum":
        return identity_operator(dim, conductor).as_sum()

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "OperatorSum") -> None:
        if self.dim != other.dim:
            raise DimensionMismatchError(f"{self.dim} != {other.dim}")

    def __add__(self, other: "OperatorSum") -> "OperatorSum":
        self._check(other)
        return OperatorSum.from_terms(self.dim, self.conductor, self.terms + other.terms)

    def __sub__(self, other: "OperatorSum") -> "OperatorSum":
        return self + (-other)

    def __neg__(self) -> "OperatorSum":
        return OperatorSum(
            self.dim,
            self.conductor,
            tuple(t.scale(-1) for t in self.terms),
        )

    def __mul__(self, other: "OperatorSum") -> "OperatorSum":
        self._check(other)
        products = [a * b for a in self.terms for b in other.terms]
        return OperatorSum.from_terms(self.dim, self.conductor, products)

    def scale(self, value: CyclotomicNumber | Rational) -> "OperatorSum":
        scaled = [t.scale(value) for t in self.terms]
        return OperatorSum.from_terms(self.dim, self.conductor, scaled)

    def power(self, k: int) -> "OperatorSum":
        if k < 0:
            raise ValueError("negative powers are only defined for monomial terms")
        result = OperatorSum.identity(self.dim, self.conductor)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def max_slot(self) -> int:
        return max((slot for t in self.terms for slot, _ in t.factors), default=-1)

    def single_term(self) -> SlotOperator:
        if len(self.terms) != 1:
            raise ValueError("operator is not a single monomial term")
        return self.terms[0]

    # -- float bridges ---------------------------------------------------

    def to_sparse(self, slot_count: int) -> sp.csr_matrix:
        """Truncate the identity tail at slot_count slots, as a sparse matrix."""
        n = self.dim
        if self.max_slot() >= slot_count:
            raise SlotOverflowError("operator uses slots beyond the truncation")
        full = n**slot_count
        strides = [n ** (slot_count - 1 - s) for s in range(slot_count)]
        rows: list[int] = []
        cols: list[int] = []
        vals: list[complex] = []
        for term in self.terms:
            scalar = term.scalar.to_complex()
            factors = dict(term.factors)
            for col in range(full):
                digits = [(col // strides[s]) % n for s in range(slot_count)]
                row = 0
                phase = scalar
                for s in range(slot_count):
                    mono = factors.get(s)
                    if mono is None:
                        row += digits[s] * strides[s]
                    else:
                        row += mono.perm[digits[s]] * strides[s]
                        phase *= mono.phases[digits[s]].to_complex()
                rows.append(row)
                cols.append(col)
                vals.append(phase)
        return sp.csr_matrix(
            sp.coo_matrix((vals, (rows, cols)), shape=(full, full), dtype=complex)
        )

    def to_dense(self, slot_count: int) -> np.ndarray:
        """Explicit matrix on the truncated tensor space (slot 0 most significant)."""
        n = self.dim
        if self.max_slot() >= slot_count:
            raise SlotOverflowError("operator uses slots beyond the truncation")
        full = n**slot_count
        if full > DENSE_DIM_GUARD:
            raise ValueError(f"dense dimension {full} exceeds guard {DENSE_DIM_GUARD}")
        out = np.zeros((full, full), dtype=complex)
        eye = np.eye(n, dtype=complex)
        for term in self.terms:
            factors = dict(term.factors)
            acc = np.array([[term.scalar.to_complex()]])
            for s in range(slot_count):
                mono = factors.get(s)
                acc = np.kron(acc, eye if mono is None else mono.dense())
            out += acc
        return out

    def to_json(self) -> dict:
        return {"dim": self.dim, "terms": [t.to_json() for t in self.terms]}

    def dense_triples(self, slot_count: int) -> list[tuple[int, int, float, float]]:
        """Sparse coordinate export: (row, col, re, im) per structural nonzero."""
        mat = self.to_sparse(slot_count).tocoo()
        triples = [
            (int(r), int(c), float(v.real), float(v.imag))
            for r, c, v in zip(mat.row, mat.col, mat.data)
            if v != 0
        ]
        return sorted(triples)


def commutator(a: OperatorSum, b: OperatorSum) -> OperatorSum:
    return a * b - b * a
