"""Exact arithmetic in cyclotomic fields Q(zeta_m).

Elements are stored in the power basis 1, zeta, ..., zeta^(phi(m)-1) with
rational coefficients, eagerly reduced modulo the m-th cyclotomic polynomial,
so equality of coefficient vectors is equality in the field.  All the
zero-tolerance relation checks in the rest of the package bottom out here.
"""
from __future__ import annotations

import cmath
import functools
from dataclasses import dataclass
from fractions import Fraction


class ConductorMismatchError(ValueError):
    """Raised when two values from different fields Q(zeta_m) are combined."""


Rational = Fraction | int


@dataclass(frozen=True)
class IntPolynomial:
    """Dense integer polynomial, coefficients low-to-high, no trailing zeros."""

    coeffs: tuple[int, ...]

    @staticmethod
    def of(*coeffs: int) -> "IntPolynomial":
        return IntPolynomial(_trim(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero() or other.is_zero():
            return IntPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, ci in enumerate(self.coeffs):
            if ci:
                for j, cj in enumerate(other.coeffs):
                    out[i + j] += ci * cj
        return IntPolynomial(_trim(tuple(out)))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [0] * (n - len(self.coeffs))
        b = list(other.coeffs) + [0] * (n - len(other.coeffs))
        return IntPolynomial(_trim(tuple(x - y for x, y in zip(a, b))))

    def exact_div(self, divisor: "IntPolynomial") -> "IntPolynomial":
        """Quotient self / divisor, requiring a zero remainder over Z."""
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        d = list(divisor.coeffs)
        lead = d[-1]
        quot = [0] * max(len(rem) - len(d) + 1, 0)
        while len(rem) >= len(d) and any(rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) < len(d):
                break
            q, r = divmod(rem[-1], lead)
            if r:
                raise ValueError("division is not exact over the integers")
            pos = len(rem) - len(d)
            quot[pos] = q
            for i, ci in enumerate(d):
                rem[pos + i] -= q * ci
        if any(rem):
            raise ValueError("division left a nonzero remainder")
        return IntPolynomial(_trim(tuple(quot)))


def _trim(coeffs: tuple[int, ...]) -> tuple[int, ...]:
    end = len(coeffs)
    while end and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


@functools.lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> IntPolynomial:
    """The m-th cyclotomic polynomial, by exact division of x^m - 1.

    >>> cyclotomic_polynomial(1).coeffs
    (-1, 1)
    >>> cyclotomic_polynomial(6).coeffs
    (1, -1, 1)
    """
    if m < 1:
        raise ValueError("conductor must be a positive integer")
    poly = IntPolynomial((-1,) + (0,) * (m - 1) + (1,))
    for d in range(1, m):
        if m % d == 0:
            poly = poly.exact_div(cyclotomic_polynomial(d))
    return poly


@functools.lru_cache(maxsize=None)
def _degree(m: int) -> int:
    return cyclotomic_polynomial(m).degree


@functools.lru_cache(maxsize=None)
def _power_table(m: int) -> tuple[tuple[int, ...], ...]:
    """Rows t = 0..max(m-1, 2*deg-2): integer coefficients of x^t mod Phi_m."""
    deg = _degree(m)
    phi = cyclotomic_polynomial(m).coeffs
    # x^deg = -(c_0 + c_1 x + ... + c_{deg-1} x^{deg-1}); Phi_m is monic.
    top = tuple(-c for c in phi[:-1])
    rows: list[tuple[int, ...]] = []
    for t in range(max(m, 2 * deg - 1)):
        if t < deg:
            rows.append(tuple(1 if i == t else 0 for i in range(deg)))
            continue
        prev = rows[t - 1]
        shifted = [0] + list(prev[:-1])
        overflow = prev[-1]
        if overflow:
            for i in range(deg):
                shifted[i] += overflow * top[i]
        rows.append(tuple(shifted))
    return tuple(rows)


@dataclass(frozen=True)
class CyclotomicNumber:
    """An element of Q(zeta_m) in the reduced power basis."""

    conductor: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coeffs) != _degree(self.conductor):
            raise ValueError("coefficient vector has the wrong length")

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero(m: int) -> "CyclotomicNumber":
        return CyclotomicNumber(m, (Fraction(0),) * _degree(m))

    @staticmethod
    def one(m: int) -> "CyclotomicNumber":
        return CyclotomicNumber.from_rational(m, 1)

    @staticmethod
    def from_rational(m: int, value: Rational) -> "CyclotomicNumber":
        deg = _degree(m)
        coeffs = [Fraction(0)] * deg
        coeffs[0] = Fraction(value)
        return CyclotomicNumber(m, tuple(coeffs))

    # -- predicates ---------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("value is not rational")
        return self.coeffs[0]

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- arithmetic ---------------------------------------------------

    def _check(self, other: "CyclotomicNumber") -> None:
        if self.conductor != other.conductor:
            raise ConductorMismatchError(
                f"conductor {self.conductor} vs {other.conductor}"
            )

    def __add__(self, other: "CyclotomicNumber") -> "CyclotomicNumber":
        self._check(other)
        return CyclotomicNumber(
            self.conductor, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other: "CyclotomicNumber") -> "CyclotomicNumber":
        self._check(other)
        return CyclotomicNumber(
            self.conductor, tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self) -> "CyclotomicNumber":
        return CyclotomicNumber(self.conductor, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        deg = len(self.coeffs)
        conv = [Fraction(0)] * (2 * deg - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        conv[i + j] += a * b
        table = _power_table(self.conductor)
        out = [Fraction(0)] * deg
        for t, c in enumerate(conv):
            if c:
                row = table[t]
                for i in range(deg):
                    if row[i]:
                        out[i] += c * row[i]
        return CyclotomicNumber(self.conductor, tuple(out))

    __rmul__ = __mul__

    def scale(self, value: Rational) -> "CyclotomicNumber":
        v = Fraction(value)
        return CyclotomicNumber(self.conductor, tuple(a * v for a in self.coeffs))

    def invert(self) -> "CyclotomicNumber":
        """Multiplicative inverse via the extended Euclidean algorithm."""
        if self.is_zero():
            raise ZeroDivisionError("cyclotomic division by zero")
        if self.is_rational():
            return CyclotomicNumber.from_rational(self.conductor, 1 / self.coeffs[0])
        modulus = [Fraction(c) for c in cyclotomic_polynomial(self.conductor).coeffs]
        r0, r1 = modulus, _trim_frac(list(self.coeffs))
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while len(r1) > 1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        # r1 is a nonzero constant c: s1 * self == c (mod Phi_m).
        c = r1[0]
        deg = _degree(self.conductor)
        inv = [x / c for x in s1] + [Fraction(0)] * deg
        table = _power_table(self.conductor)
        out = [Fraction(0)] * deg
        for t, coeff in enumerate(inv[: 2 * deg - 1]):
            if coeff:
                row = table[t]
                for i in range(deg):
                    if row[i]:
                        out[i] += coeff * row[i]
        return CyclotomicNumber(self.conductor, tuple(out))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(1) / Fraction(other))
        return self * other.invert()

    def __pow__(self, k: int) -> "CyclotomicNumber":
        if k < 0:
            return self.invert() ** (-k)
        result = CyclotomicNumber.one(self.conductor)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> "CyclotomicNumber":
        """Complex conjugation: zeta -> zeta^(m-1)."""
        m = self.conductor
        table = _power_table(m)
        deg = len(self.coeffs)
        out = [Fraction(0)] * deg
        for j, c in enumerate(self.coeffs):
            if c:
                row = table[(m - j) % m]
                for i in range(deg):
                    if row[i]:
                        out[i] += c * row[i]
        return CyclotomicNumber(m, tuple(out))

    # -- bridges ------------------------------------------------------

    def to_complex(self) -> complex:
        base = 2j * cmath.pi / self.conductor
        return sum(
            (complex(c) * cmath.exp(base * j) for j, c in enumerate(self.coeffs) if c),
            complex(0),
        )

    def sort_key(self) -> tuple:
        return tuple((c.numerator, c.denominator) for c in self.coeffs)

    def to_json(self) -> dict:
        return {
            "conductor": self.conductor,
            "coefficients": [[c.numerator, c.denominator] for c in self.coeffs],
        }

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            unit = "1" if j == 0 else ("z" if j == 1 else f"z^{j}")
            if j == 0:
                parts.append(str(c))
            elif abs(c) == 1:
                parts.append(unit if c > 0 else f"-{unit}")
            else:
                parts.append(f"{c}*{unit}")
        return " + ".join(parts).replace("+ -", "- ")


def root_of_unity(m: int, k: int) -> "CyclotomicNumber":
    """zeta_m^k reduced mod Phi_m; root_of_unity(m, 0) == 1."""
    row = _power_table(m)[k % m]
    return CyclotomicNumber(m, tuple(Fraction(c) for c in row))


def session_conductor(n: int) -> int:
    """All scalars for order n live in Q(zeta_2n), so sqrt(q) is available."""
    return 2 * n


def omega(n: int, k: int = 1) -> CyclotomicNumber:
    """The primitive n-th root of unity (to the k-th power) inside Q(zeta_2n)."""
    return root_of_unity(2 * n, (2 * k) % (2 * n))


def half_root(n: int, k: int = 1) -> CyclotomicNumber:
    """zeta_2n^k, the square root of omega(n)^k inside the session field."""
    return root_of_unity(2 * n, k % (2 * n))


# -- local helpers on Fraction coefficient lists (for invert) ----------


def _trim_frac(coeffs: list[Fraction]) -> list[Fraction]:
    end = len(coeffs)
    while end and coeffs[end - 1] == 0:
        end -= 1
    return coeffs[:end] or [Fraction(0)]


def _poly_divmod(a: list[Fraction], b: list[Fraction]):
    rem = list(a)
    quot = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    while len(_trim_frac(rem)) >= len(b) and any(rem):
        rem = _trim_frac(rem)
        if len(rem) < len(b):
            break
        q = rem[-1] / b[-1]
        pos = len(rem) - len(b)
        quot[pos] = q
        for i, ci in enumerate(b):
            rem[pos + i] -= q * ci
    return _trim_frac(quot), _trim_frac(rem)


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ci in enumerate(a):
        if ci:
            for j, cj in enumerate(b):
                out[i + j] += ci * cj
    return _trim_frac(out)


def _poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return _trim_frac([x - y for x, y in zip(a, b)])
