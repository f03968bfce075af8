"""Relation-expression language: parser, pretty-printer, and evaluation.

Grammar (whitespace-insensitive, byte-offset error reporting):

    expr := sum '==' sum | sum
    sum  := prod (('+'|'-') prod)*
    prod := pow ('*' pow)*
    pow  := atom ('^' int)?
    atom := symbol | rational | '(' expr ')'

Expressions evaluate against one of three backends: exact slot operators,
dense floats (tolerance 1e-10), or the symbolic phase algebra.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import phaseword
from .cyclotomic import omega, session_conductor
from .monomial import OperatorSum
from .qgroup import build_A, pair_generator_images, symbolic_matrix_entries

MAX_SOURCE_BYTES = 64 * 1024

SYMBOLS = (
    "a", "b", "c", "d", "q", "w", "x", "y", "X", "Y",
    "s1", "s2", "S1", "S2", "g1", "g2", "g3", "g4",
    "a'", "b'", "c'", "d'",
)


class ExprSyntaxError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class EvalError(ValueError):
    pass


# -- AST ------------------------------------------------------------------


@dataclass(frozen=True)
class Sym:
    name: str


@dataclass(frozen=True)
class Rat:
    value: Fraction


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exponent: int


@dataclass(frozen=True)
class Mul:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Add:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Sub:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Eq:
    left: "Node"
    right: "Node"


Node = Sym | Rat | Pow | Mul | Add | Sub | Eq


# -- tokenizer / parser -----------------------------------------------------


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    offset: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            start = i
            while i < len(text) and text[i].isdigit():
                i += 1
            if i < len(text) and text[i] == "/":
                j = i + 1
                if j < len(text) and text[j].isdigit():
                    i = j
                    while i < len(text) and text[i].isdigit():
                        i += 1
            tokens.append(_Token("number", text[start:i], start))
            continue
        if ch.isalpha():
            start = i
            i += 1
            while i < len(text) and (text[i].isalnum() or text[i] == "'"):
                i += 1
            tokens.append(_Token("symbol", text[start:i], start))
            continue
        if text.startswith("==", i):
            tokens.append(_Token("eq", "==", i))
            i += 2
            continue
        if ch in "+-*^()":
            tokens.append(_Token(ch, ch, i))
            i += 1
            continue
        raise ExprSyntaxError(f"unexpected character {ch!r}", i)
    tokens.append(_Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def take(self, kind: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ExprSyntaxError(f"expected {kind}, found {tok.text or 'end'!r}", tok.offset)
        self.pos += 1
        return tok

    def parse_expr(self) -> Node:
        left = self.parse_sum()
        if self.peek().kind == "eq":
            self.take("eq")
            right = self.parse_sum()
            return Eq(left, right)
        return left

    def parse_sum(self) -> Node:
        node = self.parse_prod()
        while self.peek().kind in ("+", "-"):
            op = self.take(self.peek().kind)
            right = self.parse_prod()
            node = Add(node, right) if op.kind == "+" else Sub(node, right)
        return node

    def parse_prod(self) -> Node:
        node = self.parse_pow()
        while self.peek().kind == "*":
            self.take("*")
            node = Mul(node, self.parse_pow())
        return node

    def parse_pow(self) -> Node:
        base = self.parse_atom()
        if self.peek().kind == "^":
            self.take("^")
            sign = 1
            if self.peek().kind == "-":
                self.take("-")
                sign = -1
            tok = self.take("number")
            if "/" in tok.text:
                raise ExprSyntaxError("exponent must be an integer", tok.offset)
            return Pow(base, sign * int(tok.text))
        return base

    def parse_atom(self) -> Node:
        tok = self.peek()
        if tok.kind == "number":
            self.take("number")
            if "/" in tok.text:
                num, den = tok.text.split("/")
                return Rat(Fraction(int(num), int(den)))
            return Rat(Fraction(int(tok.text)))
        if tok.kind == "symbol":
            if tok.text not in SYMBOLS:
                raise ExprSyntaxError(f"unknown symbol {tok.text!r}", tok.offset)
            self.take("symbol")
            return Sym(tok.text)
        if tok.kind == "(":
            self.take("(")
            # equality is only legal at the root, so parentheses wrap sums
            node = self.parse_sum()
            self.take(")")
            return node
        raise ExprSyntaxError(f"expected a value, found {tok.text or 'end'!r}", tok.offset)


def parse_expr(text: str) -> Node:
    if len(text.encode()) > MAX_SOURCE_BYTES:
        raise ExprSyntaxError("input too large", MAX_SOURCE_BYTES)
    parser = _Parser(_tokenize(text))
    node = parser.parse_expr()
    parser.take("end")
    return node


def pretty(node: Node) -> str:
    """Deterministic rendering; parse(pretty(x)) == x."""

    def render(n: Node, parent_level: int) -> str:
        if isinstance(n, Sym):
            return n.name
        if isinstance(n, Rat):
            text = str(n.value)
            return text if "/" in text or n.value >= 0 else f"({text})"
        if isinstance(n, Pow):
            base = render(n.base, 3)
            return f"{base}^{n.exponent}"
        if isinstance(n, Mul):
            text = f"{render(n.left, 2)}*{render(n.right, 3)}"
            return f"({text})" if parent_level > 2 else text
        if isinstance(n, (Add, Sub)):
            op = "+" if isinstance(n, Add) else "-"
            text = f"{render(n.left, 1)} {op} {render(n.right, 2)}"
            return f"({text})" if parent_level > 1 else text
        if isinstance(n, Eq):
            return f"{render(n.left, 1)} == {render(n.right, 1)}"
        raise TypeError(n)

    return render(node, 0)


# -- evaluation -------------------------------------------------------------


def uses_primes(node: Node) -> bool:
    if isinstance(node, Sym):
        return node.name.endswith("'")
    if isinstance(node, (Mul, Add, Sub, Eq)):
        return uses_primes(node.left) or uses_primes(node.right)
    if isinstance(node, Pow):
        return uses_primes(node.base)
    return False


def _exact_bindings(n: int, coeffs, coeffs2, k: int) -> dict[str, OperatorSum]:
    A = build_A(n, *coeffs)
    cond = session_conductor(n)
    ident = OperatorSum.identity(n, cond)
    g1, g2, g3, g4 = pair_generator_images(n, copies=1)
    env = {
        "a": A.a, "b": A.b, "c": A.c, "d": A.d,
        "s1": A.frame.sigma1.as_sum(), "s2": A.frame.sigma2.as_sum(),
        "S1": A.frame.Sigma1.as_sum(), "S2": A.frame.Sigma2.as_sum(),
        "g1": g1, "g2": g2, "g3": g3, "g4": g4,
        "q": ident.scale(omega(n, k)),
        "w": ident.scale(omega(n, 1)),
    }
    for name, value in zip(("x", "y", "X", "Y"), coeffs):
        env[name] = ident.scale(Fraction(value))
    B = build_A(n, *(coeffs2 or coeffs), slot_offset=2)
    env.update({"a'": B.a, "b'": B.b, "c'": B.c, "d'": B.d})
    return env


def _symbolic_bindings(k: int) -> dict[str, phaseword.PhasePolynomial]:
    algebra = phaseword.weyl_pairs_theta(4)
    first = symbolic_matrix_entries(0, algebra)
    second = symbolic_matrix_entries(1, algebra)
    env = {
        "a": first["a"], "b": first["b"], "c": first["c"], "d": first["d"],
        "a'": second["a"], "b'": second["b"], "c'": second["c"], "d'": second["d"],
        "s1": phaseword.word(algebra, [0, 2]),
        "s2": phaseword.word(algebra, [1, 2]),
        "S1": phaseword.word(algebra, [0, 3]),
        "S2": phaseword.word(algebra, [1, 3]),
        "q": phaseword.omega_unit(algebra, k),
        "w": phaseword.omega_unit(algebra, 1),
        "x": phaseword.parameter(algebra, "x"),
        "y": phaseword.parameter(algebra, "y"),
        "X": phaseword.parameter(algebra, "X"),
        "Y": phaseword.parameter(algebra, "Y"),
    }
    return env


class _ExactEvaluator:
    def __init__(self, env):
        self.env = env

    def symbol(self, name):
        return self.env[name]

    def rational(self, value):
        some = next(iter(self.env.values()))
        return OperatorSum.identity(some.dim, some.conductor).scale(value)

    def power(self, value, exponent):
        if exponent >= 0:
            return value.power(exponent)
        inv = value.single_term().inverse()
        return inv.as_sum().power(-exponent)

    mul = staticmethod(lambda a, b: a * b)
    add = staticmethod(lambda a, b: a + b)
    sub = staticmethod(lambda a, b: a - b)

    def residual_info(self, residual):
        return residual.is_zero(), residual.to_json()


class _FloatEvaluator:
    """Dense matrices up to 1024 dimensions, scipy sparse beyond that."""

    DENSE_LIMIT = 1024

    def __init__(self, env, slot_count, n):
        self.dim = n**slot_count
        self.sparse = self.dim > self.DENSE_LIMIT
        if self.sparse:
            self.env = {key: op.to_sparse(slot_count) for key, op in env.items()}
        else:
            self.env = {key: op.to_dense(slot_count) for key, op in env.items()}

    def symbol(self, name):
        return self.env[name]

    def rational(self, value):
        if self.sparse:
            import scipy.sparse as sp

            return float(value) * sp.identity(self.dim, dtype=complex, format="csr")
        return float(value) * np.eye(self.dim, dtype=complex)

    def power(self, value, exponent):
        if exponent < 0:
            if self.sparse:
                raise EvalError("inverse powers need the dense float range")
            return np.linalg.matrix_power(np.linalg.inv(value), -exponent)
        result = self.rational(1)
        for _ in range(exponent):
            result = result @ value
        return result

    mul = staticmethod(lambda a, b: a @ b)
    add = staticmethod(lambda a, b: a + b)
    sub = staticmethod(lambda a, b: a - b)

    def residual_info(self, residual):
        if self.sparse:
            norm = float(abs(residual).max()) if residual.nnz else 0.0
        else:
            norm = float(np.max(np.abs(residual))) if residual.size else 0.0
        return norm < 1e-10, {"max_abs": norm}


class _SymbolicEvaluator:
    def __init__(self, env):
        self.env = env
        self.algebra = next(iter(env.values())).algebra

    def symbol(self, name):
        if name not in self.env:
            raise EvalError(f"symbol {name!r} is unavailable in the symbolic backend")
        return self.env[name]

    def rational(self, value):
        return phaseword.unit(self.algebra, value)

    def power(self, value, exponent):
        if exponent < 0:
            if len(value.terms) == 1 and not any(value.terms[0].gen_exps):
                term = value.terms[0]
                if term.coeff == 1 and not term.params:
                    return phaseword.omega_unit(self.algebra, term.omega_exp * exponent)
                if term.coeff == 1 and term.omega_exp == 0 and len(term.params) == 1:
                    name, exp = term.params[0]
                    return phaseword.parameter(self.algebra, name, exp * exponent)
            raise EvalError("negative powers apply only to scalars in the symbolic backend")
        result = phaseword.unit(self.algebra)
        for _ in range(exponent):
            result = result * value
        return result

    mul = staticmethod(lambda a, b: a * b)
    add = staticmethod(lambda a, b: a + b)
    sub = staticmethod(lambda a, b: a - b)

    def residual_info(self, residual):
        return residual.is_zero(), {"residual": str(residual)}


def make_evaluator(
    backend: str,
    n: int,
    coeffs=(1, 2, 3, 6),
    coeffs2=None,
    k: int = 1,
    needs_primes: bool = False,
):
    if backend == "symbolic":
        return _SymbolicEvaluator(_symbolic_bindings(k))
    env = _exact_bindings(n, coeffs, coeffs2, k)
    if backend == "exact":
        return _ExactEvaluator(env)
    if backend == "float":
        slot_count = 8 if needs_primes else 4
        if not needs_primes:
            env = {key: op for key, op in env.items() if not key.endswith("'")}
        if n ** slot_count > 10_000:
            raise EvalError(f"float backend needs dimension {n**slot_count}, beyond the guard")
        return _FloatEvaluator(env, slot_count, n)
    raise EvalError(f"unknown backend {backend!r}")


def _eval(node: Node, ev) -> object:
    if isinstance(node, Sym):
        return ev.symbol(node.name)
    if isinstance(node, Rat):
        return ev.rational(node.value)
    if isinstance(node, Pow):
        return ev.power(_eval(node.base, ev), node.exponent)
    if isinstance(node, Mul):
        return ev.mul(_eval(node.left, ev), _eval(node.right, ev))
    if isinstance(node, Add):
        return ev.add(_eval(node.left, ev), _eval(node.right, ev))
    if isinstance(node, Sub):
        return ev.sub(_eval(node.left, ev), _eval(node.right, ev))
    raise EvalError("equality may only appear at the top level")


def eval_expr(node: Node, ev) -> dict:
    """Evaluate an AST; equality nodes yield a verdict, values an export."""
    if isinstance(node, Eq):
        residual = ev.sub(_eval(node.left, ev), _eval(node.right, ev))
        holds, info = ev.residual_info(residual)
        return {"kind": "verdict", "holds": holds, "detail": info}
    value = _eval(node, ev)
    holds, info = ev.residual_info(value)
    return {"kind": "value", "is_zero": holds, "detail": info}
