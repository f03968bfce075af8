"""Expression grammar, round-trips, and backend evaluation."""
import random
from fractions import Fraction

import pytest

from qcliff.exprlang import (
    Add,
    Eq,
    EvalError,
    ExprSyntaxError,
    Mul,
    Pow,
    Rat,
    Sub,
    Sym,
    eval_expr,
    make_evaluator,
    parse_expr,
    pretty,
    uses_primes,
)


def test_equality_ast_shape():
    ast = parse_expr("a*b == q*b*a")
    assert isinstance(ast, Eq)
    assert ast.left == Mul(Sym("a"), Sym("b"))
    assert ast.right == Mul(Mul(Sym("q"), Sym("b")), Sym("a"))


def test_diagonal_relation_ast():
    ast = parse_expr("a*d - d*a == (q - q^-1)*b*c")
    assert isinstance(ast, Eq)
    assert isinstance(ast.left, Sub)
    assert ast.right == Mul(
        Mul(Sub(Sym("q"), Pow(Sym("q"), -1)), Sym("b")), Sym("c")
    )


def test_unbalanced_paren_offset():
    with pytest.raises(ExprSyntaxError) as err:
        parse_expr("a*(b")
    assert err.value.offset == 4


def test_unknown_symbol_offset():
    with pytest.raises(ExprSyntaxError) as err:
        parse_expr("a*zz")
    assert err.value.offset == 2


def test_nested_equality_rejected():
    with pytest.raises(ExprSyntaxError):
        parse_expr("(a == b)*c")
    with pytest.raises(ExprSyntaxError):
        parse_expr("a == b == c")


def test_rational_literals():
    ast = parse_expr("2/3*a")
    assert ast == Mul(Rat(Fraction(2, 3)), Sym("a"))
    with pytest.raises(ExprSyntaxError):
        parse_expr("a^1/2")


def test_whitespace_insensitive():
    assert parse_expr("a *  b==q* b *a") == parse_expr("a*b == q*b*a")


def _random_ast(rng: random.Random, depth: int = 0):
    leaf_pool = ["a", "b", "c", "d", "q", "w", "x", "s1", "S2", "a'"]
    if depth >= 3 or rng.random() < 0.35:
        if rng.random() < 0.3:
            value = Fraction(rng.randint(0, 9), rng.randint(1, 9))
            return Rat(value)
        return Sym(rng.choice(leaf_pool))
    kind = rng.choice(["add", "sub", "mul", "pow"])
    if kind == "pow":
        return Pow(_random_ast(rng, 3), rng.randint(-3, 3))
    left = _random_ast(rng, depth + 1)
    right = _random_ast(rng, depth + 1)
    return {"add": Add, "sub": Sub, "mul": Mul}[kind](left, right)


def test_pretty_parse_roundtrip_corpus():
    rng = random.Random(42)
    for i in range(200):
        ast = _random_ast(rng)
        if rng.random() < 0.4:
            ast = Eq(ast, _random_ast(rng))
        rendered = pretty(ast)
        assert parse_expr(rendered) == ast, f"corpus item {i}: {rendered}"


def test_uses_primes():
    assert uses_primes(parse_expr("a*a' == a'*a"))
    assert not uses_primes(parse_expr("a*b == q*b*a"))


@pytest.mark.parametrize("backend", ["exact", "float", "symbolic"])
def test_row_relation_across_backends(backend):
    ast = parse_expr("a*b == q*b*a")
    ev = make_evaluator(backend, 3, ("1", "2", "3", "6"), None, 1)
    assert eval_expr(ast, ev)["holds"]


def test_failing_relation_reports_residual():
    ast = parse_expr("a*b == b*a")
    ev = make_evaluator("exact", 3, ("1", "2", "3", "6"), None, 1)
    out = eval_expr(ast, ev)
    assert not out["holds"]
    assert out["detail"]["terms"]


def test_representation_identity_any_coefficients():
    ast = parse_expr("a*d == w^2*d*a")
    for coeffs in (("1", "2", "3", "6"), ("1", "1", "1", "2")):
        ev = make_evaluator("exact", 3, coeffs, None, 1)
        assert eval_expr(ast, ev)["holds"]


def test_frame_symbols_compose():
    ast = parse_expr("s1 == g1*g3")
    ev = make_evaluator("exact", 4, ("1", "1", "1", "1"), None, 1)
    assert eval_expr(ast, ev)["holds"]


def test_scalar_inverse_allowed_operator_sum_inverse_rejected():
    ev = make_evaluator("exact", 3, ("1", "2", "3", "6"), None, 1)
    assert eval_expr(parse_expr("q*q^-1 == 1"), ev)["holds"]
    assert eval_expr(parse_expr("s1*s1^-1 == 1"), ev)["holds"]
    with pytest.raises(ValueError):
        eval_expr(parse_expr("(a + b)^-1"), ev)


def test_symbolic_backend_rejects_generator_symbols():
    ev = make_evaluator("symbolic", 3, ("1", "2", "3", "6"), None, 1)
    with pytest.raises(EvalError):
        eval_expr(parse_expr("g1*g2 == w*g2*g1"), ev)


def test_symbolic_diagonal_divisibility_expression():
    ast = parse_expr("a*d - d*a == (w - w^-1)*b*c")
    ev = make_evaluator("symbolic", 3, ("1", "2", "3", "6"), None, 1)
    out = eval_expr(ast, ev)
    assert not out["holds"]  # free coordinates: residual is the bound multiple


def test_float_backend_guard():
    ast = parse_expr("a*a' == a'*a")
    with pytest.raises(EvalError):
        make_evaluator("float", 4, ("1", "2", "3", "6"), None, 1, needs_primes=True)


def test_value_expression_export():
    ev = make_evaluator("exact", 3, ("1", "2", "3", "6"), None, 1)
    out = eval_expr(parse_expr("a*d - w^2*d*a"), ev)
    assert out["kind"] == "value" and out["is_zero"]
