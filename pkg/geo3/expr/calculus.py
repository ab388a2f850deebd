"""Symbolic differentiation of expression trees.

Only used where a derived model has to be written down as an expression, e.g.
the tangent developable ``gamma(u) + v gamma'(u)``. Numeric derivatives go
through :mod:`geo3.autodiff` instead.
"""

from .nodes import Binary, Call, Constant, Expr, Unary, Variable

ZERO = Constant(0.0)
ONE = Constant(1.0)


def _is(expr: Expr, value: float) -> bool:
    return isinstance(expr, Constant) and expr.value == value


def _add(a: Expr, b: Expr) -> Expr:
    if _is(a, 0.0):
        return b
    if _is(b, 0.0):
        return a
    return Binary("+", a, b)


def _sub(a: Expr, b: Expr) -> Expr:
    if _is(b, 0.0):
        return a
    if _is(a, 0.0):
        return Unary("-", b)
    return Binary("-", a, b)


def _mul(a: Expr, b: Expr) -> Expr:
    if _is(a, 0.0) or _is(b, 0.0):
        return ZERO
    if _is(a, 1.0):
        return b
    if _is(b, 1.0):
        return a
    return Binary("*", a, b)


def _div(a: Expr, b: Expr) -> Expr:
    if _is(a, 0.0):
        return ZERO
    return Binary("/", a, b)


def _outer(function: str, x: Expr) -> Expr:
    """``f'(x)`` for the built-in functions."""
    match function:
        case "sin":
            return Call("cos", x)
        case "cos":
            return Unary("-", Call("sin", x))
        case "tan":
            return Binary("+", ONE, Binary("^", Call("tan", x), Constant(2.0)))
        case "sinh":
            return Call("cosh", x)
        case "cosh":
            return Call("sinh", x)
        case "tanh":
            return Binary("-", ONE, Binary("^", Call("tanh", x), Constant(2.0)))
        case "exp":
            return Call("exp", x)
        case "ln":
            return Binary("/", ONE, x)
        case "sqrt":
            return Binary("/", ONE, Binary("*", Constant(2.0), Call("sqrt", x)))
        case "atan":
            return Binary("/", ONE, Binary("+", ONE, Binary("^", x, Constant(2.0))))
        case "abs":
            return Binary("/", x, Call("abs", x))
    raise ValueError(f"Unknown function '{function}'")


def differentiate(expr: Expr, name: str) -> Expr:
    """The expression of ``d expr / d name``.

    Constant factors and zero terms are folded away; no further simplification
    is attempted.
    """
    if name not in expr.variables():
        return ZERO

    match expr:
        case Variable():
            return ONE
        case Unary(op="-", operand=operand):
            return Unary("-", differentiate(operand, name))
        case Unary(operand=operand):
            return differentiate(operand, name)
        case Binary(op="+", left=a, right=b):
            return _add(differentiate(a, name), differentiate(b, name))
        case Binary(op="-", left=a, right=b):
            return _sub(differentiate(a, name), differentiate(b, name))
        case Binary(op="*", left=a, right=b):
            return _add(
                _mul(differentiate(a, name), b), _mul(a, differentiate(b, name))
            )
        case Binary(op="/", left=a, right=b):
            numerator = _sub(
                _mul(differentiate(a, name), b), _mul(a, differentiate(b, name))
            )
            return _div(numerator, Binary("^", b, Constant(2.0)))
        case Binary(op="^", left=base, right=exponent) if name not in (
            exponent.variables()
        ):
            lowered = Binary("^", base, Binary("-", exponent, ONE))
            return _mul(_mul(exponent, lowered), differentiate(base, name))
        case Binary(op="^", left=base, right=exponent):
            # b^e (e' ln b + e b' / b)
            inner = _add(
                _mul(differentiate(exponent, name), Call("ln", base)),
                _div(_mul(exponent, differentiate(base, name)), base),
            )
            return _mul(expr, inner)
        case Call(function=function, argument=argument):
            return _mul(_outer(function, argument), differentiate(argument, name))
    raise TypeError(f"Unknown expression node {expr!r}")
