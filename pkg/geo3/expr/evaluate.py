"""Tree-walking evaluation of expressions over a pluggable number type.

The walker is shared by plain float evaluation (this module) and Taylor-jet
lifting (:mod:`geo3.autodiff`). Addition, subtraction, multiplication and
negation use the number type's operators; everything with a domain restriction
goes through an :class:`Algebra`, which reports the offending subexpression.
"""

import math
from typing import Any, Mapping, Protocol, TypeVar

from geo3.errors import DomainError

from .nodes import Binary, Call, Constant, Expr, Unary, Variable, integral_exponent


N = TypeVar("N")


class Algebra(Protocol[N]):
    """Operations with restricted domains for a number type ``N``."""

    def constant(self, value: float) -> N: ...

    def call(self, function: str, argument: N, node: Expr) -> N: ...

    def divide(self, numerator: N, denominator: N, node: Expr) -> N: ...

    def integer_power(self, base: N, exponent: int, node: Expr) -> N: ...

    def real_power(self, base: N, exponent: N, node: Expr) -> N: ...


def walk(expr: Expr, bindings: Mapping[str, Any], algebra: Algebra[N]) -> N:
    """Evaluate ``expr`` with variables bound to values of the algebra's type."""
    match expr:
        case Constant(value=value):
            return algebra.constant(value)
        case Variable(name=name):
            try:
                return bindings[name]
            except KeyError:
                raise DomainError(f"Variable '{name}' is not bound", str(expr))
        case Unary(op="-", operand=operand):
            return -walk(operand, bindings, algebra)
        case Unary(operand=operand):
            return walk(operand, bindings, algebra)
        case Binary(op="^", left=left, right=right):
            base = walk(left, bindings, algebra)
            if (exponent := integral_exponent(right)) is not None:
                return algebra.integer_power(base, exponent, expr)
            return algebra.real_power(base, walk(right, bindings, algebra), expr)
        case Binary(op=op, left=left, right=right):
            a = walk(left, bindings, algebra)
            b = walk(right, bindings, algebra)
            if op == "+":
                return a + b
            if op == "-":
                return a - b
            if op == "*":
                return a * b
            return algebra.divide(a, b, expr)
        case Call(function=function, argument=argument):
            return algebra.call(function, walk(argument, bindings, algebra), expr)
    raise TypeError(f"Unknown expression node {expr!r}")


class FloatAlgebra:
    """IEEE double evaluation with explicit domain checks."""

    _FUNCTIONS = {
        "sin": math.sin,
        "cos": math.cos,
        "tan": math.tan,
        "sinh": math.sinh,
        "cosh": math.cosh,
        "tanh": math.tanh,
        "exp": math.exp,
        "ln": math.log,
        "sqrt": math.sqrt,
        "atan": math.atan,
        "abs": abs,
    }

    def constant(self, value: float) -> float:
        return float(value)

    def call(self, function: str, argument: float, node: Expr) -> float:
        if function == "ln" and argument <= 0.0:
            raise DomainError(f"ln of non-positive value {argument!r}", str(node))
        if function == "sqrt" and argument < 0.0:
            raise DomainError(f"sqrt of negative value {argument!r}", str(node))
        try:
            return self._FUNCTIONS[function](argument)
        except OverflowError as e:
            raise DomainError(
                f"{function} overflowed at {argument!r}", str(node)
            ) from e

    def divide(self, numerator: float, denominator: float, node: Expr) -> float:
        if denominator == 0.0:
            raise DomainError("Division by zero", str(node))
        return numerator / denominator

    def integer_power(self, base: float, exponent: int, node: Expr) -> float:
        if base == 0.0 and exponent < 0:
            raise DomainError("Zero raised to a negative power", str(node))
        result = 1.0
        factor = base if exponent >= 0 else 1.0 / base
        n = abs(exponent)
        while n:
            if n & 1:
                result *= factor
            factor *= factor
            n >>= 1
        return result

    def real_power(self, base: float, exponent: float, node: Expr) -> float:
        if base <= 0.0:
            raise DomainError(
                f"Non-integer power of non-positive base {base!r}", str(node)
            )
        try:
            return math.exp(exponent * math.log(base))
        except OverflowError as e:
            raise DomainError("Power overflowed", str(node)) from e


FLOATS = FloatAlgebra()


def evaluate(expr: Expr, bindings: Mapping[str, float]) -> float:
    """Evaluate ``expr`` at real variable values.

    Raises:
        DomainError: On ln of a non-positive number, sqrt of a negative number,
            division by zero, or an unbound variable. The error names the
            offending subexpression.
    """
    values = {name: float(value) for name, value in bindings.items()}
    return walk(expr, values, FLOATS)
