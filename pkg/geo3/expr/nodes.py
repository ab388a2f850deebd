"""Abstract syntax tree of the scalar expression DSL.

Nodes are frozen dataclasses, so parsed expressions are immutable values that
compare structurally and may be shared freely between threads.
"""

import math
from dataclasses import dataclass
from typing import Mapping


FUNCTIONS = frozenset(
    {"sin", "cos", "tan", "sinh", "cosh", "tanh", "exp", "ln", "sqrt", "atan", "abs"}
)
CONSTANTS: Mapping[str, float] = {"pi": math.pi, "e": math.e}
BINARY_OPERATORS = frozenset({"+", "-", "*", "/", "^"})


@dataclass(frozen=True)
class Expr:
    """Base class of expression nodes."""

    def variables(self) -> frozenset[str]:
        """Names of the free variables of this expression."""
        raise NotImplementedError

    def children(self) -> tuple["Expr", ...]:
        return ()

    def evaluate(self, **bindings: float) -> float:
        """Evaluate with IEEE doubles. See :func:`geo3.expr.evaluate`."""
        from .evaluate import evaluate

        return evaluate(self, bindings)


@dataclass(frozen=True)
class Constant(Expr):
    value: float
    name: str | None = None

    def variables(self) -> frozenset[str]:
        return frozenset()

    def __str__(self) -> str:
        return self.name if self.name is not None else repr(float(self.value))


@dataclass(frozen=True)
class Variable(Expr):
    name: str

    def variables(self) -> frozenset[str]:
        return frozenset({self.name})

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Unary(Expr):
    op: str
    operand: Expr

    def variables(self) -> frozenset[str]:
        return self.operand.variables()

    def children(self) -> tuple[Expr, ...]:
        return (self.operand,)

    def __str__(self) -> str:
        return f"({self.op}{self.operand})"


@dataclass(frozen=True)
class Binary(Expr):
    op: str
    left: Expr
    right: Expr

    def variables(self) -> frozenset[str]:
        return self.left.variables() | self.right.variables()

    def children(self) -> tuple[Expr, ...]:
        return (self.left, self.right)

    def __str__(self) -> str:
        return f"({self.left} {self.op} {self.right})"


@dataclass(frozen=True)
class Call(Expr):
    function: str
    argument: Expr

    def variables(self) -> frozenset[str]:
        return self.argument.variables()

    def children(self) -> tuple[Expr, ...]:
        return (self.argument,)

    def __str__(self) -> str:
        return f"{self.function}({self.argument})"


def substitute(expr: Expr, mapping: Mapping[str, Expr]) -> Expr:
    """Replace variables of ``expr`` by the expressions in ``mapping``.

    Variables missing from ``mapping`` are left untouched.
    """
    match expr:
        case Variable(name=name):
            return mapping.get(name, expr)
        case Constant():
            return expr
        case Unary(op=op, operand=operand):
            return Unary(op, substitute(operand, mapping))
        case Binary(op=op, left=left, right=right):
            return Binary(op, substitute(left, mapping), substitute(right, mapping))
        case Call(function=function, argument=argument):
            return Call(function, substitute(argument, mapping))
    raise TypeError(f"Unknown expression node {expr!r}")


def integral_exponent(exponent: Expr) -> int | None:
    """The exponent as an ``int`` when it is a variable-free integer, else None."""
    if exponent.variables():
        return None

    from .evaluate import evaluate

    value = evaluate(exponent, {})
    if math.isfinite(value) and value == int(value) and abs(value) < 2**31:
        return int(value)
    return None
