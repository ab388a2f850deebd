from collections.abc import Mapping
from typing import TypeVar

from geo3.errors import DomainError
from geo3.expr import Expr, walk

from .jet import MAX_ORDER, Jet, Jet1, Jet2, apply


J = TypeVar("J", bound=Jet)


class JetAlgebra:
    """Adapts :class:`Jet` arithmetic to the expression walker."""

    def __init__(self, cls: type[Jet], nvars: int, order: int) -> None:
        self.cls = cls
        self.nvars = nvars
        self.order = order

    def constant(self, value: float) -> Jet:
        return self.cls.constant(value, self.nvars, self.order)

    def call(self, function: str, argument: Jet, node: Expr) -> Jet:
        return apply(function, argument, str(node))

    def divide(self, numerator: Jet, denominator: Jet, node: Expr) -> Jet:
        if denominator.value == 0.0:
            raise DomainError("Division by zero", str(node))
        return numerator * denominator.reciprocal()

    def integer_power(self, base: Jet, exponent: int, node: Expr) -> Jet:
        if exponent < 0:
            if base.value == 0.0:
                raise DomainError("Zero raised to a negative power", str(node))
            base, exponent = base.reciprocal(), -exponent
        result = self.constant(1.0)
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def real_power(self, base: Jet, exponent: Jet, node: Expr) -> Jet:
        if base.value <= 0.0:
            raise DomainError(
                f"Non-integer power of non-positive base {base.value!r}", str(node)
            )
        return apply("exp", exponent * apply("ln", base, str(node)), str(node))


def lift(
    expr: Expr,
    point: Mapping[str, float],
    order: int = MAX_ORDER,
    cls: type[J] = Jet,
) -> J:
    """Taylor jet of ``expr`` at ``point``.

    The variables of the jet follow the iteration order of ``point``. Variables
    of ``expr`` missing from ``point`` are reported as a domain error.

    Raises:
        DomainError: If ``expr`` is not smooth at ``point``.
    """
    if not 0 <= order <= MAX_ORDER:
        raise ValueError(f"Jet order must be between 0 and {MAX_ORDER}")
    nvars = len(point)
    bindings = {
        name: cls.variable(float(value), axis, nvars, order)
        for axis, (name, value) in enumerate(point.items())
    }
    return walk(expr, bindings, JetAlgebra(cls, nvars, order))


def lift1(expr: Expr, t0: float, order: int = MAX_ORDER) -> Jet1:
    """Jet of an expression in ``t`` at ``t0``.

    Examples:
        >>> lift1(parse_scalar("t^2", {"t"}), 3.0).derivatives
        (9.0, 6.0, 2.0, 0.0)
    """
    return lift(expr, {"t": t0}, order, Jet1)


def lift2(expr: Expr, u0: float, v0: float, order: int = MAX_ORDER) -> Jet2:
    """Jet of an expression in ``u, v`` at ``(u0, v0)``."""
    return lift(expr, {"u": u0, "v": v0}, order, Jet2)
