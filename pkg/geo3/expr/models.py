"""Curve and surface models built from three coordinate expressions.

Source syntax::

    (x(t), y(t), z(t)) on [a, b]
    (x(u,v), y(u,v), z(u,v)) on [a, b] x [c, d]

Domain endpoints are constant expressions (``2*pi``, ``-pi/2``). The surface
rectangle separator may be written ``x``, ``×`` or ``*``.
"""

from dataclasses import dataclass, field
from typing import Mapping

from geo3.errors import ArityError, InputError

from .nodes import Expr, substitute
from .parser import Parser, TokenKind


CURVE_VARIABLES = ("t",)
SURFACE_VARIABLES = ("u", "v")
RECTANGLE_SEPARATORS = ("x", "×", "*")


@dataclass(frozen=True)
class Interval:
    lo: float
    hi: float

    def __post_init__(self):
        if not self.lo < self.hi:
            raise InputError(f"Empty interval [{self.lo}, {self.hi}]")

    @property
    def length(self) -> float:
        return self.hi - self.lo

    def contains(self, x: float, slack: float = 0.0) -> bool:
        return self.lo - slack <= x <= self.hi + slack

    def samples(self, n: int) -> list[float]:
        """``n`` equally spaced points including both endpoints."""
        if n < 2:
            raise ValueError("At least two samples are required")
        step = self.length / (n - 1)
        return [self.lo + i * step for i in range(n - 1)] + [self.hi]

    def __str__(self) -> str:
        return f"[{self.lo!r}, {self.hi!r}]"


@dataclass(frozen=True)
class Rectangle:
    u: Interval
    v: Interval

    def contains(self, u: float, v: float, slack: float = 0.0) -> bool:
        return self.u.contains(u, slack) and self.v.contains(v, slack)

    def grid(self, nu: int, nv: int) -> list[tuple[float, float]]:
        """Row-major ``nu`` x ``nv`` grid of parameter points."""
        return [(u, v) for u in self.u.samples(nu) for v in self.v.samples(nv)]

    def __str__(self) -> str:
        return f"{self.u} x {self.v}"


@dataclass(frozen=True)
class CurveModel:
    """A parametrized curve t -> (x(t), y(t), z(t)) on an interval."""

    components: tuple[Expr, Expr, Expr]
    domain: Interval
    label: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if len(self.components) != 3:
            raise ArityError(3, len(self.components))

    def reparametrize(self, phi: Expr, domain: Interval) -> "CurveModel":
        """The curve t -> gamma(phi(t)), with ``phi`` an expression in t."""
        components = tuple(substitute(c, {"t": phi}) for c in self.components)
        return CurveModel(components, domain, self.label)

    def __str__(self) -> str:
        return f"({', '.join(map(str, self.components))}) on {self.domain}"


@dataclass(frozen=True)
class SurfaceModel:
    """A parametrized surface (u, v) -> x(u, v) on a rectangle."""

    components: tuple[Expr, Expr, Expr]
    domain: Rectangle
    label: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if len(self.components) != 3:
            raise ArityError(3, len(self.components))

    def reparametrize(
        self, u_of: Expr, v_of: Expr, domain: Rectangle
    ) -> "SurfaceModel":
        """The surface (u, v) -> x(u_of(u, v), v_of(u, v))."""
        mapping: Mapping[str, Expr] = {"u": u_of, "v": v_of}
        components = tuple(substitute(c, mapping) for c in self.components)
        return SurfaceModel(components, domain, self.label)

    def __str__(self) -> str:
        return f"({', '.join(map(str, self.components))}) on {self.domain}"


def _components(parser: Parser) -> list[Expr]:
    parser.expect("(")
    components = [parser.expression()]
    while parser.at(","):
        parser.advance()
        components.append(parser.expression())
    parser.expect(")")
    return components


def _interval(parser: Parser) -> Interval:
    bracket = parser.expect("[")
    lo = parser.expression().evaluate()
    parser.expect(",")
    hi = parser.expression().evaluate()
    parser.expect("]")
    try:
        return Interval(lo, hi)
    except InputError as e:
        raise InputError(
            f"Empty domain [{lo!r}, {hi!r}] at offset {bracket.offset}",
            e,
            fragment=parser.source,
        )


def _parse_model(source: str, variables: tuple[str, ...]) -> tuple[list[Expr], Parser]:
    parser = Parser(source, variables)
    components = _components(parser)
    if len(components) != 3:
        raise ArityError(3, len(components), source)
    parser.expect("on")
    # domain endpoints are constants
    parser.variables = frozenset()
    return components, parser


def parse_curve(source: str, label: str | None = None) -> CurveModel:
    """Parse ``"(x, y, z) on [a, b]"`` with components in ``t``.

    Raises:
        ArityError: If the tuple does not have three components.
        ExprSyntaxError: On malformed components or domain.
    """
    components, parser = _parse_model(source, CURVE_VARIABLES)
    domain = _interval(parser)
    parser.expect_end()
    return CurveModel(tuple(components), domain, label)


def parse_surface(source: str, label: str | None = None) -> SurfaceModel:
    """Parse ``"(x, y, z) on [a, b] x [c, d]"`` with components in ``u, v``.

    Raises:
        ArityError: If the tuple does not have three components.
        ExprSyntaxError: On malformed components or domain.
    """
    components, parser = _parse_model(source, SURFACE_VARIABLES)
    u = _interval(parser)
    separator = parser.current
    kinds = (TokenKind.NAME, TokenKind.OP)
    if separator.kind in kinds and separator.text in RECTANGLE_SEPARATORS:
        parser.advance()
    else:
        parser.fail("Expected 'x' between domain intervals")
    v = _interval(parser)
    parser.expect_end()
    return SurfaceModel(tuple(components), Rectangle(u, v), label)
