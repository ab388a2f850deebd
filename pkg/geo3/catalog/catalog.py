"""Named classical curves and surfaces.

Every entry is built from DSL source formatted with its parameters, so an entry
is exactly what a user would get by typing the same parametrization. Entries
carry the closed-form invariants known for them, which the test-suite uses as
oracles, and a note on where the chart is singular.
"""

import math
from collections.abc import Callable, Mapping, Sequence
from dataclasses import dataclass, field
from enum import StrEnum, auto
from typing import Any

from geo3.errors import CatalogError, InputError
from geo3.expr import (
    Binary,
    Call,
    CurveModel,
    Expr,
    Interval,
    Rectangle,
    SurfaceModel,
    Variable,
    differentiate,
    parse_curve,
    parse_surface,
    substitute,
)
from geo3.surface import ImplicitSurface, implicit_surface


TWO_PI = "2*pi"
DEVELOPABLE_EPSILON = 1e-3

Model = CurveModel | SurfaceModel | ImplicitSurface
Invariant = Callable[..., float]


class EntryKind(StrEnum):
    CURVE = auto()
    SURFACE = auto()
    IMPLICIT = auto()


@dataclass(frozen=True)
class CatalogEntry:
    """A catalog model with its documented properties.

    Attributes:
        invariants: Closed forms keyed by quantity (``kappa``, ``tau`` for
            curves; ``K``, ``abs_H`` for surfaces), as functions of the
            parameter(s).
        singularities: Where the chart fails to be regular, if anywhere.
        safe_domain: A sub-domain free of chart singularities.
    """

    name: str
    kind: EntryKind
    model: Model
    params: dict[str, Any] = field(default_factory=dict)
    invariants: Mapping[str, Invariant] = field(default_factory=dict)
    singularities: str | None = None
    safe_domain: Interval | Rectangle | None = None

    @property
    def domain(self) -> Interval | Rectangle | None:
        return self.safe_domain or getattr(self.model, "domain", None)

    def describe(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "kind": str(self.kind),
            "model": str(
                self.model.F if isinstance(self.model, ImplicitSurface) else self.model
            ),
            "params": self.params,
            "invariants": sorted(self.invariants),
            "singularities": self.singularities,
            "safe_domain": str(self.safe_domain) if self.safe_domain else None,
        }


def _f(x: float) -> str:
    """A float formatted for DSL source."""
    text = repr(float(x))
    return f"({text})" if x < 0 else text


def _require(condition: bool, name: str, message: str) -> None:
    if not condition:
        raise CatalogError(f"Invalid parameters for '{name}': {message}")


def _vector(value: Sequence[float], name: str) -> tuple[float, float, float]:
    _require(len(value) == 3, name, f"expected a 3-vector, got {value!r}")
    return tuple(float(x) for x in value)


def _curve(name: str, source: str, params: dict, **kwargs) -> CatalogEntry:
    model = parse_curve(source, name)
    return CatalogEntry(name, EntryKind.CURVE, model, params, **kwargs)


def _surface(name: str, source: str, params: dict, **kwargs) -> CatalogEntry:
    model = parse_surface(source, name)
    return CatalogEntry(name, EntryKind.SURFACE, model, params, **kwargs)


def _quadric_K(a: float, b: float, c: float, sign: float) -> Invariant:
    """``K`` of ``x^2/a^2 + y^2/b^2 +- z^2/c^2 = +-1`` at a point of the surface."""

    def K(x: float, y: float, z: float) -> float:
        w = x * x / a**4 + y * y / b**4 + z * z / c**4
        return sign / (a * a * b * b * c * c * w**2)

    return K


# curves


def line(
    a: Sequence[float] = (0, 0, 0), b: Sequence[float] = (1, 0, 0)
) -> CatalogEntry:
    a, b = _vector(a, "line"), _vector(b, "line")
    _require(any(b), "line", "direction b must be nonzero")
    source = ", ".join(f"{_f(ai)} + {_f(bi)}*t" for ai, bi in zip(a, b))
    return _curve(
        "line",
        f"({source}) on [-1, 1]",
        {"a": a, "b": b},
        invariants={"kappa": lambda t: 0.0},
    )


def circle(r: float = 1.0) -> CatalogEntry:
    _require(r > 0, "circle", "r > 0")
    return _curve(
        "circle",
        f"({_f(r)}*cos t, {_f(r)}*sin t, 0) on [0, {TWO_PI}]",
        {"r": r},
        invariants={"kappa": lambda t: 1 / r, "tau": lambda t: 0.0},
    )


def ellipse(a: float = 2.0, b: float = 1.0) -> CatalogEntry:
    _require(a > 0 and b > 0, "ellipse", "a, b > 0")

    def kappa(t: float) -> float:
        return a * b / (a * a * math.sin(t) ** 2 + b * b * math.cos(t) ** 2) ** 1.5

    return _curve(
        "ellipse",
        f"({_f(a)}*cos t, {_f(b)}*sin t, 0) on [0, {TWO_PI}]",
        {"a": a, "b": b},
        invariants={"kappa": kappa, "tau": lambda t: 0.0},
    )


def helix(r: float = 1.0, h: float = 1.0) -> CatalogEntry:
    _require(r != 0 and h != 0, "helix", "r and h must be nonzero")
    scale = r * r + h * h
    return _curve(
        "helix",
        f"({_f(r)}*cos t, {_f(r)}*sin t, {_f(h)}*t) on [0, 4*pi]",
        {"r": r, "h": h},
        invariants={"kappa": lambda t: abs(r) / scale, "tau": lambda t: h / scale},
    )


def log_spiral() -> CatalogEntry:
    return _curve(
        "log_spiral",
        "(exp(t)*cos t, exp(t)*sin t, 0) on [-2, 2]",
        {},
        invariants={
            "kappa": lambda t: math.exp(-t) / math.sqrt(2),
            "tau": lambda t: 0.0,
        },
    )


def catenary() -> CatalogEntry:
    return _curve(
        "catenary",
        "(t, cosh t, 1) on [-2, 2]",
        {},
        invariants={"kappa": lambda t: 1 / math.cosh(t) ** 2, "tau": lambda t: 0.0},
    )


def tilted_circle() -> CatalogEntry:
    return _curve(
        "tilted_circle",
        f"(4/5*cos t, 1 + sin t, 2 - 3/5*cos t) on [0, {TWO_PI}]",
        {},
        invariants={"kappa": lambda t: 1.0, "tau": lambda t: 0.0},
    )


def rational_curve() -> CatalogEntry:
    return _curve(
        "rational_curve",
        "(t, (1 + t)/t, (1 - t^2)/t) on [0.5, 3]",
        {},
        invariants={"tau": lambda t: 0.0},
        singularities="t = 0",
    )


def general_helix(b: float = 1.0, n: int = 1) -> CatalogEntry:
    """``(b t^n/n, sqrt(2b) t^(n+1)/(n+1), t^(n+2)/(n+2))``, with ``kappa = tau``."""
    _require(b > 0, "general_helix", "b > 0")
    _require(int(n) == n and n >= 1, "general_helix", "n must be a positive integer")
    n = int(n)

    def kappa(t: float) -> float:
        return math.sqrt(2 * b) / ((b + t * t) ** 2 * t ** (n - 1))

    lo = -1.0 if n == 1 else 0.5
    return _curve(
        "general_helix",
        f"({_f(b)}*t^{n}/{n}, sqrt(2*{_f(b)})*t^{n + 1}/{n + 1}, "
        f"t^{n + 2}/{n + 2}) on [{lo}, 2]",
        {"b": b, "n": n},
        invariants={"kappa": kappa, "tau": kappa},
        singularities=None if n == 1 else "t = 0",
    )


def tilted_helix() -> CatalogEntry:
    return _curve(
        "tilted_helix",
        f"(t + sin t, -t + sin t, sqrt(2)*cos t) on [0, {TWO_PI}]",
        {},
        invariants={
            "kappa": lambda t: math.sqrt(2) / 4,
            "tau": lambda t: -math.sqrt(2) / 4,
        },
    )


# surfaces


def plane(
    p0: Sequence[float] = (0, 0, 0),
    p1: Sequence[float] = (1, 0, 0),
    p2: Sequence[float] = (0, 1, 0),
) -> CatalogEntry:
    p0, p1, p2 = (_vector(p, "plane") for p in (p0, p1, p2))
    d1 = [b - a for a, b in zip(p0, p1)]
    d2 = [b - a for a, b in zip(p0, p2)]
    cross = (
        d1[1] * d2[2] - d1[2] * d2[1],
        d1[2] * d2[0] - d1[0] * d2[2],
        d1[0] * d2[1] - d1[1] * d2[0],
    )
    _require(
        any(abs(c) > 1e-12 for c in cross), "plane", "points must not be collinear"
    )
    source = ", ".join(
        f"{_f(a)} + {_f(x)}*u + {_f(y)}*v" for a, x, y in zip(p0, d1, d2)
    )
    return _surface(
        "plane",
        f"({source}) on [-1, 1] x [-1, 1]",
        {"p0": p0, "p1": p1, "p2": p2},
        invariants={"K": lambda u, v: 0.0, "abs_H": lambda u, v: 0.0},
    )


def sphere(r: float = 1.0) -> CatalogEntry:
    _require(r > 0, "sphere", "r > 0")
    return _surface(
        "sphere",
        f"({_f(r)}*cos u*cos v, {_f(r)}*cos u*sin v, {_f(r)}*sin u) "
        f"on [-pi/2, pi/2] x [0, {TWO_PI}]",
        {"r": r},
        invariants={"K": lambda u, v: 1 / r**2, "abs_H": lambda u, v: 1 / r},
        singularities="cos u = 0 (the poles)",
        safe_domain=Rectangle(Interval(-1.4, 1.4), Interval(0.0, 2 * math.pi)),
    )


def sphere_polar() -> CatalogEntry:
    return _surface(
        "sphere_polar",
        f"(cos u*sin v, sin u*sin v, cos v) on [0, {TWO_PI}] x [0, pi]",
        {},
        invariants={"K": lambda u, v: 1.0, "abs_H": lambda u, v: 1.0},
        singularities="sin v = 0",
        safe_domain=Rectangle(Interval(0.0, 2 * math.pi), Interval(0.2, math.pi - 0.2)),
    )


def sphere_mercator() -> CatalogEntry:
    return _surface(
        "sphere_mercator",
        f"(cos v/cosh u, sin v/cosh u, tanh u) on [-2, 2] x [0, {TWO_PI}]",
        {},
        invariants={"K": lambda u, v: 1.0, "abs_H": lambda u, v: 1.0},
    )


def ellipsoid(a: float = 3.0, b: float = 2.0, c: float = 1.0) -> CatalogEntry:
    _require(a > 0 and b > 0 and c > 0, "ellipsoid", "a, b, c > 0")
    K = _quadric_K(a, b, c, 1.0)
    return _surface(
        "ellipsoid",
        f"({_f(a)}*cos u*cos v, {_f(b)}*cos u*sin v, {_f(c)}*sin u) "
        f"on [-pi/2, pi/2] x [0, {TWO_PI}]",
        {"a": a, "b": b, "c": c},
        invariants={
            "K": lambda u, v: K(
                a * math.cos(u) * math.cos(v),
                b * math.cos(u) * math.sin(v),
                c * math.sin(u),
            )
        },
        singularities="cos u = 0",
        safe_domain=Rectangle(Interval(-1.4, 1.4), Interval(0.0, 2 * math.pi)),
    )


def hyperboloid_one(a: float = 1.0, b: float = 1.0, c: float = 1.0) -> CatalogEntry:
    _require(a > 0 and b > 0 and c > 0, "hyperboloid_one", "a, b, c > 0")
    K = _quadric_K(a, b, c, -1.0)
    return _surface(
        "hyperboloid_one",
        f"({_f(a)}*cosh u*cos v, {_f(b)}*cosh u*sin v, {_f(c)}*sinh u) "
        f"on [-1.5, 1.5] x [0, {TWO_PI}]",
        {"a": a, "b": b, "c": c},
        invariants={
            "K": lambda u, v: K(
                a * math.cosh(u) * math.cos(v),
                b * math.cosh(u) * math.sin(v),
                c * math.sinh(u),
            )
        },
    )


def hyperboloid_two(
    a: float = 1.0, b: float = 1.0, c: float = 1.0, sign: int = 1
) -> CatalogEntry:
    _require(a > 0 and b > 0 and c > 0, "hyperboloid_two", "a, b, c > 0")
    _require(sign in (1, -1), "hyperboloid_two", "sign must be 1 or -1")
    K = _quadric_K(a, b, c, 1.0)
    return _surface(
        "hyperboloid_two",
        f"({_f(a)}*sinh u*cos v, {_f(b)}*sinh u*sin v, {_f(sign * c)}*cosh u) "
        f"on [0.2, 2] x [0, {TWO_PI}]",
        {"a": a, "b": b, "c": c, "sign": sign},
        invariants={
            "K": lambda u, v: K(
                a * math.sinh(u) * math.cos(v),
                b * math.sinh(u) * math.sin(v),
                c * math.cosh(u),
            )
        },
        singularities="u = 0 (the vertex)",
    )


def cone(a: float = 1.0, b: float = 1.0, c: float = 1.0) -> CatalogEntry:
    _require(a > 0 and b > 0 and c > 0, "cone", "a, b, c > 0")
    return _surface(
        "cone",
        f"({_f(a)}*u*cos v, {_f(b)}*u*sin v, {_f(c)}*u) on [-1, 1] x [0, {TWO_PI}]",
        {"a": a, "b": b, "c": c},
        invariants={"K": lambda u, v: 0.0},
        singularities="u = 0 (the apex)",
        safe_domain=Rectangle(Interval(0.2, 1.0), Interval(0.0, 2 * math.pi)),
    )


def _paraboloid(name: str, a: float, b: float, c: float, sign: float) -> CatalogEntry:
    _require(a > 0 and b > 0 and c != 0, name, "a, b > 0 and c != 0")
    op = "+" if sign > 0 else "-"

    def K(u: float, v: float) -> float:
        stretch = 1 + 4 * c * c * (u * u / (a * a) + v * v / (b * b))
        return sign * 4 * c * c / (a * a * b * b * stretch**2)

    return _surface(
        name,
        f"({_f(a)}*u, {_f(b)}*v, {_f(c)}*(u^2 {op} v^2)) on [-1, 1] x [-1, 1]",
        {"a": a, "b": b, "c": c},
        invariants={"K": K},
    )


def elliptic_paraboloid(a: float = 1.0, b: float = 1.0, c: float = 1.0) -> CatalogEntry:
    return _paraboloid("elliptic_paraboloid", a, b, c, 1.0)


def hyperbolic_paraboloid(
    a: float = 1.0, b: float = 1.0, c: float = 1.0
) -> CatalogEntry:
    return _paraboloid("hyperbolic_paraboloid", a, b, c, -1.0)


def torus(R: float = 2.0, r: float = 1.0) -> CatalogEntry:
    _require(0 < r < R, "torus", "0 < r < R")

    def K(u: float, v: float) -> float:
        return math.cos(u) / (r * (R + r * math.cos(u)))

    def abs_H(u: float, v: float) -> float:
        return abs((R + 2 * r * math.cos(u)) / (2 * r * (R + r * math.cos(u))))

    ring = f"({_f(R)} + {_f(r)}*cos u)"
    return _surface(
        "torus",
        f"({ring}*cos v, {ring}*sin v, {_f(r)}*sin u) "
        f"on [0, {TWO_PI}] x [0, {TWO_PI}]",
        {"R": R, "r": r},
        invariants={"K": K, "abs_H": abs_H},
    )


def helicoid(c: float = 1.0) -> CatalogEntry:
    _require(c != 0, "helicoid", "c must be nonzero")
    return _surface(
        "helicoid",
        f"(sinh u*cos v, sinh u*sin v, {_f(c)}*v) on [-1.5, 1.5] x [0, {TWO_PI}]",
        {"c": c},
        invariants={
            "K": lambda u, v: -c * c / (c * c + math.sinh(u) ** 2) ** 2,
            "abs_H": lambda u, v: 0.0,
        },
    )


def simple_helicoid(c: float = 1.0) -> CatalogEntry:
    _require(c != 0, "simple_helicoid", "c must be nonzero")
    return _surface(
        "simple_helicoid",
        f"(u*cos v, u*sin v, {_f(c)}*v) on [-1.5, 1.5] x [0, {TWO_PI}]",
        {"c": c},
        invariants={
            "K": lambda u, v: -c * c / (c * c + u * u) ** 2,
            "abs_H": lambda u, v: 0.0,
        },
    )


def catenoid() -> CatalogEntry:
    return _surface(
        "catenoid",
        f"(cosh u*cos v, cosh u*sin v, u) on [-1.5, 1.5] x [0, {TWO_PI}]",
        {},
        invariants={
            "K": lambda u, v: -1 / math.cosh(u) ** 4,
            "abs_H": lambda u, v: 0.0,
        },
    )


def enneper() -> CatalogEntry:
    return _surface(
        "enneper",
        "(u^3 - 3*u*(1 + v^2), v^3 - 3*v*(1 + u^2), 3*(u^2 - v^2)) "
        "on [-1, 1] x [-1, 1]",
        {},
        invariants={
            "K": lambda u, v: -4 / (9 * (1 + u * u + v * v) ** 4),
            "abs_H": lambda u, v: 0.0,
        },
    )


def cylinder(r: float = 1.0) -> CatalogEntry:
    _require(r > 0, "cylinder", "r > 0")
    return _surface(
        "cylinder",
        f"({_f(r)}*cos v, {_f(r)}*sin v, u) on [-2, 2] x [0, {TWO_PI}]",
        {"r": r},
        invariants={"K": lambda u, v: 0.0, "abs_H": lambda u, v: 1 / (2 * r)},
    )


def _as_curve(value: CurveModel | str, name: str) -> CurveModel:
    if isinstance(value, CurveModel):
        return value
    try:
        return parse_curve(value)
    except InputError as e:
        raise CatalogError(f"Invalid curve parameter for '{name}'", e, fragment=value)


def _in_u(expr: Expr) -> Expr:
    return substitute(expr, {"t": Variable("u")})


def revolution(
    profile: CurveModel | str = "(cosh t, t, 0) on [-1.5, 1.5]",
) -> CatalogEntry:
    """``(x(u) cos v, x(u) sin v, y(u))`` for the profile ``(x(t), y(t), 0)``."""
    profile = _as_curve(profile, "revolution")
    x, y, z = (_in_u(c) for c in profile.components)
    _require(
        not z.variables() and z.evaluate() == 0.0,
        "revolution",
        "profile must lie in z = 0",
    )
    v = Variable("v")
    model = SurfaceModel(
        (Binary("*", x, Call("cos", v)), Binary("*", x, Call("sin", v)), y),
        Rectangle(profile.domain, Interval(0.0, 2 * math.pi)),
        "revolution",
    )
    return CatalogEntry(
        "revolution",
        EntryKind.SURFACE,
        model,
        {"profile": str(profile)},
        singularities="x(u) = 0 (profile meets the axis)",
    )


def ruled(
    gamma: CurveModel | str = "(cos t, sin t, 0) on [0, 2*pi]",
    eta: CurveModel | str = "(-sin t, cos t, 1) on [0, 2*pi]",
    v_range: tuple[float, float] = (-1.0, 1.0),
) -> CatalogEntry:
    """``gamma(u) + v eta(u)``; the default is the hyperboloid of one sheet."""
    gamma, eta = _as_curve(gamma, "ruled"), _as_curve(eta, "ruled")
    v = Variable("v")
    model = SurfaceModel(
        tuple(
            Binary("+", _in_u(g), Binary("*", v, _in_u(e)))
            for g, e in zip(gamma.components, eta.components)
        ),
        Rectangle(gamma.domain, Interval(*v_range)),
        "ruled",
    )
    return CatalogEntry(
        "ruled",
        EntryKind.SURFACE,
        model,
        {"gamma": str(gamma), "eta": str(eta), "v_range": v_range},
        singularities="points where gamma' + v eta' is parallel to eta",
    )


def tangent_developable(
    gamma: CurveModel | str = "(cos t, sin t, t) on [0, 2*pi]",
    v_max: float = 1.0,
) -> CatalogEntry:
    """``gamma(u) + v gamma'(u)`` for ``v`` in ``[DEVELOPABLE_EPSILON, v_max]``."""
    _require(
        v_max > DEVELOPABLE_EPSILON,
        "tangent_developable",
        f"v_max > {DEVELOPABLE_EPSILON}",
    )
    gamma = _as_curve(gamma, "tangent_developable")
    v = Variable("v")
    model = SurfaceModel(
        tuple(
            Binary("+", _in_u(c), Binary("*", v, _in_u(differentiate(c, "t"))))
            for c in gamma.components
        ),
        Rectangle(gamma.domain, Interval(DEVELOPABLE_EPSILON, v_max)),
        "tangent_developable",
    )
    return CatalogEntry(
        "tangent_developable",
        EntryKind.SURFACE,
        model,
        {"gamma": str(gamma), "v_max": v_max},
        invariants={"K": lambda u, v: 0.0},
        singularities="v = 0 (the edge of regression) and points where kappa = 0",
    )


# implicit surfaces


def implicit_sphere(r: float = 1.0) -> CatalogEntry:
    _require(r > 0, "implicit_sphere", "r > 0")
    return CatalogEntry(
        "implicit_sphere",
        EntryKind.IMPLICIT,
        implicit_surface(f"x^2 + y^2 + z^2 - {_f(r * r)}", "implicit_sphere"),
        {"r": r},
        singularities="none on the surface; grad F = 0 only at the origin",
    )


def implicit_torus(R: float = 2.0, r: float = 1.0) -> CatalogEntry:
    _require(0 < r < R, "implicit_torus", "0 < r < R")
    return CatalogEntry(
        "implicit_torus",
        EntryKind.IMPLICIT,
        implicit_surface(
            f"(sqrt(x^2 + y^2) - {_f(R)})^2 + z^2 - {_f(r * r)}", "implicit_torus"
        ),
        {"R": R, "r": r},
        singularities="the z axis, where sqrt(x^2 + y^2) is not smooth",
    )


def implicit_hyperboloid() -> CatalogEntry:
    return CatalogEntry(
        "implicit_hyperboloid",
        EntryKind.IMPLICIT,
        implicit_surface("x^2 + y^2 - 1 - z^2", "implicit_hyperboloid"),
    )


BUILDERS: dict[str, Callable[..., CatalogEntry]] = {
    "line": line,
    "circle": circle,
    "ellipse": ellipse,
    "helix": helix,
    "log_spiral": log_spiral,
    "catenary": catenary,
    "tilted_circle": tilted_circle,
    "rational_curve": rational_curve,
    "general_helix": general_helix,
    "tilted_helix": tilted_helix,
    "plane": plane,
    "sphere": sphere,
    "sphere_polar": sphere_polar,
    "sphere_mercator": sphere_mercator,
    "ellipsoid": ellipsoid,
    "hyperboloid_one": hyperboloid_one,
    "hyperboloid_two": hyperboloid_two,
    "cone": cone,
    "elliptic_paraboloid": elliptic_paraboloid,
    "hyperbolic_paraboloid": hyperbolic_paraboloid,
    "torus": torus,
    "helicoid": helicoid,
    "simple_helicoid": simple_helicoid,
    "catenoid": catenoid,
    "enneper": enneper,
    "cylinder": cylinder,
    "revolution": revolution,
    "ruled": ruled,
    "tangent_developable": tangent_developable,
    "implicit_sphere": implicit_sphere,
    "implicit_torus": implicit_torus,
    "implicit_hyperboloid": implicit_hyperboloid,
}


def names(kind: EntryKind | None = None) -> list[str]:
    """Registered entry names, optionally restricted to one kind."""
    if kind is None:
        return list(BUILDERS)
    return [name for name in BUILDERS if make(name).kind == kind]


def make(name: str, **params: Any) -> CatalogEntry:
    """Build the catalog entry ``name`` with ``params`` over its defaults.

    Raises:
        CatalogError: If ``name`` is unknown or the parameters are not accepted.
    """
    if (builder := BUILDERS.get(name)) is None:
        raise CatalogError(
            f"Unknown catalog entry '{name}' (known: {', '.join(BUILDERS)})",
            fragment=name,
        )
    try:
        return builder(**params)
    except TypeError as e:
        raise CatalogError(f"Unsupported parameters {sorted(params)} for '{name}'", e)


def parse_preset(preset: str) -> CatalogEntry:
    """Build an entry from ``name[:key=value,...]``.

    Values are floats; ``;`` separates the coordinates of vector parameters,
    e.g. ``line:a=0;0;1,b=1;1;0``.

    Raises:
        CatalogError: On an unknown name or a malformed parameter list.
    """
    name, _, rest = preset.partition(":")
    params: dict[str, Any] = {}
    for item in filter(None, (part.strip() for part in rest.split(","))):
        key, sep, raw = item.partition("=")
        if not sep:
            raise CatalogError(f"Malformed preset parameter '{item}'", fragment=preset)
        try:
            values = [float(x) for x in raw.split(";")]
        except ValueError as e:
            raise CatalogError(f"Malformed preset value '{raw}'", e, fragment=preset)
        params[key.strip()] = values[0] if len(values) == 1 else tuple(values)
    if "n" in params and name == "general_helix":
        params["n"] = int(params["n"])
    if "sign" in params:
        params["sign"] = int(params["sign"])
    return make(name.strip(), **params)
