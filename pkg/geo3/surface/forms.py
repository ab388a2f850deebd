"""Fundamental forms, shape operator and curvatures of a parametrized surface.

The unit normal is always ``n = x_u x x_v / |x_u x x_v|``. Quantities whose sign
depends on that orientation (``e, f, g``, ``H``, principal curvatures) follow
it; ``K`` and the point classification do not.
"""

import math
from dataclasses import dataclass
from enum import StrEnum, auto

import numpy as np

from geo3.config import tolerance
from geo3.curve import Vec3, curvature_torsion
from geo3.errors import (
    AsymptoticDirectionError,
    OutOfRangeError,
    UndefinedFrameError,
)
from geo3.expr import (
    Binary,
    Constant,
    CurveModel,
    Expr,
    Interval,
    SurfaceModel,
    Variable,
    substitute,
)

from .geometry import LocalGeometry


class PointType(StrEnum):
    ELLIPTIC = auto()
    HYPERBOLIC = auto()
    PARABOLIC = auto()
    PLANAR = auto()


@dataclass(frozen=True)
class TangentPlane:
    point: Vec3
    normal: Vec3
    x_u: Vec3
    x_v: Vec3

    def at(self, a: float, b: float) -> Vec3:
        """The parametric form ``point + a x_u + b x_v``."""
        return self.point + a * self.x_u + b * self.x_v


@dataclass(frozen=True)
class FormBundle:
    """First and second order invariants at a surface point.

    ``d1`` and ``d2`` are principal directions in parameter space, normalized
    to unit length in the first fundamental form. ``christoffel[k, i, j]`` is
    the symbol with upper index ``k`` (0 for u, 1 for v).
    """

    u: float
    v: float
    E: float
    F: float
    G: float
    e: float
    f: float
    g: float
    n: Vec3
    K: float
    H: float
    kappa1: float
    kappa2: float
    d1: np.ndarray
    d2: np.ndarray
    shape_operator: np.ndarray
    christoffel: np.ndarray
    umbilic: bool


def gauss_map(s: SurfaceModel, u: float, v: float) -> Vec3:
    """The unit normal at ``(u, v)``.

    Raises:
        IrregularPointError: Where ``x_u x x_v`` vanishes.
    """
    return LocalGeometry(s, u, v).n


def tangent_plane(s: SurfaceModel, u: float, v: float) -> TangentPlane:
    local = LocalGeometry(s, u, v)
    return TangentPlane(local.x, local.n, local.x_u, local.x_v)


def first_form(s: SurfaceModel, u: float, v: float) -> tuple[float, float, float]:
    """``(E, F, G)``."""
    return LocalGeometry(s, u, v).first


def second_form(s: SurfaceModel, u: float, v: float) -> tuple[float, float, float]:
    """``(e, f, g)``, oriented by ``x_u x x_v``."""
    return LocalGeometry(s, u, v).second


def parametric_angle(s: SurfaceModel, u: float, v: float) -> float:
    """Angle between the parameter lines, in ``(0, pi)``."""
    local = LocalGeometry(s, u, v)
    return math.atan2(math.sqrt(local.det_first), local.first[1])


def principal_curvatures(
    local: LocalGeometry,
) -> tuple[float, float, np.ndarray, np.ndarray]:
    """Eigenpairs of the shape operator, ``kappa1 >= kappa2``.

    Solved as the symmetric problem ``L^-1 II L^-T`` with ``I = L L^T`` so the
    eigenvalues are real by construction.
    """
    lower = np.linalg.cholesky(local.first_matrix)
    inverse = np.linalg.inv(lower)
    values, vectors = np.linalg.eigh(inverse @ local.second_matrix @ inverse.T)
    directions = inverse.T @ vectors
    return float(values[1]), float(values[0]), directions[:, 1], directions[:, 0]


def curvatures(local: LocalGeometry) -> tuple[float, float]:
    """``(K, H)``."""
    E, F, G = local.first
    e, f, g = local.second
    W = local.det_first
    return (e * g - f * f) / W, (e * G - 2 * f * F + g * E) / (2 * W)


def is_umbilic(kappa1: float, kappa2: float) -> bool:
    return abs(kappa1 - kappa2) <= tolerance("umbilic") * (1 + abs(kappa1))


def shape_and_curvatures(s: SurfaceModel, u: float, v: float) -> FormBundle:
    """Everything pointwise: forms, ``S = I^-1 II``, ``K``, ``H``, principal data.

    Raises:
        IrregularPointError: Where ``x_u x x_v`` vanishes.
    """
    from .structure import christoffel_symbols

    local = LocalGeometry(s, u, v)
    K, H = curvatures(local)
    kappa1, kappa2, d1, d2 = principal_curvatures(local)
    return FormBundle(
        u,
        v,
        *local.first,
        *local.second,
        local.n,
        K,
        H,
        kappa1,
        kappa2,
        d1,
        d2,
        np.linalg.solve(local.first_matrix, local.second_matrix),
        christoffel_symbols(local),
        is_umbilic(kappa1, kappa2),
    )


def classify(local: LocalGeometry) -> PointType:
    e, f, g = local.second
    size = math.sqrt(e * e + 2 * f * f + g * g)
    if size <= tolerance("planar_point"):
        return PointType.PLANAR
    discriminant = e * g - f * f
    tol = tolerance("classification") * (1 + size**2)
    if discriminant > tol:
        return PointType.ELLIPTIC
    if discriminant < -tol:
        return PointType.HYPERBOLIC
    return PointType.PARABOLIC


def classify_point(s: SurfaceModel, u: float, v: float) -> PointType:
    """Elliptic, hyperbolic, parabolic or planar by the sign of ``eg - f^2``."""
    return classify(LocalGeometry(s, u, v))


def _normal_curvature(local: LocalGeometry, direction: tuple[float, float]) -> float:
    d = np.asarray(direction, dtype=float)
    if not np.any(d):
        raise OutOfRangeError("Tangent direction must be nonzero", point=local.point)
    return float(d @ local.second_matrix @ d) / float(d @ local.first_matrix @ d)


def normal_curvature(
    s: SurfaceModel, u: float, v: float, direction: tuple[float, float]
) -> float:
    """``II(d) / I(d)`` for the parameter direction ``d = (du, dv)``."""
    return _normal_curvature(LocalGeometry(s, u, v), direction)


def euler_curvature(s: SurfaceModel, u: float, v: float, theta: float) -> float:
    """``kappa1 cos^2(theta) + kappa2 sin^2(theta)``, theta measured from ``d1``."""
    kappa1, kappa2, _, _ = principal_curvatures(LocalGeometry(s, u, v))
    return kappa1 * math.cos(theta) ** 2 + kappa2 * math.sin(theta) ** 2


def _section_curve(
    local: LocalGeometry, direction: tuple[float, float], accel: tuple[float, float]
) -> CurveModel:
    """``t -> x(u0 + du t + a t^2/2, v0 + dv t + b t^2/2)``."""
    t = Variable("t")

    def quadratic(p0: float, d: float, a: float) -> Expr:
        linear = Binary("+", Constant(p0), Binary("*", Constant(d), t))
        square = Binary("*", Constant(a / 2), Binary("*", t, t))
        return Binary("+", linear, square)

    mapping = {
        "u": quadratic(local.u, direction[0], accel[0]),
        "v": quadratic(local.v, direction[1], accel[1]),
    }
    components = tuple(substitute(c, mapping) for c in local.surface.components)
    return CurveModel(components, Interval(-1.0, 1.0))


def meusnier_check(
    s: SurfaceModel,
    u: float,
    v: float,
    direction: tuple[float, float],
    angles: list[float],
) -> float:
    """Check Meusnier's theorem on curves sharing a tangent direction.

    For every tilt ``phi`` a curve through ``x(u, v)`` with tangent along
    ``direction`` is built in the parameter plane, with its parameter
    acceleration chosen so that ``kappa_g = kappa_n tan(phi)``. The curvature
    ``kappa`` and principal normal ``N`` of that space curve are computed
    independently, and ``kappa (N . n)`` must equal ``kappa_n``.

    Returns:
        ``max |kappa cos(theta) - kappa_n|`` over the tilts, where ``theta`` is
        the angle between ``N`` and ``n``.

    Raises:
        AsymptoticDirectionError: If the normal curvature vanishes.
        OutOfRangeError: If a tilt is not in ``(-pi/2, pi/2)``.
    """
    local = LocalGeometry(s, u, v)
    kappa_n = _normal_curvature(local, direction)
    if abs(kappa_n) <= tolerance("asymptotic_direction"):
        raise AsymptoticDirectionError(
            f"Direction {tuple(direction)} is asymptotic (kappa_n = {kappa_n!r})",
            point=local.point,
        )

    du, dv = direction
    velocity = local.tangent(direction)
    speed_sq = float(velocity @ velocity)
    T = velocity / math.sqrt(speed_sq)
    w = np.cross(local.n, T)
    second = du * du * local.x_uu + 2 * du * dv * local.x_uv + dv * dv * local.x_vv
    coefficients = np.linalg.solve(
        local.first_matrix, np.array([local.x_u @ w, local.x_v @ w])
    )

    deviation = 0.0
    for phi in angles:
        if not math.cos(phi) > 0:
            raise OutOfRangeError(
                f"Tilt {phi} outside (-pi/2, pi/2)", point=local.point
            )
        lam = kappa_n * math.tan(phi) * speed_sq - float(second @ w)
        a, b = lam * coefficients
        report = curvature_torsion(_section_curve(local, direction, (a, b)), 0.0)
        if not report.defined:
            raise UndefinedFrameError(
                f"Section curve at tilt {phi} has no principal normal",
                point=local.point,
            )
        cos_theta = float(report.frame.N @ local.n)
        deviation = max(deviation, abs(report.kappa * cos_theta - kappa_n))
    return deviation
