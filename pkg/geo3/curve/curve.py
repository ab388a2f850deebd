"""Pointwise geometry of parametrized space curves.

Every derivative comes from Taylor jets of the coordinate expressions, so the
formulas below are evaluated with exact derivatives of the model.
"""

import logging
import math
from dataclasses import dataclass

import numpy as np

from geo3.autodiff import Jet1, JetVec, lift
from geo3.autodiff import vector as jv
from geo3.config import setting, tolerance
from geo3.errors import (
    IrregularPointError,
    MathError,
    OutOfRangeError,
    UndefinedFrameError,
)
from geo3.expr import CurveModel
from geo3.numerics import adaptive_simpson

from .frames import (
    CurvatureReport,
    FrameStatus,
    FrenetFrame,
    Line,
    OsculatingCircle,
    Plane,
    RegularityReport,
    Vec3,
)


LOGGER = logging.getLogger(__name__)

ARC_LENGTH_MAX_ITERATIONS = 100


def curve_jets(c: CurveModel, t: float, order: int = 3) -> JetVec:
    """Jets of the three coordinate functions at ``t``."""
    return tuple(lift(component, {"t": t}, order, Jet1) for component in c.components)


def derivatives(c: CurveModel, t: float) -> tuple[Vec3, Vec3, Vec3, Vec3]:
    """``(gamma, gamma', gamma'', gamma''')`` at ``t``.

    Raises:
        DomainError: If a coordinate function is not smooth at ``t``.
    """
    rows = np.array([jet.derivatives for jet in curve_jets(c, t)])
    return rows[:, 0], rows[:, 1], rows[:, 2], rows[:, 3]


def speed(c: CurveModel, t: float) -> float:
    jets = curve_jets(c, t, order=1)
    return float(np.linalg.norm([jet.derivative((1,)) for jet in jets]))


def _require_regular(c: CurveModel, t: float, v: float) -> None:
    if not v > tolerance("regularity"):
        raise IrregularPointError(f"Zero speed on curve {c}", point=t)


def is_regular(c: CurveModel, samples: int) -> RegularityReport:
    """Scan ``samples`` equally spaced parameters for vanishing speed.

    Samples at which a coordinate function cannot be evaluated are listed in
    ``failures`` and count as irregular.
    """
    if samples < 2:
        raise ValueError("At least two samples are required")

    min_speed, worst, failures = math.inf, None, []
    for t in c.domain.samples(samples):
        try:
            v = speed(c, t)
        except MathError as e:
            failures.append((t, str(e)))
            continue
        if v < min_speed:
            min_speed, worst = v, t

    regular = not failures and min_speed > tolerance("regularity")
    return RegularityReport(regular, min_speed, worst, failures)


def tangent_line(c: CurveModel, t0: float) -> Line:
    """The line ``u -> gamma(t0) + u gamma'(t0)``."""
    point, velocity, _, _ = derivatives(c, t0)
    _require_regular(c, t0, np.linalg.norm(velocity))
    return Line(point, velocity)


def _check_range(c: CurveModel, a: float, b: float) -> None:
    slack = 1e-12 * (1 + c.domain.length)
    if not (c.domain.contains(a, slack) and c.domain.contains(b, slack)):
        raise OutOfRangeError(f"[{a}, {b}] is not inside the domain {c.domain}")


def arc_length(c: CurveModel, a: float, b: float, tol: float | None = None) -> float:
    """Length of the curve between parameters ``a`` and ``b``.

    Raises:
        OutOfRangeError: If ``[a, b]`` leaves the domain.
        QuadratureError: If the speed is not finite somewhere.
    """
    _check_range(c, a, b)
    tol = tolerance("quadrature") if tol is None else tol
    return adaptive_simpson(
        lambda t: speed(c, t), a, b, tol, setting("integration.simpson_max_depth")
    )


def param_by_arc_length(c: CurveModel, s: float, base: float | None = None) -> float:
    """The parameter ``t`` at which the arc length from ``base`` equals ``s``.

    Safeguarded Newton iteration: a Newton step on ``L(t) - s`` (whose
    derivative is the speed) is taken when it stays inside the current bracket,
    otherwise the bracket is bisected.

    Raises:
        OutOfRangeError: If ``s`` is negative or exceeds the length from
            ``base`` to the end of the domain.
    """
    base = c.domain.lo if base is None else base
    tol = tolerance("arc_length")
    total = arc_length(c, base, c.domain.hi)
    if s < 0 or s > total + tol:
        raise OutOfRangeError(f"Arc length {s} outside [0, {total}]", point=s)
    if s <= tol:
        return base
    if s >= total:
        return c.domain.hi

    lo, hi = base, c.domain.hi
    t = base + (hi - base) * min(s / total, 1.0)
    for _ in range(ARC_LENGTH_MAX_ITERATIONS):
        residual = arc_length(c, base, t) - s
        if abs(residual) <= tol:
            return t
        if residual > 0:
            hi = t
        else:
            lo = t
        v = speed(c, t)
        step = t - residual / v if v > 0 else math.nan
        t = step if lo < step < hi else (lo + hi) / 2

    LOGGER.warning(f"Arc length inversion for s={s} did not reach tolerance {tol}")
    return t


def _frenet_normal(c: CurveModel, t: float) -> Vec3:
    tangent = jv.normalize(jv.d(curve_jets(c, t, order=2)))
    t_prime = jv.values(jv.d(tangent))
    return t_prime / np.linalg.norm(t_prime)


def curvature_torsion(c: CurveModel, t: float) -> CurvatureReport:
    """Curvature, torsion and Frenet frame at ``t``.

    ``kappa = |g' x g''| / |g'|^3`` and
    ``tau = det(g', g'', g''') / |g' x g''|^2``. Torsion and the frame are only
    reported where ``|g' x g''|`` exceeds ``tolerances.torsion``; elsewhere the
    report has status ``UNDEFINED``.

    Raises:
        IrregularPointError: If the speed vanishes at ``t``.
    """
    point, d1, d2, d3 = derivatives(c, t)
    v = float(np.linalg.norm(d1))
    _require_regular(c, t, v)

    binormal = np.cross(d1, d2)
    cross_norm = float(np.linalg.norm(binormal))
    kappa = cross_norm / v**3
    tangent = d1 / v

    if cross_norm <= tolerance("torsion"):
        return CurvatureReport(t, point, v, kappa, tangent, FrameStatus.UNDEFINED)

    tau = float(np.dot(binormal, d3)) / cross_norm**2
    normal = _frenet_normal(c, t)
    frame = FrenetFrame(point, tangent, normal, np.cross(tangent, normal))
    return CurvatureReport(t, point, v, kappa, tangent, FrameStatus.DEFINED, tau, frame)


def _defined(c: CurveModel, t: float, what: str) -> CurvatureReport:
    report = curvature_torsion(c, t)
    if not report.defined:
        raise UndefinedFrameError(f"The {what} needs nonzero curvature", point=t)
    return report


def osculating_plane(c: CurveModel, t0: float) -> Plane:
    """The plane through ``gamma(t0)`` spanned by ``T`` and ``N``."""
    frame = _defined(c, t0, "osculating plane").frame
    return Plane(frame.point, frame.B)


def osculating_circle(c: CurveModel, t0: float) -> OsculatingCircle:
    report = _defined(c, t0, "osculating circle")
    radius = 1 / report.kappa
    center = report.point + radius * report.frame.N
    return OsculatingCircle(center, radius, report.frame.B)


def darboux_vector(c: CurveModel, t: float) -> Vec3:
    """``tau T + kappa B``, the angular velocity of the Frenet frame."""
    report = _defined(c, t, "Darboux vector")
    return report.tau * report.frame.T + report.kappa * report.frame.B


def sample_frames(c: CurveModel, samples: int) -> list[CurvatureReport]:
    return [curvature_torsion(c, t) for t in c.domain.samples(samples)]


def frenet_residuals(
    c: CurveModel, t: float, h: float = 1e-3
) -> tuple[float, float, float]:
    """Residuals of the Frenet-Serret equations at ``t``.

    Arc-length derivatives of the frame are taken with a five point central
    difference in ``t`` divided by the speed.

    Returns:
        ``(|T' - kN|, |N' + kT - tB|, |B' + tN|)``.
    """
    centre = _defined(c, t, "Frenet frame")
    offsets = (-2, -1, 1, 2)
    weights = (1, -8, 8, -1)
    frames = [_defined(c, t + k * h, "Frenet frame").frame for k in offsets]

    def prime(attribute: str) -> Vec3:
        values = [getattr(frame, attribute) for frame in frames]
        dt = sum(w * x for w, x in zip(weights, values)) / (12 * h)
        return dt / centre.speed

    f, kappa, tau = centre.frame, centre.kappa, centre.tau
    return (
        float(np.linalg.norm(prime("T") - kappa * f.N)),
        float(np.linalg.norm(prime("N") + kappa * f.T - tau * f.B)),
        float(np.linalg.norm(prime("B") + tau * f.N)),
    )


@dataclass(frozen=True)
class ShapeReport:
    planar: bool
    general_helix: bool
    spherical: bool
    center: Vec3 | None
    samples_used: int
    max_sphere_residual: float


def shape_tests(c: CurveModel, samples: int) -> ShapeReport:
    """Test whether the curve is planar, a general helix or spherical.

    Planarity needs torsion negligible against curvature. Lancret's criterion
    (constant ``tau / kappa``) decides general helices. A curve is spherical
    when all its normal planes pass through one point, found by least squares.
    Samples where the torsion is undefined are skipped with a warning.

    Raises:
        UndefinedFrameError: If the curvature vanishes at every sample.
    """
    tol = tolerance("checks.shape")
    reports = []
    for report in sample_frames(c, samples):
        if report.defined:
            reports.append(report)
        else:
            LOGGER.warning(f"Torsion undefined at t={report.t}; sample excluded")
    if not reports:
        raise UndefinedFrameError(f"Curvature vanishes at every sample of {c}")

    kappas = np.array([r.kappa for r in reports])
    taus = np.array([r.tau for r in reports])
    ratios = taus / kappas

    planar = bool(np.max(np.abs(taus)) <= tol * (1 + np.max(kappas)))
    general_helix = bool(np.std(ratios) <= tol * (1 + np.mean(np.abs(ratios))))

    tangents = np.array([r.tangent for r in reports])
    rhs = np.einsum("ij,ij->i", tangents, np.array([r.point for r in reports]))
    center, *_ = np.linalg.lstsq(tangents, rhs, rcond=None)
    residual = float(np.max(np.abs(tangents @ center - rhs)))
    spherical = residual <= tol

    return ShapeReport(
        planar,
        general_helix,
        spherical,
        center if spherical else None,
        len(reports),
        residual,
    )
