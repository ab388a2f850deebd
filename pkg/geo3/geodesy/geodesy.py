"""Curves on a surface: geodesic curvature and geodesics.

A curve on the surface is given in parameter space, ``t -> (u(t), v(t))``, and
its image ``x(u(t), v(t))`` is differentiated by lifting ``u`` and ``v`` to jets
and evaluating the surface expressions on them.
"""

import logging
import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from geo3.autodiff import Jet1, JetAlgebra, lift1
from geo3.config import setting, tolerance
from geo3.curve import Vec3
from geo3.errors import DomainExitError, IrregularPointError
from geo3.expr import (
    CurveModel,
    Expr,
    Interval,
    SurfaceModel,
    evaluate,
    substitute,
    walk,
)
from geo3.numerics import rk4
from geo3.surface import LocalGeometry
from geo3.surface.structure import christoffel_symbols


LOGGER = logging.getLogger(__name__)

DOMAIN_SLACK = 1e-8


@dataclass(frozen=True)
class ParamCurve:
    """The curve ``t -> x(u(t), v(t))`` on ``surface``."""

    surface: SurfaceModel
    u: Expr
    v: Expr
    domain: Interval

    def as_space_curve(self) -> CurveModel:
        """The image curve as a curve model in ``t``."""
        mapping = {"u": self.u, "v": self.v}
        return CurveModel(
            tuple(substitute(c, mapping) for c in self.surface.components), self.domain
        )


@dataclass(frozen=True)
class GeodesicState:
    """Parameter position and velocity."""

    u: float
    v: float
    du: float
    dv: float

    def as_array(self) -> np.ndarray:
        return np.array([self.u, self.v, self.du, self.dv], dtype=float)


@dataclass(frozen=True)
class _CurvePoint:
    local: LocalGeometry
    du: float
    dv: float
    d2u: float
    d2v: float
    velocity: Vec3
    acceleration: Vec3

    @cached_property
    def speed(self) -> float:
        return float(np.linalg.norm(self.velocity))


def _curve_point(pc: ParamCurve, t: float) -> _CurvePoint:
    uj, vj = lift1(pc.u, t, order=2), lift1(pc.v, t, order=2)
    algebra = JetAlgebra(Jet1, 1, 2)
    components = [walk(c, {"u": uj, "v": vj}, algebra) for c in pc.surface.components]
    velocity = np.array([c.derivative((1,)) for c in components])
    acceleration = np.array([c.derivative((2,)) for c in components])

    local = LocalGeometry(pc.surface, uj.value, vj.value)
    point = _CurvePoint(
        local,
        uj.derivative((1,)),
        vj.derivative((1,)),
        uj.derivative((2,)),
        vj.derivative((2,)),
        velocity,
        acceleration,
    )
    if not point.speed > tolerance("regularity"):
        raise IrregularPointError(f"Zero speed on curve ({pc.u}, {pc.v})", point=t)
    return point


def _kappa_g(p: _CurvePoint) -> float:
    frame = np.array([p.local.n, p.velocity, p.acceleration])
    return float(np.linalg.det(frame)) / p.speed**3


def geodesic_curvature(pc: ParamCurve, t: float) -> float:
    """``det(n, g', g'') / |g'|^3`` for the image curve ``g``.

    Raises:
        IrregularPointError: At zero speed or at an irregular surface point.
    """
    return _kappa_g(_curve_point(pc, t))


def intrinsic_geodesic_curvature(pc: ParamCurve, t: float) -> float:
    """Geodesic curvature from the first fundamental form alone.

    ``sqrt(EG - F^2) (u' (v'' + G^2_ij u'^i u'^j) - v' (u'' + G^1_ij u'^i u'^j))``
    divided by the cube of the speed ``sqrt(I(u', v'))``.
    """
    p = _curve_point(pc, t)
    gamma = christoffel_symbols(p.local)
    d = np.array([p.du, p.dv])
    a1 = p.d2u + d @ gamma[0] @ d
    a2 = p.d2v + d @ gamma[1] @ d
    speed = math.sqrt(float(d @ p.local.first_matrix @ d))
    return math.sqrt(p.local.det_first) * (p.du * a2 - p.dv * a1) / speed**3


@dataclass(frozen=True)
class GeodesicTrace:
    """A traced geodesic sampled at arc length ``s``."""

    surface: SurfaceModel
    s: np.ndarray
    states: np.ndarray
    max_energy_drift: float

    @property
    def u(self) -> np.ndarray:
        return self.states[:, 0]

    @property
    def v(self) -> np.ndarray:
        return self.states[:, 1]

    @cached_property
    def points(self) -> np.ndarray:
        return np.array(
            [
                [evaluate(c, {"u": u, "v": v}) for c in self.surface.components]
                for u, v in zip(self.u, self.v)
            ]
        )

    @property
    def end(self) -> GeodesicState:
        return GeodesicState(*self.states[-1])


def _first_form_norm(s: SurfaceModel, y: np.ndarray) -> float:
    local = LocalGeometry(s, y[0], y[1], order=1)
    d = y[2:4]
    return float(d @ local.first_matrix @ d)


def trace_geodesic(
    s: SurfaceModel, init: GeodesicState, length: float, steps: int | None = None
) -> GeodesicTrace:
    """Integrate ``u''^k = -G^k_ij u'^i u'^j`` over arc length ``length``.

    Classical RK4 with at least ``integration.geodesic_min_steps`` fixed steps;
    after every step the velocity is rescaled to unit length in the first
    fundamental form.

    Raises:
        IrregularPointError: If the initial point is irregular or the initial
            velocity vanishes.
        DomainExitError: If the trajectory leaves the chart's rectangle.
    """
    steps = max(steps or 0, setting("integration.geodesic_min_steps"))
    if not s.domain.contains(init.u, init.v):
        raise DomainExitError(
            f"Initial point is outside the domain {s.domain}", (init.u, init.v)
        )
    y0 = init.as_array()
    energy = _first_form_norm(s, y0)
    if not energy > 0:
        raise IrregularPointError(
            "Initial geodesic velocity vanishes", point=(init.u, init.v)
        )
    y0[2:4] /= math.sqrt(energy)

    def rhs(_: float, y: np.ndarray) -> np.ndarray:
        gamma = christoffel_symbols(LocalGeometry(s, y[0], y[1], order=2))
        d = y[2:4]
        return np.array([d[0], d[1], -(d @ gamma[0] @ d), -(d @ gamma[1] @ d)])

    drift = 0.0

    def renormalize(t: float, y: np.ndarray) -> np.ndarray:
        nonlocal drift
        if not s.domain.contains(y[0], y[1], DOMAIN_SLACK):
            LOGGER.info(
                f"Geodesic left the domain {s.domain} at s={t} ({y[0]}, {y[1]})"
            )
            raise DomainExitError(
                f"Geodesic left the domain {s.domain} after arc length {t:.6g}",
                (float(y[0]), float(y[1])),
            )
        energy = _first_form_norm(s, y)
        drift = max(drift, abs(energy - 1))
        y = y.copy()
        y[2:4] /= math.sqrt(energy)
        return y

    times, states = rk4(rhs, y0, 0.0, length, steps, renormalize)
    return GeodesicTrace(s, times, states, drift)


@dataclass(frozen=True)
class GeodesicReport:
    is_geodesic: bool
    max_abs_kappa_g: float
    max_abs_kappa_n: float


def is_geodesic(pc: ParamCurve, samples: int) -> GeodesicReport:
    """Whether ``max|kappa_g| <= tol (1 + max|kappa_n|)`` over the samples.

    ``kappa_n`` is the normal curvature of the surface along the curve, so the
    threshold scales with the curvature the curve actually sees.
    """
    kappa_g, kappa_n = [], []
    for t in pc.domain.samples(samples):
        p = _curve_point(pc, t)
        kappa_g.append(abs(_kappa_g(p)))
        d = np.array([p.du, p.dv])
        second = float(d @ p.local.second_matrix @ d)
        kappa_n.append(abs(second / float(d @ p.local.first_matrix @ d)))
    max_g, max_n = max(kappa_g), max(kappa_n)
    return GeodesicReport(
        max_g <= tolerance("checks.geodesic") * (1 + max_n), max_g, max_n
    )
