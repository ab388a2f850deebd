import logging
from dataclasses import dataclass

import numpy as np

from geo3.autodiff import vector as jv
from geo3.config import setting, tolerance
from geo3.curve import FrameState, Vec3, curve_jets
from geo3.errors import InvalidFrameError, IrregularPointError
from geo3.expr import CurveModel, Expr, Interval
from geo3.numerics import rk4

from .fields import (
    ExprAngle,
    IntegratedAngle,
    NormalField,
    PrincipalNormalField,
    RotatedNormalField,
)


LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class Strip:
    """A curve together with a unit normal field along it."""

    curve: CurveModel
    normal: NormalField


@dataclass(frozen=True)
class StripInvariants:
    t: float
    kappa_n: float
    kappa_g: float
    tau: float


@dataclass(frozen=True)
class _Derivatives:
    point: Vec3
    speed: float
    T: Vec3
    T_prime: Vec3
    N: Vec3
    N_prime: Vec3


def frenet_strip(curve: CurveModel) -> Strip:
    """The strip framed by the principal normal."""
    return Strip(curve, PrincipalNormalField(curve))


def _validate_normal(t: float, T: Vec3, N: Vec3) -> None:
    tol = tolerance("strip")
    if abs(np.linalg.norm(N) - 1) > tol:
        raise InvalidFrameError(
            f"Strip normal has length {np.linalg.norm(N)!r}", point=t
        )
    if abs(np.dot(N, T)) > tol:
        raise InvalidFrameError(
            f"Strip normal is not normal (N.T = {np.dot(N, T)!r})", point=t
        )


def _derivatives(strip: Strip, t: float) -> _Derivatives:
    velocity = jv.d(curve_jets(strip.curve, t, order=2))
    speed = jv.norm(velocity).value
    if not speed > tolerance("regularity"):
        raise IrregularPointError(f"Zero speed on curve {strip.curve}", point=t)

    tangent = jv.scale(velocity, jv.norm(velocity).reciprocal())
    normal = strip.normal.jets(t, 1)
    T, N = jv.values(tangent), jv.values(normal)
    _validate_normal(t, T, N)
    return _Derivatives(
        jv.values(curve_jets(strip.curve, t, order=0)),
        speed,
        T,
        jv.values(jv.d(tangent)) / speed,
        N,
        jv.values(jv.d(normal)) / speed,
    )


def adapted_frame(strip: Strip, t: float) -> FrameState:
    """The right-handed adapted frame ``(T, N, T x N)`` at ``t``.

    Raises:
        InvalidFrameError: If the normal is not unit or not normal to the
            curve within ``tolerances.strip``.
    """
    d = _derivatives(strip, t)
    return FrameState(d.point, d.T, d.N, np.cross(d.T, d.N))


def strip_invariants(strip: Strip, t: float) -> StripInvariants:
    """Normal curvature, geodesic curvature and strip torsion at ``t``.

    With arc-length primes and ``B = N x T``: ``kappa_n = T'.N``,
    ``kappa_g = T'.B`` and ``tau = N'.B``.
    """
    d = _derivatives(strip, t)
    B = np.cross(d.N, d.T)
    return StripInvariants(
        t,
        float(np.dot(d.T_prime, d.N)),
        float(np.dot(d.T_prime, B)),
        float(np.dot(d.N_prime, B)),
    )


def rotate_frame(strip: Strip, phi: Expr) -> Strip:
    """Rotate the normal by ``phi(t)``: ``cos(phi) N + sin(phi) (N x T)``.

    The strip torsion of the result is ``tau + dphi/ds``.
    """
    normal = RotatedNormalField(strip.normal, strip.curve, ExprAngle(phi))
    return Strip(strip.curve, normal)


@dataclass(frozen=True)
class ParallelSample:
    t: float
    phi: float
    normal: Vec3
    tau: float


@dataclass(frozen=True)
class ParallelField:
    strip: Strip
    samples: list[ParallelSample]

    @property
    def max_torsion(self) -> float:
        return max(abs(s.tau) for s in self.samples)


def parallel_normal_field(
    strip: Strip,
    t_range: Interval | None = None,
    phi0: float = 0.0,
    steps: int | None = None,
) -> ParallelField:
    """Rotate the strip normal into a parallel (zero torsion) normal field.

    Solves ``phi'(t) = -tau(t) |gamma'(t)|`` with RK4 from ``phi(t_range.lo) =
    phi0`` and rotates the normal by ``phi``. The strip torsion of the result is
    recomputed at every node.
    """
    t_range = t_range or strip.curve.domain
    steps = steps or setting("integration.parallel_steps")

    def rate(t: float) -> float:
        d = _derivatives(strip, t)
        return -float(np.dot(d.N_prime, np.cross(d.N, d.T))) * d.speed

    times, states = rk4(
        lambda t, _: np.array([rate(t)]),
        np.array([phi0]),
        t_range.lo,
        t_range.hi,
        steps,
    )
    angle = IntegratedAngle(times, states[:, 0], rate)
    parallel = Strip(strip.curve, RotatedNormalField(strip.normal, strip.curve, angle))

    samples = []
    for t, phi in zip(times, states[:, 0]):
        normal = parallel.normal.jets(t, 0)
        samples.append(
            ParallelSample(
                float(t),
                float(phi),
                jv.values(normal),
                strip_invariants(parallel, t).tau,
            )
        )
    result = ParallelField(parallel, samples)
    LOGGER.info(
        f"Parallel normal field over {t_range}: max torsion {result.max_torsion:.3e}"
    )
    return result
