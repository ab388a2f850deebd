"""Curves from their natural equations.

A unit speed curve is determined up to a rigid motion by its curvature and
torsion as functions of arc length. ``reconstruct`` integrates the Frenet-Serret
system; ``planar_from_curvature`` integrates the turning angle of a plane curve.
"""

import logging
import math
from dataclasses import dataclass

import numpy as np

from geo3.config import setting, tolerance
from geo3.errors import UndefinedFrameError
from geo3.expr import Expr, Interval, evaluate
from geo3.numerics import adaptive_simpson, rk4

from .frames import FrameState, Vec3


LOGGER = logging.getLogger(__name__)

ARC_LENGTH_VARIABLE = "s"


@dataclass(frozen=True)
class SampledCurve:
    """A curve sampled at arc length values ``s`` with optional frames."""

    s: np.ndarray
    points: np.ndarray
    frames: list[FrameState] | None = None
    angles: np.ndarray | None = None

    @property
    def end(self) -> Vec3:
        return self.points[-1]


def _gram_schmidt(y: np.ndarray) -> np.ndarray:
    T = y[3:6] / np.linalg.norm(y[3:6])
    N = y[6:9] - np.dot(y[6:9], T) * T
    N /= np.linalg.norm(N)
    y = y.copy()
    y[3:6], y[6:9], y[9:12] = T, N, np.cross(T, N)
    return y


def reconstruct(
    kappa: Expr,
    tau: Expr,
    s_range: Interval,
    init: FrameState,
    steps_per_unit: int | None = None,
) -> SampledCurve:
    """Integrate ``gamma' = T, T' = kN, N' = -kT + tB, B' = -tN``.

    Classical RK4 with at least ``integration.steps_per_unit`` fixed steps per
    unit of arc length, starting from ``init`` at ``s_range.lo``. The frame is
    re-orthonormalized after every step.

    Raises:
        InvalidFrameError: If ``init`` is not a right-handed orthonormal frame.
        UndefinedFrameError: If the curvature is not positive where the system
            is evaluated.
    """
    init.validate()
    steps_per_unit = steps_per_unit or setting("integration.steps_per_unit")
    steps = max(1, math.ceil(steps_per_unit * s_range.length))

    def rhs(s: float, y: np.ndarray) -> np.ndarray:
        k = evaluate(kappa, {ARC_LENGTH_VARIABLE: s})
        if not k > 0:
            raise UndefinedFrameError(
                f"The Frenet system needs positive curvature, got {k!r}", point=s
            )
        w = evaluate(tau, {ARC_LENGTH_VARIABLE: s})
        T, N, B = y[3:6], y[6:9], y[9:12]
        return np.concatenate([T, k * N, -k * T + w * B, -w * N])

    y0 = np.concatenate([init.point, init.T, init.N, init.B]).astype(float)
    s, states = rk4(
        rhs, y0, s_range.lo, s_range.hi, steps, lambda _, y: _gram_schmidt(y)
    )
    frames = [FrameState(y[0:3], y[3:6], y[6:9], y[9:12]) for y in states]
    LOGGER.info(f"Reconstructed curve over {s_range} in {steps} steps")
    return SampledCurve(s, states[:, 0:3], frames)


def planar_from_curvature(
    kappa: Expr,
    s_range: Interval,
    s0: float | None = None,
    samples: int = 201,
) -> SampledCurve:
    """The unit speed plane curve with signed curvature ``kappa(s)``.

    ``phi(s) = int_{s0}^s kappa`` and ``gamma(s) = int_{s0}^s (cos phi, sin phi, 0)``,
    both by adaptive quadrature, so ``gamma(s0)`` is the origin with tangent
    along the x axis.
    """
    s0 = s_range.lo if s0 is None else s0
    tol = tolerance("quadrature")
    depth = setting("integration.simpson_max_depth")

    def curvature(s: float) -> float:
        return evaluate(kappa, {ARC_LENGTH_VARIABLE: s})

    grid = np.array(s_range.samples(samples))
    # integrate outward from s0 in both directions so every node has an anchor
    nodes = sorted({*grid.tolist(), s0})
    anchor = nodes.index(s0)
    phi = {s0: 0.0}
    position = {s0: np.zeros(2)}

    def advance(a: float, b: float) -> None:
        def angle(s: float) -> float:
            return phi[a] + adaptive_simpson(curvature, a, s, tol, depth)

        phi[b] = angle(b)
        position[b] = position[a] + np.array(
            [
                adaptive_simpson(lambda s: math.cos(angle(s)), a, b, tol, depth),
                adaptive_simpson(lambda s: math.sin(angle(s)), a, b, tol, depth),
            ]
        )

    for i in range(anchor, len(nodes) - 1):
        advance(nodes[i], nodes[i + 1])
    for i in range(anchor, 0, -1):
        advance(nodes[i], nodes[i - 1])

    points = np.array([[*position[s], 0.0] for s in grid])
    return SampledCurve(grid, points, angles=np.array([phi[s] for s in grid]))
