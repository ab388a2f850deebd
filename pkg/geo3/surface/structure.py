"""Christoffel symbols and the structure equations of a surface.

Each ``*_check`` / ``*_residual`` function returns how far a classical identity
is from holding at a point; all inputs come from exact jets, so residuals
measure rounding plus any formula error.
"""

from dataclasses import dataclass

import numpy as np

from geo3.curve import Vec3
from geo3.expr import SurfaceModel

from .forms import curvatures
from .geometry import LocalGeometry


E_, F_, G_ = 0, 1, 2


def _metric_first_derivatives(local: LocalGeometry) -> np.ndarray:
    """``dg[k, i, j] = d_k g_ij`` with ``g = [[E, F], [F, G]]``."""
    dg = np.empty((2, 2, 2))
    for k, (i, j) in enumerate(((1, 0), (0, 1))):
        E, F, G = (local.metric_derivative(index, i, j) for index in (E_, F_, G_))
        dg[k] = [[E, F], [F, G]]
    return dg


def christoffel_symbols(local: LocalGeometry) -> np.ndarray:
    """``gamma[k, i, j]`` from the closed-form expressions in ``E, F, G``."""
    E, F, G = local.first
    E_u, F_u, G_u = (local.metric_derivative(i, 1, 0) for i in (E_, F_, G_))
    E_v, F_v, G_v = (local.metric_derivative(i, 0, 1) for i in (E_, F_, G_))
    two_w = 2 * local.det_first

    gamma = np.empty((2, 2, 2))
    gamma[0, 0, 0] = (G * E_u - 2 * F * F_u + F * E_v) / two_w
    gamma[1, 0, 0] = (2 * E * F_u - E * E_v - F * E_u) / two_w
    gamma[0, 0, 1] = gamma[0, 1, 0] = (G * E_v - F * G_u) / two_w
    gamma[1, 0, 1] = gamma[1, 1, 0] = (E * G_u - F * E_v) / two_w
    gamma[0, 1, 1] = (2 * G * F_v - G * G_u - F * G_v) / two_w
    gamma[1, 1, 1] = (E * G_v - 2 * F * F_v + F * G_u) / two_w
    return gamma


def christoffel(s: SurfaceModel, u: float, v: float) -> np.ndarray:
    """The Christoffel symbols ``gamma[k, i, j]`` at ``(u, v)`` (0 = u, 1 = v)."""
    return christoffel_symbols(LocalGeometry(s, u, v))


def koszul_check(s: SurfaceModel, u: float, v: float) -> float:
    """Max over ``i, j, k`` of the Koszul residual.

    The residual is ``|sum_m g_km G^m_ij - (d_i g_jk + d_j g_ik - d_k g_ij) / 2|``.
    """
    local = LocalGeometry(s, u, v)
    g = local.first_matrix
    dg = _metric_first_derivatives(local)
    gamma = christoffel_symbols(local)

    residual = 0.0
    for i in range(2):
        for j in range(2):
            for k in range(2):
                lhs = sum(g[k, m] * gamma[m, i, j] for m in range(2))
                rhs = (dg[i, j, k] + dg[j, i, k] - dg[k, i, j]) / 2
                residual = max(residual, abs(lhs - rhs))
    return residual


@dataclass(frozen=True)
class GaussWeingartenResidual:
    structural: tuple[Vec3, Vec3, Vec3]
    normal: tuple[Vec3, Vec3]

    @property
    def max(self) -> float:
        return max(float(np.linalg.norm(r)) for r in (*self.structural, *self.normal))


def gauss_weingarten_residual(
    s: SurfaceModel, u: float, v: float
) -> GaussWeingartenResidual:
    """Residuals of ``x_ij = G^1_ij x_u + G^2_ij x_v + h_ij n`` and of the
    Weingarten equations for ``n_u``, ``n_v``."""
    local = LocalGeometry(s, u, v)
    gamma = christoffel_symbols(local)
    E, F, G = local.first
    e, f, g = local.second
    x_u, x_v, n = local.x_u, local.x_v, local.n

    def structural(second: Vec3, i: int, j: int, h: float) -> Vec3:
        return second - (gamma[0, i, j] * x_u + gamma[1, i, j] * x_v + h * n)

    w = local.det_first
    n_u = -((G * e - F * f) * x_u + (E * f - F * e) * x_v) / w
    n_v = -((G * f - F * g) * x_u + (E * g - F * f) * x_v) / w
    return GaussWeingartenResidual(
        (
            structural(local.x_uu, 0, 0, e),
            structural(local.x_uv, 0, 1, f),
            structural(local.x_vv, 1, 1, g),
        ),
        (local.n_u - n_u, local.n_v - n_v),
    )


def intrinsic_curvature(local: LocalGeometry) -> float:
    E, F, G = local.first

    def d(index: int, i: int, j: int) -> float:
        return local.metric_derivative(index, i, j)

    E_u, E_v, E_vv = d(E_, 1, 0), d(E_, 0, 1), d(E_, 0, 2)
    F_u, F_v, F_uv = d(F_, 1, 0), d(F_, 0, 1), d(F_, 1, 1)
    G_u, G_v, G_uu = d(G_, 1, 0), d(G_, 0, 1), d(G_, 2, 0)

    a = np.array(
        [
            [-E_vv / 2 + F_uv - G_uu / 2, E_u / 2, F_u - E_v / 2],
            [F_v - G_u / 2, E, F],
            [G_v / 2, F, G],
        ]
    )
    b = np.array(
        [
            [0.0, E_v / 2, G_u / 2],
            [E_v / 2, E, F],
            [G_u / 2, F, G],
        ]
    )
    return (np.linalg.det(a) - np.linalg.det(b)) / local.det_first**2


def intrinsic_K(s: SurfaceModel, u: float, v: float) -> float:
    """Gaussian curvature from ``E, F, G`` and their derivatives only (Brioschi)."""
    return intrinsic_curvature(LocalGeometry(s, u, v))


@dataclass(frozen=True)
class NormalIdentities:
    gauss_map: float
    parallel_surface: float

    @property
    def max(self) -> float:
        return max(self.gauss_map, self.parallel_surface)


def normal_identities_check(
    s: SurfaceModel, u: float, v: float, a: float
) -> NormalIdentities:
    """Residuals of ``n_u x n_v = K x_u x x_v`` and, for the parallel surface
    ``rho = x + a n``, of ``rho_u x rho_v = (1 - 2Ha + Ka^2) x_u x x_v``."""
    local = LocalGeometry(s, u, v)
    K, H = curvatures(local)
    rho_u = local.x_u + a * local.n_u
    rho_v = local.x_v + a * local.n_v
    return NormalIdentities(
        float(np.linalg.norm(np.cross(local.n_u, local.n_v) - K * local.cross)),
        float(
            np.linalg.norm(
                np.cross(rho_u, rho_v) - (1 - 2 * H * a + K * a * a) * local.cross
            )
        ),
    )
