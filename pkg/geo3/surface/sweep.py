"""Grid sweeps over a surface chart.

Points are evaluated independently on a thread pool; per-point failures are
collected instead of aborting the sweep, and results keep grid order.
"""

import logging
import math
from collections.abc import Callable, Sequence
from concurrent import futures
from dataclasses import dataclass, field
from typing import Generic, TypeVar

import numpy as np

from geo3.autodiff import vector as jv
from geo3.config import setting, tolerance
from geo3.curve import RegularityReport
from geo3.errors import Geo3Error, InvariantCheckError
from geo3.expr import Rectangle, SurfaceModel

from .forms import curvatures, principal_curvatures
from .geometry import LocalGeometry, surface_jets
from .structure import (
    gauss_weingarten_residual,
    intrinsic_curvature,
    koszul_check,
    normal_identities_check,
)


LOGGER = logging.getLogger(__name__)

T = TypeVar("T")
Point = tuple[float, float]
Grid = tuple[int, int]


@dataclass
class SweepResult(Generic[T]):
    points: list[Point]
    values: list[T | None]
    failures: list[tuple[Point, Geo3Error]] = field(default_factory=list)

    def completed(self) -> list[tuple[Point, T]]:
        return [(p, v) for p, v in zip(self.points, self.values) if v is not None]


def grid_points(
    s: SurfaceModel, grid: Grid, domain: Rectangle | None = None
) -> list[Point]:
    nu, nv = grid
    if nu < 2 or nv < 2:
        raise ValueError("Grids need at least 2x2 points")
    return (domain or s.domain).grid(nu, nv)


def sweep(
    s: SurfaceModel,
    points: Sequence[Point],
    fn: Callable[[SurfaceModel, float, float], T],
    max_workers: int | None = None,
) -> SweepResult[T]:
    """Evaluate ``fn(s, u, v)`` at every point concurrently."""
    max_workers = max_workers or setting("sweeps.max_workers")
    values: list[T | None] = [None] * len(points)
    failures = []

    with futures.ThreadPoolExecutor(max_workers=max_workers) as executor:
        jobs = {executor.submit(fn, s, u, v): i for i, (u, v) in enumerate(points)}
        for job in futures.as_completed(jobs):
            i = jobs[job]
            try:
                values[i] = job.result()
            except Geo3Error as e:
                LOGGER.info(f"Sweep point {points[i]} failed: {e}")
                failures.append((points[i], e))

    failures.sort(key=lambda failure: points.index(failure[0]))
    return SweepResult(list(points), values, failures)


def _cross_norm(s: SurfaceModel, u: float, v: float) -> float:
    x = surface_jets(s, u, v, order=1)
    return float(np.linalg.norm(np.cross(jv.values(jv.d(x, 0)), jv.values(jv.d(x, 1)))))


def is_regular_surface(
    s: SurfaceModel, grid: Grid, domain: Rectangle | None = None
) -> RegularityReport:
    """Minimum of ``|x_u x x_v|`` over a grid.

    The surface is irregular where it drops below ``tolerances.regularity``.
    """
    result = sweep(s, grid_points(s, grid, domain), _cross_norm)
    completed = result.completed()
    worst, min_norm = (
        min(completed, key=lambda item: item[1]) if completed else (None, math.inf)
    )
    failures = [(point, str(e)) for point, e in result.failures]
    regular = not failures and min_norm > tolerance("regularity")
    return RegularityReport(regular, min_norm, worst, failures)


@dataclass(frozen=True)
class PointDirections:
    """Asymptotic and principal directions at one grid point.

    ``planar`` marks points where the second form vanishes, so every direction
    is asymptotic and none is listed.
    """

    u: float
    v: float
    H: float
    K: float
    asymptotic: list[np.ndarray]
    principal: tuple[np.ndarray, np.ndarray]
    planar: bool


@dataclass(frozen=True)
class MinimalityReport:
    is_minimal: bool
    max_abs_H: float
    max_abs_K: float
    points: list[PointDirections]
    failures: list[tuple[Point, Geo3Error]]


def _unit(local: LocalGeometry, d: np.ndarray) -> np.ndarray:
    return d / math.sqrt(float(d @ local.first_matrix @ d))


def asymptotic_directions(local: LocalGeometry) -> tuple[list[np.ndarray], bool]:
    """Roots of ``e du^2 + 2f du dv + g dv^2 = 0``, and whether the point is planar."""
    e, f, g = local.second
    size_squared = e * e + 2 * f * f + g * g
    if math.sqrt(size_squared) <= tolerance("planar_point"):
        return [], True

    discriminant = f * f - e * g
    tol = tolerance("asymptotic") * (1 + size_squared)
    if discriminant < -tol:
        return [], False
    root = math.sqrt(max(discriminant, 0.0))
    roots = [root] if discriminant <= tol else [root, -root]

    if abs(g) >= abs(e) and g != 0:
        directions = [np.array([1.0, (-f + r) / g]) for r in roots]
    elif e != 0:
        directions = [np.array([(-f + r) / e, 1.0]) for r in roots]
    else:
        directions = [np.array([1.0, 0.0]), np.array([0.0, 1.0])]
    return [_unit(local, d) for d in directions], False


def _directions(s: SurfaceModel, u: float, v: float) -> PointDirections:
    local = LocalGeometry(s, u, v)
    K, H = curvatures(local)
    _, _, d1, d2 = principal_curvatures(local)
    asymptotic, planar = asymptotic_directions(local)
    return PointDirections(u, v, H, K, asymptotic, (d1, d2), planar)


def minimality_and_directions(
    s: SurfaceModel, grid: Grid, domain: Rectangle | None = None
) -> MinimalityReport:
    """Decide minimality (``max|H| <= tol (1 + max|K|)``) and tabulate directions."""
    result = sweep(s, grid_points(s, grid, domain), _directions)
    points = [p for _, p in result.completed()]
    max_h = max((abs(p.H) for p in points), default=0.0)
    max_k = max((abs(p.K) for p in points), default=0.0)
    minimal = bool(points) and max_h <= tolerance("checks.minimality") * (1 + max_k)
    return MinimalityReport(minimal, max_h, max_k, points, result.failures)


@dataclass(frozen=True)
class CheckResult:
    name: str
    residual: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.residual <= self.tolerance


@dataclass(frozen=True)
class CheckReport:
    checks: list[CheckResult]
    points: int
    failures: list[tuple[Point, Geo3Error]]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def max_residual(self) -> float:
        return max(check.residual for check in self.checks)

    def raise_on_failure(self) -> None:
        """Raise InvariantCheckError naming every check over its tolerance."""
        failed = [c for c in self.checks if not c.passed]
        if failed:
            details = ", ".join(
                f"{c.name} {c.residual:.3e} > {c.tolerance:.1e}" for c in failed
            )
            raise InvariantCheckError(f"Structure checks failed: {details}")


def _residuals(
    s: SurfaceModel, u: float, v: float, offsets: Sequence[float]
) -> dict[str, float]:
    local = LocalGeometry(s, u, v)
    K, _ = curvatures(local)
    return {
        "koszul": koszul_check(s, u, v),
        "gauss_weingarten": gauss_weingarten_residual(s, u, v).max,
        "egregium": abs(intrinsic_curvature(local) - K),
        "normal_identities": max(
            normal_identities_check(s, u, v, a).max for a in offsets
        ),
    }


def check_suite(
    s: SurfaceModel,
    grid: Grid,
    domain: Rectangle | None = None,
    offsets: Sequence[float] = (0.05, 0.1),
) -> CheckReport:
    """Koszul, Gauss-Weingarten, Egregium and normal identities over a grid.

    Each residual is maximized over the grid and compared with
    ``tolerances.checks.<name>``.
    """
    points = grid_points(s, grid, domain)
    result = sweep(s, points, lambda s, u, v: _residuals(s, u, v, offsets))
    completed = [values for _, values in result.completed()]
    checks = [
        CheckResult(
            name,
            max((values[name] for values in completed), default=0.0),
            tolerance(f"checks.{name}"),
        )
        for name in ("koszul", "gauss_weingarten", "egregium", "normal_identities")
    ]
    return CheckReport(checks, len(completed), result.failures)
