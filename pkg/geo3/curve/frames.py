from dataclasses import dataclass, field
from enum import StrEnum, auto

import numpy as np

from geo3.config import tolerance
from geo3.errors import InvalidFrameError


Vec3 = np.ndarray


def vec3(x, y, z) -> Vec3:
    return np.array([x, y, z], dtype=float)


class FrameStatus(StrEnum):
    DEFINED = auto()
    UNDEFINED = auto()


@dataclass(frozen=True)
class Line:
    point: Vec3
    direction: Vec3

    def at(self, u: float) -> Vec3:
        return self.point + u * self.direction


@dataclass(frozen=True)
class Plane:
    point: Vec3
    normal: Vec3

    def residual(self, x: Vec3) -> float:
        """Signed distance of ``x`` from the plane (``normal`` is unit)."""
        return float(np.dot(x - self.point, self.normal))


@dataclass(frozen=True)
class OsculatingCircle:
    center: Vec3
    radius: float
    normal: Vec3


@dataclass(frozen=True)
class FrameState:
    """A point with a right-handed orthonormal triple ``(T, N, B)``."""

    point: Vec3
    T: Vec3
    N: Vec3
    B: Vec3

    @classmethod
    def identity(cls) -> "FrameState":
        """The standard basis at the origin."""
        e = np.eye(3)
        return cls(np.zeros(3), e[0], e[1], e[2])

    def validate(self, tol: float | None = None) -> "FrameState":
        """Check unit length, orthogonality and ``B = T x N``.

        Raises:
            InvalidFrameError: If any of the checks fails by more than ``tol``
                (default ``tolerances.frame``).
        """
        tol = tolerance("frame") if tol is None else tol
        T, N, B = self.T, self.N, self.B
        checks = {
            "|T| = 1": abs(np.linalg.norm(T) - 1),
            "|N| = 1": abs(np.linalg.norm(N) - 1),
            "|B| = 1": abs(np.linalg.norm(B) - 1),
            "T.N = 0": abs(np.dot(T, N)),
            "T.B = 0": abs(np.dot(T, B)),
            "N.B = 0": abs(np.dot(N, B)),
            "B = T x N": np.linalg.norm(B - np.cross(T, N)),
        }
        for name, error in checks.items():
            if not error <= tol:
                raise InvalidFrameError(
                    f"Frame violates {name} by {error:.3e}", point=self.point.tolist()
                )
        return self

    @property
    def matrix(self) -> np.ndarray:
        """Columns ``T, N, B``."""
        return np.column_stack([self.T, self.N, self.B])


class FrenetFrame(FrameState):
    """Frame whose ``N`` is the principal normal ``T'/|T'|``."""


@dataclass(frozen=True)
class CurvatureReport:
    """Curvature data at a curve point.

    ``tau``, ``frame`` and ``normal`` are None when the status is
    ``UNDEFINED``, i.e. where ``|gamma' x gamma''|`` vanishes.
    """

    t: float
    point: Vec3
    speed: float
    kappa: float
    tangent: Vec3
    status: FrameStatus
    tau: float | None = None
    frame: FrenetFrame | None = None

    @property
    def defined(self) -> bool:
        return self.status == FrameStatus.DEFINED


@dataclass(frozen=True)
class RegularityReport:
    regular: bool
    min_speed: float
    worst: float | tuple[float, float] | None
    failures: list[tuple] = field(default_factory=list)
