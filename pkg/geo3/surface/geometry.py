"""Local differential data of a parametrized surface at one parameter point."""

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from geo3.autodiff import Jet2, JetVec, lift
from geo3.autodiff import vector as jv
from geo3.config import tolerance
from geo3.curve import Vec3
from geo3.errors import IrregularPointError
from geo3.expr import SurfaceModel


@dataclass(frozen=True)
class SurfaceJet:
    """Partial derivatives of ``x(u, v)`` up to third order."""

    x: Vec3
    x_u: Vec3
    x_v: Vec3
    x_uu: Vec3
    x_uv: Vec3
    x_vv: Vec3
    x_uuu: Vec3
    x_uuv: Vec3
    x_uvv: Vec3
    x_vvv: Vec3


_PARTIALS = {
    "x": (0, 0),
    "x_u": (1, 0),
    "x_v": (0, 1),
    "x_uu": (2, 0),
    "x_uv": (1, 1),
    "x_vv": (0, 2),
    "x_uuu": (3, 0),
    "x_uuv": (2, 1),
    "x_uvv": (1, 2),
    "x_vvv": (0, 3),
}


def surface_jets(s: SurfaceModel, u: float, v: float, order: int = 3) -> JetVec:
    return tuple(lift(c, {"u": u, "v": v}, order, Jet2) for c in s.components)


def jets(s: SurfaceModel, u: float, v: float) -> SurfaceJet:
    """All partials of the surface at ``(u, v)`` up to order three.

    Raises:
        DomainError: If a coordinate function is not smooth at ``(u, v)``.
    """
    components = surface_jets(s, u, v)
    return SurfaceJet(
        **{
            name: np.array([c.partial(*index) for c in components])
            for name, index in _PARTIALS.items()
        }
    )


class LocalGeometry:
    """Lazily computed first and second order data at ``(u, v)``.

    The metric coefficients and the unit normal are kept as jets so that their
    parameter derivatives are exact. With ``order=2`` only first derivatives of
    the metric are available, which is all the Christoffel symbols need.

    Raises:
        IrregularPointError: On construction, if ``x_u x x_v`` vanishes.
    """

    def __init__(self, s: SurfaceModel, u: float, v: float, order: int = 3) -> None:
        self.surface = s
        self.u = u
        self.v = v
        self.x_jets = surface_jets(s, u, v, order)
        self.xu_jets = jv.d(self.x_jets, 0)
        self.xv_jets = jv.d(self.x_jets, 1)
        self.cross = np.cross(self.x_u, self.x_v)
        self.area = float(np.linalg.norm(self.cross))
        if not self.area > tolerance("regularity"):
            raise IrregularPointError(
                f"x_u x x_v vanishes on surface {s}", point=(u, v)
            )

    @property
    def point(self) -> tuple[float, float]:
        return (self.u, self.v)

    @cached_property
    def x(self) -> Vec3:
        return jv.values(self.x_jets)

    @cached_property
    def x_u(self) -> Vec3:
        return jv.values(self.xu_jets)

    @cached_property
    def x_v(self) -> Vec3:
        return jv.values(self.xv_jets)

    @cached_property
    def x_uu(self) -> Vec3:
        return jv.values(jv.d(self.xu_jets, 0))

    @cached_property
    def x_uv(self) -> Vec3:
        return jv.values(jv.d(self.xu_jets, 1))

    @cached_property
    def x_vv(self) -> Vec3:
        return jv.values(jv.d(self.xv_jets, 1))

    @cached_property
    def metric_jets(self) -> tuple[Jet2, Jet2, Jet2]:
        """Jets of ``E, F, G``, one order below the surface jets."""
        return (
            jv.dot(self.xu_jets, self.xu_jets),
            jv.dot(self.xu_jets, self.xv_jets),
            jv.dot(self.xv_jets, self.xv_jets),
        )

    @cached_property
    def normal_jets(self) -> JetVec:
        """Jets of ``n = x_u x x_v / |x_u x x_v|``, one order below the surface jets."""
        return jv.normalize(jv.cross(self.xu_jets, self.xv_jets))

    @cached_property
    def n(self) -> Vec3:
        return self.cross / self.area

    @cached_property
    def n_u(self) -> Vec3:
        return jv.values(jv.d(self.normal_jets, 0))

    @cached_property
    def n_v(self) -> Vec3:
        return jv.values(jv.d(self.normal_jets, 1))

    @cached_property
    def first(self) -> tuple[float, float, float]:
        return tuple(jet.value for jet in self.metric_jets)

    @cached_property
    def second(self) -> tuple[float, float, float]:
        n = self.n
        return (
            float(np.dot(self.x_uu, n)),
            float(np.dot(self.x_uv, n)),
            float(np.dot(self.x_vv, n)),
        )

    @cached_property
    def det_first(self) -> float:
        E, F, G = self.first
        return E * G - F * F

    @cached_property
    def first_matrix(self) -> np.ndarray:
        E, F, G = self.first
        return np.array([[E, F], [F, G]])

    @cached_property
    def second_matrix(self) -> np.ndarray:
        e, f, g = self.second
        return np.array([[e, f], [f, g]])

    def metric_derivative(self, index: int, i: int, j: int) -> float:
        """``d^(i+j) / du^i dv^j`` of ``E``, ``F`` or ``G`` (index 0, 1, 2)."""
        return self.metric_jets[index].partial(i, j)

    def tangent(self, direction: tuple[float, float]) -> Vec3:
        du, dv = direction
        return du * self.x_u + dv * self.x_v
