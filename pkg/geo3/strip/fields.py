"""Unit normal fields along a curve, evaluated as jets in ``t``."""

from collections.abc import Callable
from dataclasses import dataclass
from typing import Protocol

import numpy as np

from geo3.autodiff import Jet1, JetVec, apply, lift
from geo3.autodiff import vector as jv
from geo3.curve import curve_jets
from geo3.expr import CurveModel, Expr


class NormalField(Protocol):
    """A vector field along a curve, expected to be unit and normal."""

    def jets(self, t: float, order: int) -> JetVec:
        """Jets of the three components at ``t``; ``order`` is at most 1."""
        ...


class AngleField(Protocol):
    def jet(self, t: float, order: int) -> Jet1: ...


def tangent_jets(curve: CurveModel, t: float, order: int) -> JetVec:
    """Jets of the unit tangent ``T`` at ``t``."""
    return jv.normalize(jv.d(curve_jets(curve, t, order + 1)))


@dataclass(frozen=True)
class ExprNormalField:
    components: tuple[Expr, Expr, Expr]

    def jets(self, t: float, order: int) -> JetVec:
        return tuple(lift(c, {"t": t}, order, Jet1) for c in self.components)


@dataclass(frozen=True)
class PrincipalNormalField:
    """The Frenet principal normal ``T' / |T'|``."""

    curve: CurveModel

    def jets(self, t: float, order: int) -> JetVec:
        return jv.normalize(jv.d(tangent_jets(self.curve, t, order + 1)))


@dataclass(frozen=True)
class ExprAngle:
    expr: Expr

    def jet(self, t: float, order: int) -> Jet1:
        return lift(self.expr, {"t": t}, order, Jet1)


@dataclass(frozen=True)
class IntegratedAngle:
    """An angle known at integration nodes together with its exact rate.

    Values between nodes use cubic Hermite interpolation; the derivative is
    always the rate function itself.
    """

    times: np.ndarray
    values: np.ndarray
    rate: Callable[[float], float]

    def value(self, t: float) -> float:
        i = int(np.clip(np.searchsorted(self.times, t) - 1, 0, len(self.times) - 2))
        t0, t1 = self.times[i], self.times[i + 1]
        h = t1 - t0
        x = (t - t0) / h
        h00 = 2 * x**3 - 3 * x**2 + 1
        h10 = x**3 - 2 * x**2 + x
        h01 = -2 * x**3 + 3 * x**2
        h11 = x**3 - x**2
        return float(
            h00 * self.values[i]
            + h10 * h * self.rate(t0)
            + h01 * self.values[i + 1]
            + h11 * h * self.rate(t1)
        )

    def jet(self, t: float, order: int) -> Jet1:
        if order > 1:
            raise ValueError("An integrated angle only carries first derivatives")
        jet = Jet1.variable(self.value(t), 0, 1, order)
        if order == 1:
            jet.coefficients[1] = self.rate(t)
        return jet


@dataclass(frozen=True)
class RotatedNormalField:
    """``cos(phi) N + sin(phi) (N x T)`` for a base field ``N``."""

    base: NormalField
    curve: CurveModel
    angle: AngleField

    def jets(self, t: float, order: int) -> JetVec:
        normal = self.base.jets(t, order)
        binormal = jv.cross(normal, tangent_jets(self.curve, t, order))
        phi = self.angle.jet(t, order)
        return jv.add(
            jv.scale(normal, apply("cos", phi)), jv.scale(binormal, apply("sin", phi))
        )
