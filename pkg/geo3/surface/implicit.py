from dataclasses import dataclass

import numpy as np

from geo3.autodiff import lift
from geo3.config import tolerance
from geo3.curve import Vec3
from geo3.errors import IrregularPointError
from geo3.expr import Expr, evaluate, parse_scalar


IMPLICIT_VARIABLES = ("x", "y", "z")


@dataclass(frozen=True)
class ImplicitSurface:
    """The level set ``F(x, y, z) = 0``."""

    F: Expr
    label: str | None = None

    def _bindings(self, p: Vec3) -> dict[str, float]:
        return dict(zip(IMPLICIT_VARIABLES, map(float, p)))

    def gradient(self, p: Vec3) -> Vec3:
        jet = lift(self.F, self._bindings(p), order=1)
        return np.array([jet.derivative(axis) for axis in np.eye(3, dtype=int)])

    def is_regular_at(self, p: Vec3) -> bool:
        return float(np.linalg.norm(self.gradient(p))) > tolerance("implicit")

    def normal_at(self, p: Vec3) -> Vec3:
        """``grad F / |grad F|``.

        Raises:
            IrregularPointError: If the gradient vanishes at ``p``.
        """
        gradient = self.gradient(p)
        size = float(np.linalg.norm(gradient))
        if not size > tolerance("implicit"):
            raise IrregularPointError(f"grad F vanishes for {self.F}", point=tuple(p))
        return gradient / size

    def level_residual(self, p: Vec3) -> float:
        return evaluate(self.F, self._bindings(p))


def implicit_surface(F: Expr | str, label: str | None = None) -> ImplicitSurface:
    """Wrap ``F`` (an expression or DSL source in ``x, y, z``) as a level set."""
    if isinstance(F, str):
        F = parse_scalar(F, IMPLICIT_VARIABLES)
    return ImplicitSurface(F, label)
