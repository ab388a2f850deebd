"""Truncated multivariate Taylor series ("jets").

A jet of order ``k`` in ``n`` variables stores the normalized Taylor
coefficients ``c[a] = D^a f / a!`` of a scalar function at a point for every
multi-index ``a`` with ``|a| <= k``. The array has shape ``(k + 1,) * n`` and
entries above total degree ``k`` are kept at zero.

Arithmetic is exact up to rounding: products are truncated Cauchy products and
elementary functions are applied by composing their Taylor polynomial with the
non-constant part of the argument.
"""

import itertools
import math
from collections.abc import Sequence
from functools import lru_cache
from typing import Union

import numpy as np

from geo3.errors import DomainError


MAX_ORDER = 3

Scalar = Union[int, float]


@lru_cache(maxsize=None)
def _degree_mask(nvars: int, order: int) -> np.ndarray:
    indices = np.indices((order + 1,) * nvars).sum(axis=0)
    return indices <= order


@lru_cache(maxsize=None)
def _product_tensor(nvars: int, order: int) -> np.ndarray:
    """M[i, j, k] = 1 when flat multi-indices i and j add up to k."""
    shape = (order + 1,) * nvars
    size = int(np.prod(shape))
    tensor = np.zeros((size, size, size))
    for a in itertools.product(range(order + 1), repeat=nvars):
        for b in itertools.product(range(order + 1), repeat=nvars):
            c = tuple(x + y for x, y in zip(a, b))
            if sum(c) <= order:
                tensor[
                    np.ravel_multi_index(a, shape),
                    np.ravel_multi_index(b, shape),
                    np.ravel_multi_index(c, shape),
                ] = 1.0
    return tensor


class Jet:
    """A truncated Taylor series in ``nvars`` variables."""

    __slots__ = ("coefficients", "order")

    def __init__(self, coefficients: np.ndarray, order: int) -> None:
        self.coefficients = coefficients
        self.order = order

    @classmethod
    def constant(cls, value: Scalar, nvars: int, order: int = MAX_ORDER) -> "Jet":
        coefficients = np.zeros((order + 1,) * nvars)
        coefficients[(0,) * nvars] = value
        return cls(coefficients, order)

    @classmethod
    def variable(
        cls, value: Scalar, axis: int, nvars: int, order: int = MAX_ORDER
    ) -> "Jet":
        """The jet of the coordinate function ``x_axis`` expanded at ``value``."""
        jet = cls.constant(value, nvars, order)
        if order >= 1:
            index = [0] * nvars
            index[axis] = 1
            jet.coefficients[tuple(index)] = 1.0
        return jet

    @property
    def nvars(self) -> int:
        return self.coefficients.ndim

    @property
    def value(self) -> float:
        return float(self.coefficients[(0,) * self.nvars])

    def derivative(self, multi_index: Sequence[int]) -> float:
        """The partial derivative ``D^a f`` at the expansion point."""
        if sum(multi_index) > self.order:
            raise ValueError(
                f"Derivative of order {sum(multi_index)} exceeds jet order {self.order}"
            )
        factor = math.prod(math.factorial(k) for k in multi_index)
        return float(self.coefficients[tuple(multi_index)]) * factor

    def d(self, axis: int) -> "Jet":
        """The jet of the partial derivative along ``axis``, one order lower."""
        if self.order == 0:
            raise ValueError("Cannot differentiate a jet of order 0")
        order = self.order - 1
        shifted = np.take(self.coefficients, range(1, self.order + 1), axis=axis)
        weights_shape = [1] * self.nvars
        weights_shape[axis] = self.order
        shifted = shifted * np.arange(1, self.order + 1).reshape(weights_shape)
        shifted = shifted[(slice(0, order + 1),) * self.nvars]
        mask = _degree_mask(self.nvars, order)
        return self._like(np.where(mask, shifted, 0.0), order)

    def is_constant(self) -> bool:
        tail = self.coefficients.copy()
        tail[(0,) * self.nvars] = 0.0
        return not np.any(tail)

    def _like(self, coefficients: np.ndarray, order: int | None = None) -> "Jet":
        return type(self)(coefficients, self.order if order is None else order)

    def _coerce(self, other: "Jet | Scalar") -> tuple[np.ndarray, np.ndarray, int]:
        if isinstance(other, Jet):
            if other.nvars != self.nvars:
                raise ValueError("Jets over different variables cannot be combined")
            order = min(self.order, other.order)
            cut = (slice(0, order + 1),) * self.nvars
            return self.coefficients[cut], other.coefficients[cut], order
        constant = np.zeros_like(self.coefficients)
        constant[(0,) * self.nvars] = other
        return self.coefficients, constant, self.order

    def __add__(self, other: "Jet | Scalar") -> "Jet":
        a, b, order = self._coerce(other)
        return self._like(a + b, order)

    __radd__ = __add__

    def __sub__(self, other: "Jet | Scalar") -> "Jet":
        a, b, order = self._coerce(other)
        return self._like(a - b, order)

    def __rsub__(self, other: Scalar) -> "Jet":
        a, b, order = self._coerce(other)
        return self._like(b - a, order)

    def __neg__(self) -> "Jet":
        return self._like(-self.coefficients)

    def __pos__(self) -> "Jet":
        return self

    def __mul__(self, other: "Jet | Scalar") -> "Jet":
        if not isinstance(other, Jet):
            return self._like(self.coefficients * other)
        a, b, order = self._coerce(other)
        if self.nvars == 1:
            return self._like(np.convolve(a, b)[: order + 1], order)
        tensor = _product_tensor(self.nvars, order)
        product = np.einsum("i,j,ijk->k", a.ravel(), b.ravel(), tensor)
        return self._like(product.reshape(a.shape), order)

    __rmul__ = __mul__

    def __truediv__(self, other: "Jet | Scalar") -> "Jet":
        if isinstance(other, Jet):
            return self * other.reciprocal()
        if other == 0:
            raise DomainError("Division by zero")
        return self._like(self.coefficients / other)

    def __rtruediv__(self, other: Scalar) -> "Jet":
        return self.reciprocal() * other

    def reciprocal(self) -> "Jet":
        a = self.value
        if a == 0.0:
            raise DomainError("Division by zero")
        return compose(self, [1 / a, -1 / a**2, 2 / a**3, -6 / a**4])

    def sqrt(self) -> "Jet":
        return apply("sqrt", self)

    def __repr__(self) -> str:
        coefficients = self.coefficients.tolist()
        return f"{type(self).__name__}(order={self.order}, coefficients={coefficients})"


def compose(jet: Jet, derivatives: Sequence[float]) -> Jet:
    """Apply a function with the given derivatives at ``jet.value`` to ``jet``.

    ``derivatives[k]`` is the k-th derivative of the outer function; only the
    first ``jet.order + 1`` are used.
    """
    h = jet - jet.value
    terms = [derivatives[k] / math.factorial(k) for k in range(jet.order + 1)]
    result = jet._like(np.zeros_like(jet.coefficients)) + terms[-1]
    for coefficient in reversed(terms[:-1]):
        result = result * h + coefficient
    return result


def _derivatives(function: str, a: float) -> list[float]:
    match function:
        case "sin":
            s, c = math.sin(a), math.cos(a)
            return [s, c, -s, -c]
        case "cos":
            s, c = math.sin(a), math.cos(a)
            return [c, -s, -c, s]
        case "tan":
            t = math.tan(a)
            s = 1 + t * t
            return [t, s, 2 * t * s, s * (2 + 6 * t * t)]
        case "sinh":
            s, c = math.sinh(a), math.cosh(a)
            return [s, c, s, c]
        case "cosh":
            s, c = math.sinh(a), math.cosh(a)
            return [c, s, c, s]
        case "tanh":
            t = math.tanh(a)
            q = 1 - t * t
            return [t, q, -2 * t * q, q * (6 * t * t - 2)]
        case "exp":
            e = math.exp(a)
            return [e, e, e, e]
        case "ln":
            return [math.log(a), 1 / a, -1 / a**2, 2 / a**3]
        case "sqrt":
            r = math.sqrt(a)
            return [r, 1 / (2 * r), -1 / (4 * r**3), 3 / (8 * r**5)]
        case "atan":
            w = 1 + a * a
            return [math.atan(a), 1 / w, -2 * a / w**2, (6 * a * a - 2) / w**3]
        case "abs":
            return [abs(a), math.copysign(1.0, a), 0.0, 0.0]
    raise ValueError(f"Unknown function '{function}'")


def apply(function: str, jet: Jet, subexpression: str | None = None) -> Jet:
    """Apply an elementary DSL function to a jet.

    A constant argument is evaluated with plain float semantics. Otherwise the
    argument must lie in the open domain of the function: ``ln`` and ``sqrt``
    need a positive value and ``abs`` a nonzero one.

    Raises:
        DomainError: If the argument leaves the domain where the function is
            smooth.
    """
    a = jet.value
    if jet.is_constant():
        from geo3.expr.evaluate import FLOATS

        return jet._like(np.zeros_like(jet.coefficients)) + FLOATS.call(
            function, a, subexpression or function
        )

    if function == "ln" and a <= 0.0:
        raise DomainError(f"ln of non-positive value {a!r}", subexpression)
    if function == "sqrt" and a <= 0.0:
        raise DomainError(f"sqrt is not differentiable at {a!r}", subexpression)
    if function == "abs" and a == 0.0:
        raise DomainError("abs is not differentiable at 0", subexpression)
    try:
        return compose(jet, _derivatives(function, a))
    except OverflowError as e:
        raise DomainError(f"{function} overflowed at {a!r}", subexpression) from e


class Jet1(Jet):
    """Jet in the single variable ``t``."""

    __slots__ = ()

    @property
    def derivatives(self) -> tuple[float, ...]:
        """``(f, f', f'', ...)`` at the expansion point."""
        return tuple(self.derivative((k,)) for k in range(self.order + 1))


class Jet2(Jet):
    """Jet in the two variables ``u`` and ``v``."""

    __slots__ = ()

    def partial(self, i: int, j: int) -> float:
        """``d^(i+j) f / du^i dv^j`` at the expansion point."""
        return self.derivative((i, j))

    @property
    def partials(self) -> dict[tuple[int, int], float]:
        return {
            (i, j): self.partial(i, j)
            for i in range(self.order + 1)
            for j in range(self.order + 1 - i)
        }
