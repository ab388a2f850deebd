"""Exceptions raised by geo3.

Errors fall into three families, which the command line maps onto distinct exit
codes:

 - input errors (bad DSL source, unknown preset, bad configuration),
 - math errors (domain violations, irregular points, failed integration),
 - invariant check failures (a verified identity exceeded its tolerance).
"""

from typing import Any


class Geo3Error(Exception):
    """Base class of every geo3 error.

    Args:
        message: Human readable description.
        e: The underlying exception, if any.
        fragment: The offending piece of user input (source text or
            subexpression), if known.
        point: The parameter point at which the error occurred, if any.
    """

    def __init__(
        self,
        message: str = None,
        e: Exception = None,
        fragment: str | None = None,
        point: Any = None,
    ) -> None:
        super().__init__(message, e)
        self.message = message
        self.fragment = fragment
        self.point = point

    def __str__(self) -> str:
        parts = [self.message or self.__class__.__name__]
        if self.fragment is not None:
            parts.append(f"in '{self.fragment}'")
        if self.point is not None:
            parts.append(f"at {self.point}")
        return " ".join(parts)


class InputError(Geo3Error):
    """Malformed user input."""


class ExprSyntaxError(InputError):
    def __init__(self, message: str, offset: int, source: str | None = None) -> None:
        super().__init__(f"{message} (offset {offset})", fragment=source)
        self.offset = offset


class UndeclaredVariableError(InputError):
    def __init__(self, name: str, offset: int, declared: frozenset[str]) -> None:
        allowed = ", ".join(sorted(declared)) or "none"
        super().__init__(
            f"Undeclared variable '{name}' at offset {offset} (declared: {allowed})",
            fragment=name,
        )
        self.name = name
        self.offset = offset


class ArityError(InputError):
    def __init__(self, expected: int, found: int, source: str | None = None) -> None:
        super().__init__(
            f"Expected {expected} components but found {found}", fragment=source
        )
        self.expected = expected
        self.found = found


class CatalogError(InputError):
    """Unknown catalog entry or parameters outside the documented range."""


class ConfigError(InputError):
    """Invalid configuration file or environment override."""


class MathError(Geo3Error):
    """A mathematical precondition failed while evaluating."""


class DomainError(MathError):
    def __init__(
        self, message: str, subexpression: str | None = None, point: Any = None
    ) -> None:
        super().__init__(message, fragment=subexpression, point=point)
        self.subexpression = subexpression


class IrregularPointError(MathError):
    """Zero speed on a curve, or x_u x x_v = 0 on a surface."""


class UndefinedFrameError(MathError):
    """The requested frame or plane needs a nonzero curvature."""


class InvalidFrameError(MathError):
    """A frame or normal field is not orthonormal / not normal."""


class AsymptoticDirectionError(MathError):
    """The tangent direction has vanishing normal curvature."""


class OutOfRangeError(MathError):
    """A requested value is outside the admissible range."""


class QuadratureError(MathError):
    """Adaptive quadrature met a non-finite integrand."""


class IntegrationError(MathError):
    """An ODE step produced a non-finite state."""


class DomainExitError(MathError):
    def __init__(self, message: str, exit_point: Any) -> None:
        super().__init__(message, point=exit_point)
        self.exit_point = exit_point


class InvariantCheckError(Geo3Error):
    """A verified identity exceeded its tolerance."""
