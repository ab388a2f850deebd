from .calculus import differentiate
from .evaluate import FLOATS, Algebra, FloatAlgebra, evaluate, walk
from .models import (
    CURVE_VARIABLES,
    SURFACE_VARIABLES,
    CurveModel,
    Interval,
    Rectangle,
    SurfaceModel,
    parse_curve,
    parse_surface,
)
from .nodes import (
    CONSTANTS,
    FUNCTIONS,
    Binary,
    Call,
    Constant,
    Expr,
    Unary,
    Variable,
    substitute,
)
from .parser import Parser, parse_scalar, tokenize


__all__ = [
    "Algebra",
    "Binary",
    "CONSTANTS",
    "CURVE_VARIABLES",
    "Call",
    "Constant",
    "CurveModel",
    "Expr",
    "FLOATS",
    "FUNCTIONS",
    "FloatAlgebra",
    "Interval",
    "Parser",
    "Rectangle",
    "SURFACE_VARIABLES",
    "SurfaceModel",
    "Unary",
    "Variable",
    "differentiate",
    "evaluate",
    "parse_curve",
    "parse_scalar",
    "parse_surface",
    "substitute",
    "tokenize",
    "walk",
]
