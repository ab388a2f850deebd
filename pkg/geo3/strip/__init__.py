from .fields import (
    AngleField,
    ExprAngle,
    ExprNormalField,
    IntegratedAngle,
    NormalField,
    PrincipalNormalField,
    RotatedNormalField,
)
from .strip import (
    ParallelField,
    ParallelSample,
    Strip,
    StripInvariants,
    adapted_frame,
    frenet_strip,
    parallel_normal_field,
    rotate_frame,
    strip_invariants,
)


__all__ = [
    "AngleField",
    "ExprAngle",
    "ExprNormalField",
    "IntegratedAngle",
    "NormalField",
    "ParallelField",
    "ParallelSample",
    "PrincipalNormalField",
    "RotatedNormalField",
    "Strip",
    "StripInvariants",
    "adapted_frame",
    "frenet_strip",
    "parallel_normal_field",
    "rotate_frame",
    "strip_invariants",
]
