from .curve import (
    ShapeReport,
    arc_length,
    curvature_torsion,
    curve_jets,
    darboux_vector,
    derivatives,
    frenet_residuals,
    is_regular,
    osculating_circle,
    osculating_plane,
    param_by_arc_length,
    sample_frames,
    shape_tests,
    speed,
    tangent_line,
)
from .frames import (
    CurvatureReport,
    FrameState,
    FrameStatus,
    FrenetFrame,
    Line,
    OsculatingCircle,
    Plane,
    RegularityReport,
    Vec3,
    vec3,
)
from .natural import SampledCurve, planar_from_curvature, reconstruct


__all__ = [
    "CurvatureReport",
    "FrameState",
    "FrameStatus",
    "FrenetFrame",
    "Line",
    "OsculatingCircle",
    "Plane",
    "RegularityReport",
    "SampledCurve",
    "ShapeReport",
    "Vec3",
    "arc_length",
    "curvature_torsion",
    "curve_jets",
    "darboux_vector",
    "derivatives",
    "frenet_residuals",
    "is_regular",
    "osculating_circle",
    "osculating_plane",
    "param_by_arc_length",
    "planar_from_curvature",
    "reconstruct",
    "sample_frames",
    "shape_tests",
    "speed",
    "tangent_line",
    "vec3",
]
