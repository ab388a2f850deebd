from .geodesy import (
    GeodesicReport,
    GeodesicState,
    GeodesicTrace,
    ParamCurve,
    geodesic_curvature,
    intrinsic_geodesic_curvature,
    is_geodesic,
    trace_geodesic,
)


__all__ = [
    "GeodesicReport",
    "GeodesicState",
    "GeodesicTrace",
    "ParamCurve",
    "geodesic_curvature",
    "intrinsic_geodesic_curvature",
    "is_geodesic",
    "trace_geodesic",
]
