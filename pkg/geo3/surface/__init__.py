from .forms import (
    FormBundle,
    PointType,
    TangentPlane,
    classify_point,
    euler_curvature,
    first_form,
    gauss_map,
    meusnier_check,
    normal_curvature,
    parametric_angle,
    second_form,
    shape_and_curvatures,
    tangent_plane,
)
from .geometry import LocalGeometry, SurfaceJet, jets, surface_jets
from .implicit import IMPLICIT_VARIABLES, ImplicitSurface, implicit_surface
from .structure import (
    GaussWeingartenResidual,
    NormalIdentities,
    christoffel,
    gauss_weingarten_residual,
    intrinsic_K,
    koszul_check,
    normal_identities_check,
)
from .sweep import (
    CheckReport,
    CheckResult,
    MinimalityReport,
    PointDirections,
    SweepResult,
    check_suite,
    grid_points,
    is_regular_surface,
    minimality_and_directions,
    sweep,
)


__all__ = [
    "CheckReport",
    "CheckResult",
    "FormBundle",
    "GaussWeingartenResidual",
    "IMPLICIT_VARIABLES",
    "ImplicitSurface",
    "LocalGeometry",
    "MinimalityReport",
    "NormalIdentities",
    "PointDirections",
    "PointType",
    "SurfaceJet",
    "SweepResult",
    "TangentPlane",
    "check_suite",
    "christoffel",
    "classify_point",
    "euler_curvature",
    "first_form",
    "gauss_map",
    "gauss_weingarten_residual",
    "grid_points",
    "implicit_surface",
    "intrinsic_K",
    "is_regular_surface",
    "jets",
    "koszul_check",
    "meusnier_check",
    "minimality_and_directions",
    "normal_curvature",
    "normal_identities_check",
    "parametric_angle",
    "second_form",
    "shape_and_curvatures",
    "surface_jets",
    "sweep",
    "tangent_plane",
]
