"""Differential geometry of curves, strips and surfaces in three dimensions.

## Overview

Models are written in a small expression language and evaluated exactly up to
third derivatives by Taylor-jet arithmetic, so curvatures, torsions and the
coefficients of the fundamental forms are free of finite-difference error.

 - [geo3.expr][geo3.expr]: Parsing of scalar, curve and surface expressions.
 - [geo3.curve][geo3.curve]: Frenet frames, arc length, shape tests and
   reconstruction from curvature and torsion.
 - [geo3.strip][geo3.strip]: Curves carrying a unit normal field.
 - [geo3.surface][geo3.surface]: Fundamental forms, curvatures, Christoffel
   symbols and grid-wide identity checks.
 - [geo3.geodesy][geo3.geodesy]: Geodesic curvature and geodesic tracing.
 - [geo3.catalog][geo3.catalog]: Named reference curves and surfaces with
   their known invariants.

Tolerances are read lazily from `./geo3.yaml` (see
[`Config`][geo3.config.Config]); built-in defaults apply when no file exists.

## Examples

```python
import geo3

helix = geo3.parse_curve("(cos t, sin t, t) on [0, 2*pi]")
report = geo3.curvature_torsion(helix, 1.0)
print(report.kappa, report.tau)  # 0.5 0.5

sphere = geo3.catalog.make("sphere", r=2.0).model
forms = geo3.shape_and_curvatures(sphere, 0.3, 0.4)
print(forms.K)  # 0.25
```
"""

from . import catalog
from .curve import arc_length, curvature_torsion, reconstruct, shape_tests
from .errors import Geo3Error, InputError, InvariantCheckError, MathError
from .expr import parse_curve, parse_scalar, parse_surface
from .geodesy import geodesic_curvature, is_geodesic, trace_geodesic
from .strip import Strip, strip_invariants
from .surface import check_suite, shape_and_curvatures


__all__ = [
    "Geo3Error",
    "InputError",
    "InvariantCheckError",
    "MathError",
    "Strip",
    "arc_length",
    "catalog",
    "check_suite",
    "curvature_torsion",
    "geodesic_curvature",
    "is_geodesic",
    "parse_curve",
    "parse_scalar",
    "parse_surface",
    "reconstruct",
    "shape_and_curvatures",
    "shape_tests",
    "strip_invariants",
    "trace_geodesic",
]
