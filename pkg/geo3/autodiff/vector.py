"""Three-vectors whose components are jets.

Used to carry tangents, surface partials and normals through products and
normalizations while keeping their derivatives exact.
"""

from collections.abc import Sequence

import numpy as np

from .jet import Jet


JetVec = tuple[Jet, Jet, Jet]


def dot(a: Sequence[Jet], b: Sequence[Jet]) -> Jet:
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def cross(a: Sequence[Jet], b: Sequence[Jet]) -> JetVec:
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def scale(a: Sequence[Jet], s: Jet | float) -> JetVec:
    return (a[0] * s, a[1] * s, a[2] * s)


def add(a: Sequence[Jet], b: Sequence[Jet]) -> JetVec:
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2])


def norm(a: Sequence[Jet]) -> Jet:
    return dot(a, a).sqrt()


def normalize(a: Sequence[Jet]) -> JetVec:
    return scale(a, norm(a).reciprocal())


def d(a: Sequence[Jet], axis: int = 0) -> JetVec:
    """Componentwise partial derivative along ``axis``."""
    return (a[0].d(axis), a[1].d(axis), a[2].d(axis))


def values(a: Sequence[Jet]) -> np.ndarray:
    return np.array([c.value for c in a])
