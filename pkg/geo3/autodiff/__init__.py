from . import vector
from .jet import MAX_ORDER, Jet, Jet1, Jet2, apply, compose
from .lift import JetAlgebra, lift, lift1, lift2
from .vector import JetVec


__all__ = [
    "Jet",
    "Jet1",
    "Jet2",
    "JetAlgebra",
    "JetVec",
    "MAX_ORDER",
    "apply",
    "compose",
    "lift",
    "lift1",
    "lift2",
    "vector",
]
