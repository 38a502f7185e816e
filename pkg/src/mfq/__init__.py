"""Hyperbolic 3-space as the unit hyperboloid inside the quaternion algebra (1,1/C).

The main entry points are re-exported here; see the submodules for the rest.
"""

from .algebra import (
    HAMILTON,
    STANDARD,
    AlgebraParams,
    Mat2,
    Quaternion,
    dagger,
    norm,
    qmul,
    rho,
    star,
    trace,
)
from .macfarlane import (
    DomainError,
    Geodesic,
    HyperboloidPoint,
    IsometryClass,
    act,
    axis,
    classify,
    decompose_action,
    distance,
    translation_length,
)
from .parser import ParseError, format_quaternion, parse_quaternion
from .scalar import QuadExt, QuadField

__all__ = [
    "HAMILTON", "STANDARD", "AlgebraParams", "Mat2", "Quaternion", "dagger", "norm",
    "qmul", "rho", "star", "trace", "DomainError", "Geodesic", "HyperboloidPoint",
    "IsometryClass", "act", "axis", "classify", "decompose_action", "distance",
    "translation_length", "ParseError", "format_quaternion", "parse_quaternion",
    "QuadExt", "QuadField",
]
