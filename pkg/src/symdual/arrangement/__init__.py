from .matroid import TuttePolynomial, VectorMatroid
from .polarized import (
    ArrangementError,
    DegenerateObjective,
    FixedPoint,
    GaleDual,
    GenericityError,
    HasColoop,
    InvalidArrangement,
    LeafAssignmentFailure,
    NonSimple,
    NotAFlat,
    PolarizedArrangement,
    parse_signs,
    sign_str,
)

__all__ = [
    "ArrangementError",
    "DegenerateObjective",
    "FixedPoint",
    "GaleDual",
    "GenericityError",
    "HasColoop",
    "InvalidArrangement",
    "LeafAssignmentFailure",
    "NonSimple",
    "NotAFlat",
    "PolarizedArrangement",
    "TuttePolynomial",
    "VectorMatroid",
    "parse_signs",
    "sign_str",
]
