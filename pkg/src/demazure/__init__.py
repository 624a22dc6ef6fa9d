"""Exact Demazure characters, Demazure weight polytopes and the face reduction rule."""

__version__ = "0.1.0"

from .character import (
    Character,
    demazure_character,
    demazure_operator,
    dimension,
    levi_demazure_character,
    multiplicity,
)
from .polytope import DemazurePolytope, FaceLabel, build_polytope
from .reduction import (
    ReductionData,
    VerificationReport,
    connecting_multiplicity_check,
    inversion_positivity_check,
    levi_multiplicity,
    reduction_data,
    saturation_check,
    step_multiplicity_check,
    verify_theorem,
)
from .root_datum import CartanType, RootDatum, build_root_datum
from .weyl import CosetDecomposition, WeylElt, WeylGroup, weyl_group

__all__ = [
    "CartanType", "Character", "CosetDecomposition", "DemazurePolytope", "FaceLabel",
    "ReductionData", "RootDatum", "VerificationReport", "WeylElt", "WeylGroup",
    "build_polytope", "build_root_datum", "connecting_multiplicity_check", "demazure_character",
    "demazure_operator", "dimension", "inversion_positivity_check", "levi_demazure_character",
    "levi_multiplicity", "multiplicity", "reduction_data", "saturation_check",
    "step_multiplicity_check", "verify_theorem", "weyl_group",
]
