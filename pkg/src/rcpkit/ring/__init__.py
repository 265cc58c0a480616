"""Finite rings as operation tables, with ideal and radical primitives."""

from .ideals import (
    LEFT,
    RIGHT,
    TWO_SIDED,
    IdealSet,
    generated_ideal,
    ideal_intersection,
    ideal_sum,
    idempotents,
    is_unit,
    jacobson_radical,
    left_annihilator,
    principal_left_ideal,
    principal_right_ideal,
    quotient_ring,
    radical_quotient,
    regular_witness,
    right_annihilator,
    units,
)
from .spec import RingSpec, build, matrix, product, quotient, table, upper_triangular, zmod
from .tables import ARITHMETIC_CAP, FULL_ANALYSIS_CAP, FiniteRing

__all__ = [
    "ARITHMETIC_CAP",
    "FULL_ANALYSIS_CAP",
    "FiniteRing",
    "IdealSet",
    "LEFT",
    "RIGHT",
    "RingSpec",
    "TWO_SIDED",
    "build",
    "generated_ideal",
    "ideal_intersection",
    "ideal_sum",
    "idempotents",
    "is_unit",
    "jacobson_radical",
    "left_annihilator",
    "matrix",
    "principal_left_ideal",
    "principal_right_ideal",
    "product",
    "quotient",
    "quotient_ring",
    "radical_quotient",
    "regular_witness",
    "right_annihilator",
    "table",
    "units",
    "upper_triangular",
    "zmod",
]
