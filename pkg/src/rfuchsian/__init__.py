"""Exact arithmetic of R-Fuchsian subgroups of Picard modular groups PU(1,2; O_K), K = Q(i sqrt(d))."""

from __future__ import annotations

from .errors import InvariantViolation
from .exactnum import Field, FieldElement, squarefree_delta
from .fuchsian import (
    FuchsianClass,
    Quaternion,
    TernaryForm,
    classify,
    commensurable,
    construct_delta,
    delta_algebra,
    embed_quaternion,
    enumerate_classes,
    natural_delta_algebra,
)
from .hermitian import HeisenbergPoint, MatK, ProjMatK, is_picard, is_unitary
from .rcircle import UnitarySymmetric, act, circle_data, make_Y_delta, reduce_to_delta, standard_infinite
from .symbols import QuaternionAlgebraQ, RamificationSet, hilbert_symbol, ramification_set

__version__ = "0.1.0"

__all__ = [
    "Field",
    "FieldElement",
    "FuchsianClass",
    "HeisenbergPoint",
    "InvariantViolation",
    "MatK",
    "ProjMatK",
    "Quaternion",
    "QuaternionAlgebraQ",
    "RamificationSet",
    "TernaryForm",
    "UnitarySymmetric",
    "act",
    "circle_data",
    "classify",
    "commensurable",
    "construct_delta",
    "delta_algebra",
    "embed_quaternion",
    "enumerate_classes",
    "hilbert_symbol",
    "is_picard",
    "is_unitary",
    "make_Y_delta",
    "natural_delta_algebra",
    "ramification_set",
    "reduce_to_delta",
    "squarefree_delta",
    "standard_infinite",
]
