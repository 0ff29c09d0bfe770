"""Generalised quadrangle codes: constructions, minimum distance and LRC metrics."""
from .codes import (
    LinearCode,
    MinWeightReport,
    classify_min_words,
    code_from_matrix,
    contains,
    gq_code,
    min_distance_bz,
    min_distance_exhaustive,
    min_weight_sweep,
)
from .egg import Egg, elementary_egg_from_oval, elementary_egg_from_ovoid, load_egg, verify_egg
from .gf import Field, field_create
from .gq import IncidenceStructure, build_classical, build_gq, build_T2star, build_TE, verify_partial_geometry
from .lrc import RepairProfile, check_bounds, repair_profile
from .sweep import BACKEND

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "Egg", "Field", "IncidenceStructure", "LinearCode", "MinWeightReport",
    "RepairProfile", "build_T2star", "build_TE", "build_classical", "build_gq",
    "check_bounds", "classify_min_words", "code_from_matrix", "contains",
    "elementary_egg_from_oval", "elementary_egg_from_ovoid", "field_create", "gq_code",
    "load_egg", "min_distance_bz", "min_distance_exhaustive", "min_weight_sweep",
    "repair_profile", "verify_egg", "verify_partial_geometry",
]
