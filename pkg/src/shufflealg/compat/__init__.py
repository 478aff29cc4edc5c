"""Shuffle-algebra engine: classes, verdicts, closed forms and claim catalog."""

from .check import CompatVerdict, check_compatibility
from .classes import ClassTable, StructureConstants, class_of, classes, dimension, structure_constants
from .equivs import equivalence_check, equivalence_witness
from .gfs import verify_gf_identity
from .homs import phi_eval, verify_homomorphism
from .spans import verify_span_pk, verify_span_pkdes

__all__ = [
    "ClassTable", "CompatVerdict", "StructureConstants", "check_compatibility",
    "class_of", "classes", "dimension", "equivalence_check", "equivalence_witness",
    "phi_eval", "structure_constants", "verify_gf_identity", "verify_homomorphism",
    "verify_span_pk", "verify_span_pkdes",
]
