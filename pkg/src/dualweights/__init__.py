"""Regular systems of weights, their duals, and the graded rings attached to them."""

from .catalog import AnalysisRecord, analyze, build_catalog
from .duality import DualTypeData, classify, dual_of, dual_search, is_dual_type
from .errors import InvalidWeightsError, NotDualTypeError, NotRegularError, VerificationError
from .lattice import build_lattice, omega
from .orbifold import is_dual_pair, orbifold_poincare, principal_group, trivial_group
from .rings import exceptional_length, milnor_check, verify_theorem_i
from .weights import WeightSystem, enumerate_regular, exponent_data, is_regular, signature

__all__ = [
    "AnalysisRecord",
    "DualTypeData",
    "InvalidWeightsError",
    "NotDualTypeError",
    "NotRegularError",
    "VerificationError",
    "WeightSystem",
    "analyze",
    "build_catalog",
    "build_lattice",
    "classify",
    "dual_of",
    "dual_search",
    "enumerate_regular",
    "exceptional_length",
    "exponent_data",
    "is_dual_pair",
    "is_dual_type",
    "is_regular",
    "milnor_check",
    "omega",
    "orbifold_poincare",
    "principal_group",
    "signature",
    "trivial_group",
    "verify_theorem_i",
]
