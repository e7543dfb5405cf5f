from .cyclo import CycloNumber
from .intpoly import (
    IntPolynomial,
    cyclotomic_polynomial,
    divisors,
    euler_phi,
    mobius,
    poly_exact_div,
    power_series,
)
from .laurent import BiLaurent, BiRational, UnitMismatchError, birational_eq, substitute_ybar_inverse
from .linalg import rank, rank_exact, rank_mod_p
from .multipoly import MultiPolynomial, fermat_relation, reduce_fermat

__all__ = [
    "BiLaurent",
    "BiRational",
    "CycloNumber",
    "IntPolynomial",
    "MultiPolynomial",
    "UnitMismatchError",
    "birational_eq",
    "cyclotomic_polynomial",
    "divisors",
    "euler_phi",
    "fermat_relation",
    "mobius",
    "poly_exact_div",
    "power_series",
    "rank",
    "rank_exact",
    "rank_mod_p",
    "reduce_fermat",
    "substitute_ybar_inverse",
]
