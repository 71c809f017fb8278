"""Entropy and divergence of integers and of ideals in number fields."""

from .arith import Factorization, euler_phi, factorize, is_prime, mult_order, valuation
from .cubic import CubicField, classify_prime, covered_pair_check, cross_check, dedekind_oracle
from .cyclotomic import (
    CyclotomicGeneratorSpec,
    ideal_of_generator,
    lambda_shift_gap,
    splitting_type,
)
from .entropy import (
    ExponentProfile,
    ProbabilityVector,
    integer_divergence,
    integer_entropy,
    kl_divergence,
    shannon_entropy,
)
from .errors import NumentError
from .ideals import IdealFactorization, ideal_divergence, ideal_entropy, max_entropy_witness
from .search import divergence_zero_scan, entropy_gap, min_r_negative, scan_system

__all__ = [
    "CubicField",
    "CyclotomicGeneratorSpec",
    "ExponentProfile",
    "Factorization",
    "IdealFactorization",
    "NumentError",
    "ProbabilityVector",
    "classify_prime",
    "covered_pair_check",
    "cross_check",
    "dedekind_oracle",
    "divergence_zero_scan",
    "entropy_gap",
    "euler_phi",
    "factorize",
    "ideal_divergence",
    "ideal_entropy",
    "ideal_of_generator",
    "integer_divergence",
    "integer_entropy",
    "is_prime",
    "kl_divergence",
    "lambda_shift_gap",
    "max_entropy_witness",
    "min_r_negative",
    "mult_order",
    "scan_system",
    "shannon_entropy",
    "splitting_type",
    "valuation",
]
