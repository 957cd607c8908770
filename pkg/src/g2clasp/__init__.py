"""Exact verification of the G2 triple-clasp coefficient formulas.

The package builds the explicit coefficients as rational functions in
``q, A = q^a, B = q^b``, checks the 22 recursions they satisfy, the
zero-weight block, the clasp-conjecture product formula and the
quantum-dimension loop values, either symbolically or by exact evaluation at
seeded random rational points.
"""

from .coefficients import (
    CoeffKey,
    CoefficientTable,
    DegenerateWeight,
    ProbeBackend,
    SymbolicBackend,
    coeff,
    denominator_atoms,
    det_explicit,
    r00,
    specialize_coeff,
)
from .conjecture import (
    ExtremalCase,
    NotConstantSign,
    derive_sign,
    extremal_cases,
    product_formula,
    verify_conjecture,
    verify_qdim_loops,
)
from .exactalg import DivisionByZero, LaurentPoly, PoleAtPoint, RationalFn
from .qint import LinearWeightForm, qint_const, qlin
from .recursions import RECURSIONS, residual, verify, verify_all, verify_matrix
from .report import NUMERIC, SYMBOLIC, VerificationReport

__version__ = "0.1.0"

__all__ = [
    "CoeffKey",
    "CoefficientTable",
    "DegenerateWeight",
    "DivisionByZero",
    "ExtremalCase",
    "LaurentPoly",
    "LinearWeightForm",
    "NUMERIC",
    "NotConstantSign",
    "PoleAtPoint",
    "ProbeBackend",
    "RECURSIONS",
    "RationalFn",
    "SYMBOLIC",
    "SymbolicBackend",
    "VerificationReport",
    "coeff",
    "denominator_atoms",
    "derive_sign",
    "det_explicit",
    "extremal_cases",
    "product_formula",
    "qint_const",
    "qlin",
    "r00",
    "residual",
    "specialize_coeff",
    "verify",
    "verify_all",
    "verify_conjecture",
    "verify_matrix",
    "verify_qdim_loops",
]
