"""Exact Hodge ideals of divisors over the rationals.

The main entry points are :func:`hodge_ideals` (plane curves, via log
resolution and differentiation), the closed-form calculators in
:mod:`hodgeideals.closed_forms`, and the projective checks in
:mod:`hodgeideals.projective`.
"""

from .closed_forms import (
    MonomialIdeal,
    OrdinaryQuery,
    diagonal_triviality_bound,
    ordinary_hodge_ideal,
    snc_hodge_ideal,
    symbolic_power_bound,
    triviality_threshold,
)
from .errors import (
    ArityError,
    CenterMismatchError,
    GroundFieldError,
    HodgeError,
    IterationCapError,
    NotPrimaryError,
    NotSquarefreeError,
    ParseError,
    UnknownVariableError,
)
from .jets import GeneratorSet, JetIdeal, from_generators
from .linalg import KERNEL_NAME
from .poly import Polynomial, parse
from .resolution import PlaneCurve, resolve, singular_points
from .surface import HodgeIdealFamily, hodge_ideals, verify_theorems
from .valuation import adjoint_ideal, multiplier_ideal_I0

__version__ = "0.1.0"

__all__ = [
    "ArityError",
    "CenterMismatchError",
    "GeneratorSet",
    "GroundFieldError",
    "HodgeError",
    "HodgeIdealFamily",
    "IterationCapError",
    "JetIdeal",
    "KERNEL_NAME",
    "MonomialIdeal",
    "NotPrimaryError",
    "NotSquarefreeError",
    "OrdinaryQuery",
    "ParseError",
    "PlaneCurve",
    "Polynomial",
    "UnknownVariableError",
    "adjoint_ideal",
    "diagonal_triviality_bound",
    "from_generators",
    "hodge_ideals",
    "multiplier_ideal_I0",
    "ordinary_hodge_ideal",
    "parse",
    "resolve",
    "singular_points",
    "snc_hodge_ideal",
    "symbolic_power_bound",
    "triviality_threshold",
    "verify_theorems",
]
