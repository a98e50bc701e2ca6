"""Univariate sumcheck protocols as simulated polynomial IOPs."""
from .constraint import BUILTIN, Constraint, get_constraint, line_components
from .field import F17, FIELDS, GOLDILOCKS, Field, UnsupportedDomainError
from .piop import Attack, Metrics, Oracle, Transcript, VirtualOracle
from .poly import (EvaluationTable, Polynomial, crt_recombine, even_odd_split, kappa_eval, mlex_eval,
                   mlin_eval, ntt_forward, ntt_inverse, rem_cyclic, reverse_coefficients,
                   square_nonsquare_split, unex)
from .protocols import RUNNERS, SumInstance, expected_costs, random_instance, run

__all__ = [
    "BUILTIN", "Constraint", "get_constraint", "line_components",
    "F17", "FIELDS", "GOLDILOCKS", "Field", "UnsupportedDomainError",
    "Attack", "Metrics", "Oracle", "Transcript", "VirtualOracle",
    "EvaluationTable", "Polynomial", "crt_recombine", "even_odd_split", "kappa_eval", "mlex_eval",
    "mlin_eval", "ntt_forward", "ntt_inverse", "rem_cyclic", "reverse_coefficients",
    "square_nonsquare_split", "unex",
    "RUNNERS", "SumInstance", "expected_costs", "random_instance", "run",
]
