"""Exact polynomial oracle and brute-force verification sweeps."""
from .polynomial import (
    T,
    Polynomial,
    poly_partial,
    compose,
    random_rational,
    random_polynomial,
)
from .verify import (
    EvaluationContext,
    VerificationReport,
    SweepReport,
    differentiate,
    verify_composition,
    verify_product,
    random_signature,
    random_point,
    run_random_trials,
    signatures_up_to,
    sweep_multiplicities,
    sweep_paths,
    sweep_cumulants,
    print_summary,
)

__all__ = [
    'T',
    'Polynomial',
    'poly_partial',
    'compose',
    'random_rational',
    'random_polynomial',
    'EvaluationContext',
    'VerificationReport',
    'SweepReport',
    'differentiate',
    'verify_composition',
    'verify_product',
    'random_signature',
    'random_point',
    'run_random_trials',
    'signatures_up_to',
    'sweep_multiplicities',
    'sweep_paths',
    'sweep_cumulants',
    'print_summary',
]
