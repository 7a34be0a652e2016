"""
Coulomb Zeros Package

McMahon-type asymptotic expansions for the large zeros of the Coulomb wave
functions F, G and their derivatives, with an independent ODE oracle used to
refine and index-verify the approximations.
"""

from .errors import (
    CoulombZerosError,
    DomainError,
    GuessTooFarError,
    IndexTooSmallError,
    IndexVerificationError,
    NumericalError,
)
from .mcmahon import Expansion, abramowitz_iterate, derive_eps, expand, mcmahon_zero, negative_axis_zero, solve_rho0
from .models import Kind, Params
from .oracle import CoulombState, evaluate
from .refiner import ZeroRecord, min_n_for_accuracy, refine, verify_index, zero_record

__version__ = "0.1.0"

__all__ = [
    "CoulombState",
    "CoulombZerosError",
    "DomainError",
    "Expansion",
    "GuessTooFarError",
    "IndexTooSmallError",
    "IndexVerificationError",
    "Kind",
    "NumericalError",
    "Params",
    "ZeroRecord",
    "abramowitz_iterate",
    "derive_eps",
    "evaluate",
    "expand",
    "mcmahon_zero",
    "min_n_for_accuracy",
    "negative_axis_zero",
    "refine",
    "solve_rho0",
    "verify_index",
    "zero_record",
]
