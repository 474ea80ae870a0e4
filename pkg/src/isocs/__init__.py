"""Coherent states of the isotonic oscillator on a truncated Fock space.

Even/odd Barut-Girardello and Gazeau-Klauder states, their measures,
kernels, quantized observables and thermal distributions, with a claim
harness that checks printed closed forms against brute-force oracles.
"""

from .claims import CLAIMS, ClaimReport, RunConfig, run_claims
from .errors import (ConvergenceError, DivergentArgumentError, DivergentIntegralError, DomainError, IsocsError,
                     TruncationError)
from .fock import FockSpace, ModelParams, OperatorMatrix, energy, gamma_from_A, generator, wavefunction
from .kernels import idempotence_residual, kernel
from .measures import RadialMeasure, identity_resolution_residual, moment_check
from .quantize import Symbol, doot_claim_compare, toeplitz
from .specfun import hyp1f1, hyp1f1_parity_parts, hyp2f1, meijer_g20_12, mellin_moment
from .states import StateLabel, StateVector, bgcs_even, bgcs_odd, evolve, gkcs, overlap, pnd
from .thermal import ThermalParams, density, husimi_q, p_function, partition_function, thermal_moment

__all__ = [
    "CLAIMS", "ClaimReport", "RunConfig", "run_claims",
    "ConvergenceError", "DivergentArgumentError", "DivergentIntegralError", "DomainError", "IsocsError",
    "TruncationError",
    "FockSpace", "ModelParams", "OperatorMatrix", "energy", "gamma_from_A", "generator", "wavefunction",
    "idempotence_residual", "kernel",
    "RadialMeasure", "identity_resolution_residual", "moment_check",
    "Symbol", "doot_claim_compare", "toeplitz",
    "hyp1f1", "hyp1f1_parity_parts", "hyp2f1", "meijer_g20_12", "mellin_moment",
    "StateLabel", "StateVector", "bgcs_even", "bgcs_odd", "evolve", "gkcs", "overlap", "pnd",
    "ThermalParams", "density", "husimi_q", "p_function", "partition_function", "thermal_moment",
]
__version__ = "0.1.0"
