"""Dirac bound states for Mobius-square plus (quasi-)Yukawa potentials with a tensor term.

Energies come from a shape-invariant superpotential in the spin or pseudospin
limit; a Numerov shooting solver provides an independent check.
"""

__version__ = "0.1.0"

from .kernels import BACKEND
from .model import (Choice, DomainError, Limit, PotentialParams, QuantumState, RadialGrid,
                    SymmetrySpec, centrifugal_approx, delta_potential, inverse_r_approx,
                    physical_potential, sigma_potential, tensor_potential)
from .coeffs import EffectiveCoefficients, coefficients, effective_potential
from .susy import Branch, SuperpotentialParams, solve_superpotential
from .spectrum import (AmbiguousRoot, BoundState, NoBoundState, coulomb_trend_check,
                       deng_fan_map, doublet_partner, solve_energy, yukawa_reduction)
from .wavefn import WaveSpec, components, normalized_spec, wave_spec
from .oracle import approximation_error_report, shooting_eigenvalue
from .config import RunConfig, golden_config

__all__ = [
    "BACKEND", "AmbiguousRoot", "BoundState", "Branch", "Choice", "DomainError",
    "EffectiveCoefficients", "Limit", "NoBoundState", "PotentialParams", "QuantumState",
    "RadialGrid", "RunConfig", "SuperpotentialParams", "SymmetrySpec", "WaveSpec",
    "approximation_error_report", "centrifugal_approx", "coefficients", "components",
    "coulomb_trend_check", "delta_potential", "deng_fan_map", "doublet_partner",
    "effective_potential", "golden_config", "inverse_r_approx", "normalized_spec",
    "physical_potential", "shooting_eigenvalue", "sigma_potential", "solve_energy",
    "solve_superpotential", "tensor_potential", "wave_spec", "yukawa_reduction",
]
