"""Effective-potential coefficients of the Schrodinger-like radial equation.

In every (limit, choice) combination the radial equation reduces to

    -u'' + (quad e^{-2ar} + lin e^{-ar} + cst) / (1 + (D/C) e^{-ar})^2 u = eff_energy u

with coefficients that are affine in the trial energy E and an effective
energy quadratic in E.  All functions accept scalar or array E.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .model import Choice, Limit, PotentialParams, QuantumState, SymmetrySpec


@dataclass(frozen=True)
class EffectiveCoefficients:
    quad: float
    lin: float
    cst: float
    eff_energy: float
    trial_E: float


def coeffs_pseudospin_first(E, p: PotentialParams, s: SymmetrySpec,
                            q: QuantumState) -> EffectiveCoefficients:
    M, Cps, V0, V1, a = s.M, s.sym_const, p.V0, p.V1, p.alpha
    A, B, C, D = p.A, p.B, p.C, p.D
    eta = (-M * V0 * B**2 / C**2 + V0 * E * B**2 / C**2 - V0 * Cps * B**2 / C**2
           + M * V1 * a * D / C - E * V1 * a * D / C + Cps * V1 * a * D / C)
    zeta = (-2 * A * B * V0 * M / C**2 + 2 * A * B * V0 * E / C**2
            - 2 * A * B * V0 * Cps / C**2 + M * V1 * a - E * V1 * a + Cps * V1 * a)
    sigma = (q.centrifugal_product(Limit.PSEUDOSPIN, s.H) * a**2
             - M * V0 * A**2 / C**2 + V0 * E * A**2 / C**2 - V0 * Cps * A**2 / C**2)
    eff = -M**2 - M * Cps + E**2 - E * Cps
    return EffectiveCoefficients(eta, zeta, sigma, eff, E)


def coeffs_spin_first(E, p: PotentialParams, s: SymmetrySpec,
                      q: QuantumState) -> EffectiveCoefficients:
    M, Cs, V0, V1, a = s.M, s.sym_const, p.V0, p.V1, p.alpha
    A, B, C, D = p.A, p.B, p.C, p.D
    eta = (M * V0 * B**2 / C**2 + V0 * E * B**2 / C**2 - V0 * Cs * B**2 / C**2
           - M * V1 * a * D / C - E * V1 * a * D / C + Cs * V1 * a * D / C)
    zeta = (2 * A * B * V0 * M / C**2 + 2 * A * B * V0 * E / C**2
            - 2 * A * B * V0 * Cs / C**2 - M * V1 * a - E * V1 * a + Cs * V1 * a)
    sigma = (q.centrifugal_product(Limit.SPIN, s.H) * a**2
             + M * V0 * A**2 / C**2 + V0 * E * A**2 / C**2 - V0 * Cs * A**2 / C**2)
    eff = -M**2 + M * Cs + E**2 - E * Cs
    return EffectiveCoefficients(eta, zeta, sigma, eff, E)


def coeffs_pseudospin_second(E, p: PotentialParams, s: SymmetrySpec,
                             q: QuantumState) -> EffectiveCoefficients:
    M, Cps, V0, V1, a = s.M, s.sym_const, p.V0, p.V1, p.alpha
    A, B, C, D = p.A, p.B, p.C, p.D
    if not s.squared_tail:
        return _unsquared_tail(E, p, s, q)
    mu = (-M * V0 * B**2 / C**2 + V0 * E * B**2 / C**2 - V0 * Cps * B**2 / C**2
          + M * V1 * a**2 - E * V1 * a**2 + Cps * V1 * a**2
          - 2 * M * V1 * a * D / C + 2 * E * V1 * a * D / C - 2 * Cps * V1 * a * D / C)
    lam = (-2 * A * B * V0 * M / C**2 + 2 * A * B * V0 * E / C**2
           - 2 * A * B * V0 * Cps / C**2 - 2 * M * V1 * a + 2 * E * V1 * a - 2 * Cps * V1 * a)
    chi = (q.centrifugal_product(Limit.PSEUDOSPIN, s.H) * a**2
           - M * V0 * A**2 / C**2 + V0 * E * A**2 / C**2 - V0 * Cps * A**2 / C**2)
    eff = -M**2 - M * Cps + E**2 - E * Cps - M * V1 + E * V1 - Cps * V1
    return EffectiveCoefficients(mu, lam, chi, eff, E)


def coeffs_spin_second(E, p: PotentialParams, s: SymmetrySpec,
                       q: QuantumState) -> EffectiveCoefficients:
    M, Cs, V0, V1, a = s.M, s.sym_const, p.V0, p.V1, p.alpha
    A, B, C, D = p.A, p.B, p.C, p.D
    if not s.squared_tail:
        return _unsquared_tail(E, p, s, q)
    mu = (V0 * E * B**2 / C**2 - E * V1 * a**2 + M * V0 * B**2 / C**2 - M * V1 * a**2
          - V0 * Cs * B**2 / C**2 + Cs * V1 * a**2
          + 2 * M * V1 * a * D / C + 2 * E * V1 * a * D / C - 2 * Cs * V1 * a * D / C)
    lam = (2 * A * B * V0 * M / C**2 + 2 * A * B * V0 * E / C**2
           - 2 * A * B * V0 * Cs / C**2 + 2 * M * V1 * a + 2 * E * V1 * a - 2 * Cs * V1 * a)
    chi = (q.centrifugal_product(Limit.SPIN, s.H) * a**2
           + M * V0 * A**2 / C**2 + V0 * E * A**2 / C**2 - V0 * Cs * A**2 / C**2)
    eff = E**2 + E * V1 - M**2 + M * V1 - E * Cs + M * Cs - Cs * V1
    return EffectiveCoefficients(mu, lam, chi, eff, E)


def _unsquared_tail(E, p, s, q):
    # Quasi-Yukawa tail -V1 (1 - e^{-ar}/r) without the square; the Mobius part is the
    # first-choice one with V1 = 0.
    x = (E - s.M - s.sym_const) if s.limit is Limit.PSEUDOSPIN else (s.M + E - s.sym_const)
    base = _FIRST[s.limit](E, _without_tail(p), s, q)
    k = p.ratio
    return EffectiveCoefficients(
        base.quad + p.V1 * p.alpha * k * x,
        base.lin + p.V1 * p.alpha * x,
        base.cst,
        base.eff_energy + p.V1 * x,
        E,
    )


def _without_tail(p: PotentialParams) -> PotentialParams:
    return PotentialParams(p.V0, 0.0, p.A, p.B, p.C, p.D, p.alpha)


_FIRST = {Limit.PSEUDOSPIN: coeffs_pseudospin_first, Limit.SPIN: coeffs_spin_first}

_DISPATCH = {
    (Limit.PSEUDOSPIN, Choice.FIRST): coeffs_pseudospin_first,
    (Limit.SPIN, Choice.FIRST): coeffs_spin_first,
    (Limit.PSEUDOSPIN, Choice.SECOND): coeffs_pseudospin_second,
    (Limit.SPIN, Choice.SECOND): coeffs_spin_second,
}


def coefficients(E, p: PotentialParams, s: SymmetrySpec, q: QuantumState) -> EffectiveCoefficients:
    """Dispatch on ``(s.limit, s.choice)``."""
    return _DISPATCH[(s.limit, s.choice)](E, p, s, q)


def effective_potential(r, c: EffectiveCoefficients, p: PotentialParams):
    x = -p.alpha * np.asarray(r, dtype=float)
    e = np.exp(x)
    den = (1.0 + p.ratio) + p.ratio * np.expm1(x)
    out = (c.quad * e * e + c.lin * e + c.cst) / den ** 2
    return float(out) if np.ndim(out) == 0 else out


__all__ = [
    "EffectiveCoefficients", "coefficients", "coeffs_pseudospin_first",
    "coeffs_pseudospin_second", "coeffs_spin_first", "coeffs_spin_second",
    "effective_potential",
]
