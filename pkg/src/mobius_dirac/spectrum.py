"""Energy quantization: self-consistency residual, root extraction, special cases."""

from __future__ import annotations

import logging
from dataclasses import dataclass, replace
from typing import Sequence

import numpy as np
from scipy.optimize import brentq

from .coeffs import coefficients
from .model import Limit, PotentialParams, QuantumState, SymmetrySpec
from .susy import Branch, closed_form_effective_energy, f_roots, shifted, w_of

log = logging.getLogger(__name__)

SCAN_STEP = 1e-3
ROOT_XTOL = 1e-12


class NoBoundState(RuntimeError):
    """No physical sign change of the residual inside the search window."""


class AmbiguousRoot(RuntimeError):
    """More than one physical root in the window."""

    def __init__(self, message: str, candidates: Sequence[float]):
        super().__init__(f"{message}: {', '.join(f'{c:.10f}' for c in candidates)}")
        self.candidates = list(candidates)


class ForbiddenEnergy(ValueError):
    """Energy at which the Dirac coupling denominator vanishes."""


@dataclass(frozen=True)
class BoundState:
    E: float
    state: QuantumState
    spec: SymmetrySpec
    params: PotentialParams
    branch: Branch
    residual_at_E: float

    @property
    def degree(self) -> int:
        return self.state.degree(self.spec.limit)


def eigenvalue_residual(E, q: QuantumState, p: PotentialParams, s: SymmetrySpec,
                        branch: Branch = Branch.MINUS):
    """Effective energy at E minus the closed-form shape-invariant level of degree n.

    Coefficients are re-evaluated at every trial E.  Where the superpotential
    is not real the result is nan.  Accepts scalar or array E.
    """
    c = coefficients(np.asarray(E, dtype=float), p, s, q)
    out = c.eff_energy - closed_form_effective_energy(q.degree(s.limit), c, p, branch)
    return float(out) if np.ndim(out) == 0 else out


def default_window(s: SymmetrySpec) -> tuple[float, float]:
    if s.limit is Limit.PSEUDOSPIN:
        return (-s.M - 2.0, -s.M + 2.0)
    return (s.M - 2.0, s.M + 2.0)


def forbidden_energy(s: SymmetrySpec) -> float:
    """Energy where the partner-component denominator vanishes."""
    if s.limit is Limit.PSEUDOSPIN:
        return s.M + s.sym_const
    return -s.M + s.sym_const


def wave_exponents(E: float, q: QuantumState, p: PotentialParams, s: SymmetrySpec,
                   branch: Branch) -> tuple[float, float]:
    """(exp1, exp2) of the closed-form state for this branch at energy E.

    exp1 = w(a_n)/alpha governs the decay at infinity, exp2 = a_0/(alpha D/C)
    the vanishing of the Mobius factor.
    """
    c = coefficients(E, p, s, q)
    a0 = float(f_roots(c, p, branch))
    an = shifted(a0, q.degree(s.limit), p)
    if an == 0 or not np.isfinite(a0):
        return float("nan"), float("nan")
    return float(w_of(an, c, p)) / p.alpha, a0 / (p.alpha * p.ratio)


def is_normalizable(E: float, q: QuantumState, p: PotentialParams, s: SymmetrySpec,
                    branch: Branch) -> bool:
    exp1, exp2 = wave_exponents(E, q, p, s, branch)
    return bool(exp1 > 0 and exp2 > 0.5)


def _in_physical_window(E: float, s: SymmetrySpec) -> bool:
    if s.limit is Limit.PSEUDOSPIN:
        return E < s.M + s.sym_const
    return s.M + E - s.sym_const > 0


def find_roots(q: QuantumState, p: PotentialParams, s: SymmetrySpec, branch: Branch,
               window: tuple[float, float] | None = None,
               step: float = SCAN_STEP) -> list[float]:
    """All sign changes of the residual on a scan grid, refined with Brent's method."""
    lo, hi = window or default_window(s)
    n_pts = max(int(np.ceil((hi - lo) / step)) + 1, 3)
    grid = np.linspace(lo, hi, n_pts)
    forbidden = forbidden_energy(s)
    grid = grid[grid != forbidden]
    res = eigenvalue_residual(grid, q, p, s, branch)
    ok = np.isfinite(res[:-1]) & np.isfinite(res[1:]) & (np.sign(res[:-1]) * np.sign(res[1:]) <= 0)
    roots = []
    f = lambda x: eigenvalue_residual(x, q, p, s, branch)
    for i in np.flatnonzero(ok):
        a, b = grid[i], grid[i + 1]
        if res[i] == 0:
            root = a
        elif res[i + 1] == 0:
            continue
        else:
            root = brentq(f, a, b, xtol=ROOT_XTOL, rtol=4 * np.finfo(float).eps, maxiter=200)
        # reject sign flips across the pole of w(a_n)
        scale = 1.0 + abs(res[i]) + abs(res[i + 1])
        if abs(f(root)) <= 1e-8 * scale:
            roots.append(float(root))
    return roots


def solve_energy(q: QuantumState, p: PotentialParams, s: SymmetrySpec,
                 window: tuple[float, float] | None = None,
                 branch: Branch | str = "auto") -> BoundState:
    """Physical eigenvalue of state ``q``.

    ``branch="auto"`` tries both roots of the superpotential quadratic and keeps
    the ones whose closed-form state is normalizable.
    """
    window = window or default_window(s)
    forbidden = forbidden_energy(s)
    if window[0] < forbidden < window[1]:
        log.debug("window %s contains the forbidden energy %s; it is skipped", window, forbidden)
    branches = [Branch.MINUS, Branch.PLUS] if branch == "auto" else [Branch(branch)]
    found: list[tuple[float, Branch]] = []
    for br in branches:
        for E in find_roots(q, p, s, br, window):
            if _in_physical_window(E, s) and is_normalizable(E, q, p, s, br):
                found.append((E, br))
    if not found:
        raise NoBoundState(f"no physical root for {q.label} (n={q.n}, kappa={q.kappa}) in {window}")
    distinct = sorted({round(E, 9) for E, _ in found})
    if len(distinct) > 1:
        raise AmbiguousRoot(f"several physical roots for {q.label}", [E for E, _ in found])
    E, br = found[0]
    return BoundState(E, q, s, p, br, eigenvalue_residual(E, q, p, s, br))


def doublet_partner(q: QuantumState, s: SymmetrySpec) -> QuantumState:
    """Other member of the (pseudo)spin doublet.

    pseudospin: (n, -l~) <-> (n-1, l~+1); spin: (n, -l-1) <-> (n, l).
    """
    if s.limit is Limit.PSEUDOSPIN:
        if q.kappa < 0:
            if q.n == 0:
                raise ValueError(f"{q.label} has no pseudospin partner (n - 1 < 0)")
            return QuantumState(q.n - 1, 1 - q.kappa)
        if q.kappa == 1:
            raise ValueError("kappa = 1 (l~ = 0) is a pseudospin singlet")
        return QuantumState(q.n + 1, 1 - q.kappa)
    if q.kappa == -1:
        raise ValueError("kappa = -1 (l = 0) is a spin singlet")
    return QuantumState(q.n, -q.kappa - 1)


def deng_fan_map(De: float, b: float) -> PotentialParams:
    """Mobius-square parameters equivalent to the Deng-Fan potential (A = 1 gauge)."""
    if not De > 0:
        raise ValueError("De must be positive")
    if not b > -1:
        raise ValueError("b must exceed -1")
    p = PotentialParams(V0=De, V1=0.0, A=1.0, B=-(1.0 + b), C=1.0, D=-1.0)
    return p


def yukawa_reduction(p: PotentialParams) -> PotentialParams:
    """Drop the Mobius-square part (V0 = 0), leaving the pure Yukawa-type tail."""
    return replace(p, V0=0.0)


def coulomb_trend_check(p: PotentialParams, s: SymmetrySpec, q: QuantumState,
                        alpha_sequence: Sequence[float],
                        window: tuple[float, float] | None = None) -> list[float]:
    """Energies along a sequence of screening parameters (Coulomb-like limit as alpha -> 0)."""
    return [solve_energy(q, replace(p, alpha=a), s, window).E for a in alpha_sequence]


__all__ = [
    "AmbiguousRoot", "BoundState", "ForbiddenEnergy", "NoBoundState", "coulomb_trend_check",
    "default_window", "deng_fan_map", "doublet_partner", "eigenvalue_residual", "find_roots",
    "forbidden_energy", "is_normalizable", "solve_energy", "wave_exponents", "yukawa_reduction",
]
