"""Independent eigenvalue check: Numerov integration with shooting.

The radial equation u'' = Q(r; E) u is integrated outward and inward on a
uniform grid and matched at an interior point.  Bisection runs on the
predicate "E lies above the target level", built from the total node count
and the sign of the log-derivative mismatch, which is monotone in the
Sturm-Liouville energy ordering.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, replace
from typing import Callable

import numpy as np

from . import kernels
from .coeffs import coefficients, effective_potential
from .model import Limit, PotentialParams, QuantumState, RadialGrid, SymmetrySpec, physical_potential
from .spectrum import NoBoundState, solve_energy

log = logging.getLogger(__name__)

QFunction = Callable[[np.ndarray, float], np.ndarray]


class BracketError(RuntimeError):
    """The energy bracket does not straddle the requested level."""


class WrongStateError(RuntimeError):
    """The converged solution has the wrong number of nodes."""


@dataclass(frozen=True)
class ShootingConfig:
    grid: RadialGrid
    match_point: float
    energy_bracket: tuple[float, float]
    node_target: int
    tol: float = 1e-10

    def __post_init__(self):
        if not self.grid.r_min < self.match_point < self.grid.r_max:
            raise ValueError("match point must lie strictly inside the grid")
        if not self.tol > 0:
            raise ValueError("tolerance must be positive")
        if self.grid.spacing != "uniform":
            raise ValueError("Numerov shooting needs a uniform grid")


def numerov_integrate(q_values, grid, direction: str = "outward", seed: float = 1e-20):
    """Solve u'' = q u on a uniform grid from one boundary.

    The boundary value is zero and the neighbouring point carries ``seed``.
    Growth beyond 1e200 is rescaled, so only ratios of the result are meaningful.
    """
    r = grid.values() if isinstance(grid, RadialGrid) else np.asarray(grid, dtype=float)
    h = np.diff(r)
    if len(r) < 3 or not np.allclose(h, h[0], rtol=1e-9, atol=0):
        raise ValueError("Numerov integration needs a uniform grid of at least three points")
    q = np.asarray(q_values, dtype=float)
    if direction == "outward":
        return kernels.numerov(q, h[0], 0.0, seed)
    if direction == "inward":
        return kernels.numerov(q, h[0], 0.0, seed, reverse=True)
    raise ValueError(f"direction must be 'outward' or 'inward', got {direction!r}")


@dataclass(frozen=True)
class _Shot:
    nodes: int
    mismatch: float
    u: np.ndarray


def _shoot(q: np.ndarray, h: float, m: int) -> _Shot:
    out = kernels.numerov(q, h, 0.0, 1e-20)
    inn = kernels.numerov(q, h, 0.0, 1e-20, reverse=True)
    n_out = kernels.count_sign_changes(out, 1, m + 1)
    n_in = kernels.count_sign_changes(inn, m, len(q) - 1)
    # u'(r_m) to O(h^4): central difference corrected with the Numerov weights
    wp, wm = 1.0 - h * h * q[m + 1] / 6.0, 1.0 - h * h * q[m - 1] / 6.0
    with np.errstate(divide="ignore", invalid="ignore"):
        l_out = (wp * out[m + 1] - wm * out[m - 1]) / (2 * h * out[m])
        l_in = (wp * inn[m + 1] - wm * inn[m - 1]) / (2 * h * inn[m])
    u = np.concatenate([out[:m + 1] / out[m], inn[m + 1:] / inn[m]]) if out[m] and inn[m] else out
    return _Shot(n_out + n_in, float(l_out - l_in), u)


def shoot_level(q_of_E: QFunction, r: np.ndarray, m: int, bracket: tuple[float, float],
                node_target: int, tol: float = 1e-10, max_iter: int = 200):
    """Bisect E in ``bracket`` for the level with ``node_target`` nodes.

    ``q_of_E(r, E)`` returns Q with u'' = Q u.  Returns (E, u) with u scaled to
    one at the match point.
    """
    h = r[1] - r[0]
    lo, hi = bracket

    def above(E):
        shot = _shoot(q_of_E(r, E), h, m)
        return (shot.nodes > node_target or (shot.nodes == node_target and shot.mismatch < 0)), shot

    # orientation of the Sturm ordering relative to physical E
    rising = np.mean(q_of_E(r[m:m + 1], hi) - q_of_E(r[m:m + 1], lo)) < 0
    a_lo, _ = above(lo)
    a_hi, _ = above(hi)
    if a_lo == a_hi:
        raise BracketError(f"bracket {bracket} does not contain level {node_target}")
    if rising != a_hi:
        log.debug("node ordering opposite to the local-potential estimate")
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        a_mid, _ = above(mid)
        if a_mid == a_lo:
            lo = mid
        else:
            hi = mid
        if abs(hi - lo) <= tol:
            break
    E = 0.5 * (lo + hi)
    shot = _shoot(q_of_E(r, E), h, m)
    nodes = kernels.count_sign_changes(np.where(np.abs(shot.u) > 1e-12 * np.max(np.abs(shot.u)),
                                                shot.u, 0.0))
    if nodes != node_target:
        raise WrongStateError(f"converged solution has {nodes} nodes, wanted {node_target}")
    return E, shot.u


def approximated_q(q: QuantumState, p: PotentialParams, s: SymmetrySpec) -> QFunction:
    """Q(r; E) = V_eff(r; E) - E_eff(E) from the solvable coefficient set."""
    def Q(r, E):
        c = coefficients(E, p, s, q)
        return effective_potential(r, c, p) - c.eff_energy
    return Q


def exact_q(q: QuantumState, p: PotentialParams, s: SymmetrySpec) -> QFunction:
    """Q(r; E) with the exact 1/r^2 barrier and the exact Yukawa-type tail.

    pseudospin: (k+H)(k+H-1)/r^2 + (M + E - Delta)(M - E + C_ps)
    spin:       (k+H)(k+H+1)/r^2 + (M + E - C_s)(M - E + Sigma)
    """
    prod = q.centrifugal_product(s.limit, s.H)

    def Q(r, E):
        pot = physical_potential(r, p, s)
        if s.limit is Limit.PSEUDOSPIN:
            return prod / r ** 2 + (s.M + E - pot) * (s.M - E + s.sym_const)
        return prod / r ** 2 + (s.M + E - s.sym_const) * (s.M - E + pot)
    return Q


def design_grid(Q: QFunction, E: float, alpha: float, decay: float = 45.0,
                points_per_unit: float = 12.0, min_points: int = 4000,
                max_points: int = 400_000) -> tuple[RadialGrid, float]:
    """Uniform grid extending ``decay`` WKB e-folds past both turning points.

    Returns the grid and the match point (minimum of Q inside the allowed region).
    """
    probe = np.geomspace(1e-4, 80.0 / alpha, 20001)
    qv = Q(probe, E)
    allowed = np.flatnonzero(qv < 0)
    if allowed.size == 0:
        raise NoBoundState(f"no classically allowed region at E={E}")
    i1, i2 = allowed[0], allowed[-1]
    kappa = np.sqrt(np.clip(qv, 0, None))
    seg = 0.5 * (kappa[1:] + kappa[:-1]) * np.diff(probe)
    # outward e-folds beyond r2, inward e-folds below r1
    out_acc = np.cumsum(seg[i2:])
    j2 = i2 + 1 + np.searchsorted(out_acc, decay)
    in_acc = np.cumsum(seg[:i1][::-1])
    j1 = i1 - 1 - np.searchsorted(in_acc, decay)
    r_min = probe[max(j1, 0)]
    r_max = probe[min(j2, len(probe) - 1)]
    qmax = np.max(np.abs(qv[max(j1, 0):min(j2, len(probe) - 1) + 1]))
    h = min(0.15 / math.sqrt(qmax), (r_max - r_min) / min_points)
    points = int(min(max((r_max - r_min) / h + 1, min_points), max_points))
    points = max(points, int((r_max - r_min) * points_per_unit))
    points = min(points, max_points)
    grid = RadialGrid(r_min, r_max, points)
    match = probe[i1 + int(np.argmin(qv[i1:i2 + 1]))]
    if not r_min < match < r_max:
        match = math.log(2.0) / alpha
    return grid, match


def _match_index(r: np.ndarray, match_point: float) -> int:
    m = int(np.searchsorted(r, match_point))
    return min(max(m, 2), len(r) - 3)


def default_config(q: QuantumState, p: PotentialParams, s: SymmetrySpec,
                   Q: QFunction | None = None, half_width: float = 0.05) -> ShootingConfig:
    """Bracket of +-``half_width`` around the closed-form energy and a designed grid."""
    try:
        centre = solve_energy(q, p, s).E
    except (NoBoundState, ArithmeticError):
        centre = None
    Q = Q or approximated_q(q, p, s)
    if centre is None:
        raise BracketError("no closed-form estimate to centre the bracket on")
    grid, match = design_grid(Q, centre, p.alpha)
    return ShootingConfig(grid, match, (centre - half_width, centre + half_width),
                          q.degree(s.limit))


def shooting_eigenvalue(q: QuantumState, p: PotentialParams, s: SymmetrySpec,
                        cfg: ShootingConfig | None = None, *, exact: bool = False) -> float:
    """Numerov-shooting energy of ``q``; ``exact=True`` uses the unapproximated equation."""
    Q = exact_q(q, p, s) if exact else approximated_q(q, p, s)
    cfg = cfg or default_config(q, p, s, Q)
    r = cfg.grid.values()
    E, _ = shoot_level(Q, r, _match_index(r, cfg.match_point), cfg.energy_bracket,
                       cfg.node_target, cfg.tol)
    return E


def shooting_solution(q: QuantumState, p: PotentialParams, s: SymmetrySpec,
                      cfg: ShootingConfig | None = None, *, exact: bool = False):
    """(E, r, u) with u the matched Numerov solution."""
    Q = exact_q(q, p, s) if exact else approximated_q(q, p, s)
    cfg = cfg or default_config(q, p, s, Q)
    r = cfg.grid.values()
    E, u = shoot_level(Q, r, _match_index(r, cfg.match_point), cfg.energy_bracket,
                       cfg.node_target, cfg.tol)
    return E, r, u


@dataclass(frozen=True)
class ApproximationReport:
    E_approx: float
    E_exact_centrifugal: float

    @property
    def gap(self) -> float:
        return self.E_exact_centrifugal - self.E_approx


def approximation_error_report(q: QuantumState, p: PotentialParams, s: SymmetrySpec,
                               cfg: ShootingConfig | None = None) -> ApproximationReport:
    """Energies with the solvable (approximated) and the exact radial equation."""
    cfg = cfg or default_config(q, p, s)
    e_approx = shooting_eigenvalue(q, p, s, cfg)
    Qx = exact_q(q, p, s)
    grid, match = design_grid(Qx, e_approx, p.alpha)
    cfg_x = replace(cfg, grid=grid, match_point=match)
    e_exact = shooting_eigenvalue(q, p, s, cfg_x, exact=True)
    return ApproximationReport(e_approx, e_exact)


__all__ = [
    "ApproximationReport", "BracketError", "ShootingConfig", "WrongStateError",
    "approximated_q", "approximation_error_report", "default_config", "design_grid",
    "exact_q", "numerov_integrate", "shoot_level", "shooting_eigenvalue", "shooting_solution",
]
