"""Verification suites behind ``mobius-dirac verify``.

Each suite returns a list of :class:`Check` results; a suite passes when all
of its checks pass.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .coeffs import coefficients, effective_potential
from .config import RunConfig, golden_config
from .model import QuantumState, RadialGrid
from .oracle import shooting_eigenvalue
from .spectrum import BoundState, NoBoundState, AmbiguousRoot, doublet_partner, solve_energy
from .susy import (Branch, partner_potentials, riccati_residual, shape_invariance_remainders,
                   shifted, solve_superpotential, superpotential_at)
from .tables import TABLES, reference_energies

TABLE_TOL = 1e-6
DEGENERATE_TOL = 1e-9
SPLIT_MIN = 1e-5
ORACLE_TOL = 1e-4
RICCATI_TOL = 1e-8
SHAPE_TOL = 1e-8
# V_+ and V_- both grow like 1/r^2 at the Mobius pole while their difference is
# O(0.05); at r = 1e-3 fm that is ~1e10 against 1e-19 extended-precision
# rounding.  Starting at 0.1 fm keeps the cancellation well below tolerance.
SHAPE_GRID = RadialGrid(r_min=0.1, r_max=250.0, points=8000)


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    defect: float
    tol: float
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f"  {self.detail}" if self.detail else ""
        return f"{status} {self.name}: defect={self.defect:.3e} tol={self.tol:.0e}{extra}"


def _configs(cfg: RunConfig | None) -> list[RunConfig]:
    return [cfg] if cfg is not None else [golden_config(t) for t in (1, 2, 3, 4)]


def solve_all(cfg: RunConfig) -> dict[tuple[int, int, float], BoundState]:
    p = cfg.potential()
    out = {}
    for H in cfg.H_list:
        s = cfg.symmetry(H)
        for q in cfg.states():
            out[(q.n, q.kappa, H)] = solve_energy(q, p, s, branch=cfg.branch)
    return out


def check_tables(cfg: RunConfig | None = None) -> list[Check]:
    checks = []
    for c in _configs(cfg):
        if c.table is None:
            raise ValueError("the tables suite needs a config with a 'table' key")
        ref = reference_energies(c.table)
        p = c.potential()
        worst, bad = 0.0, []
        for (n, kappa, H), e_ref in sorted(ref.items()):
            try:
                E = solve_energy(QuantumState(n, kappa), p, c.symmetry(H), branch=c.branch).E
            except (NoBoundState, AmbiguousRoot) as exc:
                bad.append(f"({n},{kappa},H={H}): {exc}")
                worst = float("inf")
                continue
            d = abs(E - e_ref)
            worst = max(worst, d)
            if d > TABLE_TOL:
                bad.append(f"({n},{kappa},H={H}): {E:.10f} vs {e_ref:.10f}")
        detail = f"{len(ref)} entries" + ("; " + "; ".join(bad) if bad else "")
        checks.append(Check(f"table {c.table}", not bad, worst, TABLE_TOL, detail))
    return checks


def check_degeneracy(cfg: RunConfig | None = None) -> list[Check]:
    checks = []
    for c in _configs(cfg):
        p = c.potential()
        tag = f"table {c.table}" if c.table else "config"
        for H in c.H_list:
            s = c.symmetry(H)
            diffs = []
            for n in c.n_list:
                for k in c.kappa_list:
                    q = QuantumState(n, k)
                    try:
                        partner = doublet_partner(q, s)
                    except ValueError:
                        continue
                    e1 = solve_energy(q, p, s, branch=c.branch).E
                    e2 = solve_energy(partner, p, s, branch=c.branch).E
                    diffs.append(abs(e1 - e2))
            if not diffs:
                continue
            if H == 0:
                worst = max(diffs)
                checks.append(Check(f"{tag} doublets degenerate (H=0)", worst <= DEGENERATE_TOL,
                                    worst, DEGENERATE_TOL, f"{len(diffs)} pairs"))
            else:
                least = min(diffs)
                checks.append(Check(f"{tag} doublets split (H={H:g})", least >= SPLIT_MIN, least,
                                    SPLIT_MIN, f"{len(diffs)} pairs, intentionally split"))
    return checks


def riccati_defect(bs: BoundState, grid: np.ndarray) -> tuple[float, float]:
    """(residual, allowed) for the ground superpotential at the converged energy."""
    c = coefficients(bs.E, bs.params, bs.spec, bs.state)
    sp = solve_superpotential(c, bs.params, bs.branch)
    res = riccati_residual(sp, c, bs.params, grid)
    allowed = RICCATI_TOL * (1.0 + float(np.max(np.abs(effective_potential(grid, c, bs.params)))))
    return res, allowed


def check_riccati(cfg: RunConfig | None = None, grid: RadialGrid | None = None) -> list[Check]:
    r = (grid or RadialGrid()).values()
    checks = []
    for c in _configs(cfg):
        worst_ratio, worst = 0.0, 0.0
        states = solve_all(c)
        for bs in states.values():
            res, allowed = riccati_defect(bs, r)
            if res / allowed > worst_ratio:
                worst_ratio, worst = res / allowed, res
        tag = f"table {c.table}" if c.table else "config"
        checks.append(Check(f"{tag} Riccati identity", worst_ratio <= 1.0, worst,
                            RICCATI_TOL, f"{len(states)} states, worst defect/allowed={worst_ratio:.2e}"))
    return checks


def shape_invariance_defects(bs: BoundState, grid: np.ndarray, k_max: int = 3):
    """[(k, relative stdev, |mean - R(a_{k+1})| relative)] for k = 0..k_max."""
    c = coefficients(bs.E, bs.params, bs.spec, bs.state)
    a0 = solve_superpotential(c, bs.params, bs.branch).f
    R = shape_invariance_remainders(a0, c, bs.params, k_max + 1)
    rows = []
    for k in range(k_max + 1):
        plus, _ = partner_potentials(superpotential_at(shifted(a0, k, bs.params), c, bs.params),
                                     bs.params, grid, np.longdouble)
        _, minus = partner_potentials(superpotential_at(shifted(a0, k + 1, bs.params), c,
                                                        bs.params), bs.params, grid,
                                          np.longdouble)
        diff = plus - minus
        mean = float(np.mean(diff))
        rows.append((k, float(np.std(diff) / abs(mean)), abs(mean - R[k]) / abs(R[k])))
    return rows


def check_shape_invariance(cfg: RunConfig | None = None) -> list[Check]:
    c = cfg or golden_config(1)
    r = SHAPE_GRID.values()
    q = c.states()[0]
    bs = solve_energy(q, c.potential(), c.symmetry(c.H_list[0]), branch=c.branch)
    checks = []
    for k, rel_std, rel_r in shape_invariance_defects(bs, r):
        defect = max(rel_std, rel_r)
        checks.append(Check(f"shape invariance k={k} ({q.label})", defect <= SHAPE_TOL, defect,
                            SHAPE_TOL, f"rel stdev={rel_std:.2e}, |mean-R|/R={rel_r:.2e}"))
    return checks


def spot_states(table: int) -> list[tuple[int, int]]:
    rows = TABLES[table]
    return [rows[0][0][:2], rows[-1][0][:2]]


def check_oracle(cfg: RunConfig | None = None) -> list[Check]:
    checks = []
    for c in _configs(cfg):
        p = c.potential()
        pairs = spot_states(c.table) if c.table else [(q.n, q.kappa) for q in c.states()]
        for n, kappa in pairs:
            for H in c.H_list:
                q, s = QuantumState(n, kappa), c.symmetry(H)
                closed = solve_energy(q, p, s, branch=c.branch).E
                shoot = shooting_eigenvalue(q, p, s)
                d = abs(closed - shoot)
                tag = f"table {c.table}" if c.table else "config"
                checks.append(Check(f"{tag} {q.label} H={H:g} closed vs shooting", d <= ORACLE_TOL,
                                    d, ORACLE_TOL, f"closed={closed:.10f} shoot={shoot:.10f}"))
    return checks


SUITES = {
    "tables": check_tables,
    "riccati": check_riccati,
    "shape-invariance": check_shape_invariance,
    "oracle": check_oracle,
    "degeneracy": check_degeneracy,
}
