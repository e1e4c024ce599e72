import numpy as np
import pytest

from mobius_dirac.model import Limit, PotentialParams, QuantumState, SymmetrySpec
from mobius_dirac.spectrum import (AmbiguousRoot, NoBoundState, coulomb_trend_check,
                                   default_window, deng_fan_map, doublet_partner,
                                   eigenvalue_residual, find_roots, forbidden_energy,
                                   solve_energy, yukawa_reduction)
from mobius_dirac.susy import Branch
from mobius_dirac.tables import reference_energies


@pytest.mark.parametrize("table", [1, 2, 3, 4])
def test_reproduces_table(golden, table):
    cfg = golden[table]
    p = cfg.potential()
    for (n, kappa, H), E in reference_energies(table).items():
        bs = solve_energy(QuantumState(n, kappa), p, cfg.symmetry(H))
        assert bs.E == pytest.approx(E, abs=1e-6), (n, kappa, H)
        assert abs(bs.residual_at_E) < 1e-8


@pytest.mark.parametrize("table,n,kappa,H,E", [
    (1, 1, -1, 0.0, -5.009375979), (3, 1, -1, 0.0, -5.106436115), (2, 2, -5, 0.5, 5.013363873),
])
def test_anchor_values(solve, table, n, kappa, H, E):
    assert solve(table, n, kappa, H).E == pytest.approx(E, abs=1e-6)


@pytest.mark.parametrize("table", [1, 2, 3, 4])
def test_residual_changes_sign_across_tabulated_roots(golden, table):
    cfg = golden[table]
    p = cfg.potential()
    for (n, kappa, H), E in reference_energies(table).items():
        q, s = QuantumState(n, kappa), cfg.symmetry(H)
        lo, hi = eigenvalue_residual(np.array([E - 1e-4, E + 1e-4]), q, p, s, Branch.MINUS)
        assert lo * hi < 0


@pytest.mark.parametrize("table", [1, 3])
def test_pseudospin_energies_are_negative(golden, table):
    assert all(E < 0 for E in reference_energies(table).values())
    cfg = golden[table]
    for q in cfg.states():
        assert solve_energy(q, cfg.potential(), cfg.symmetry(0.0)).E < 0


def test_monotone_in_n(solve):
    for kappa in (-1, -2, -3):
        e = [solve(1, n, kappa).E for n in (1, 2, 3)]
        assert e[0] > e[1] > e[2]
    for kappa in (-2, -3):
        e = [solve(2, n, kappa).E for n in (0, 1, 2)]
        assert e[0] < e[1] < e[2]


def test_doublet_partner_mapping():
    ps, sp = SymmetrySpec("pseudospin"), SymmetrySpec("spin")
    assert doublet_partner(QuantumState(1, -1), ps) == QuantumState(0, 2)
    assert doublet_partner(QuantumState(3, -4), ps) == QuantumState(2, 5)
    assert doublet_partner(QuantumState(0, 2), ps) == QuantumState(1, -1)
    assert doublet_partner(QuantumState(0, -2), sp) == QuantumState(0, 1)
    assert doublet_partner(QuantumState(0, 1), sp) == QuantumState(0, -2)
    for bad, s in [(QuantumState(0, -1), ps), (QuantumState(0, 1), ps), (QuantumState(2, -1), sp)]:
        with pytest.raises(ValueError):
            doublet_partner(bad, s)


@pytest.mark.parametrize("table", [1, 2, 3, 4])
def test_doublets(golden, table):
    cfg = golden[table]
    p = cfg.potential()
    for H, check in [(0.0, lambda d: d <= 1e-9), (0.5, lambda d: d >= 1e-5)]:
        s = cfg.symmetry(H)
        for n in cfg.n_list:
            for kappa in cfg.kappa_list:
                q = QuantumState(n, kappa)
                d = abs(solve_energy(q, p, s).E - solve_energy(doublet_partner(q, s), p, s).E)
                assert check(d), (n, kappa, H, d)


def test_windows_and_forbidden_energy():
    assert default_window(SymmetrySpec("pseudospin")) == (-7.0, -3.0)
    assert default_window(SymmetrySpec("spin")) == (3.0, 7.0)
    assert forbidden_energy(SymmetrySpec("pseudospin", sym_const=0.1)) == pytest.approx(5.1)
    assert forbidden_energy(SymmetrySpec("spin", sym_const=0.1)) == pytest.approx(-4.9)


def test_explicit_branch(solve):
    bs = solve(1, 1, -1)
    q, p, s = bs.state, bs.params, bs.spec
    assert solve_energy(q, p, s, branch="minus").E == pytest.approx(bs.E, abs=1e-12)
    with pytest.raises(NoBoundState):
        solve_energy(q, p, s, branch="plus")


def test_wide_window_keeps_single_physical_root(solve):
    bs = solve(2, 0, -2)
    wide = solve_energy(bs.state, bs.params, bs.spec, window=(-20.0, 20.0))
    assert wide.E == pytest.approx(bs.E, abs=1e-12)


def test_ambiguity_is_reported(monkeypatch, solve):
    import mobius_dirac.spectrum as spectrum

    bs = solve(1, 1, -1)
    monkeypatch.setattr(spectrum, "find_roots", lambda *a, **k: [bs.E, bs.E - 0.01])
    monkeypatch.setattr(spectrum, "is_normalizable", lambda *a, **k: True)
    with pytest.raises(AmbiguousRoot) as info:
        solve_energy(bs.state, bs.params, bs.spec, branch="minus")
    assert len(info.value.candidates) == 2


def test_free_field_has_no_bound_state():
    p = PotentialParams(V0=0.0, V1=0.0)
    for limit in Limit:
        with pytest.raises(NoBoundState):
            solve_energy(QuantumState(0, -1 if limit is Limit.PSEUDOSPIN else -2), p,
                         SymmetrySpec(limit))


def test_deng_fan_map():
    rng = np.random.default_rng(3)
    for De, b in zip(rng.uniform(0.1, 5, 10), rng.uniform(-0.9, 4, 10)):
        p = deng_fan_map(De, b)
        assert p.V0 * p.A ** 2 == De
        assert p.V0 * p.A * p.B == -De * (1 + b)
        assert p.V0 * p.B ** 2 == De * (1 + b) ** 2
    p = deng_fan_map(1.0, 1.0)
    assert (p.V0, p.A, p.B, p.C, p.D) == (1.0, 1.0, -2.0, 1.0, -1.0)
    assert deng_fan_map(1.0, 0.0).B == -1.0
    with pytest.raises(ValueError):
        deng_fan_map(-1.0, 0.5)


def test_yukawa_reduction():
    p = PotentialParams(V0=0.3, V1=0.2, A=2.0)
    red = yukawa_reduction(p)
    assert red.V0 == 0 and (red.V1, red.A, red.B, red.C, red.D, red.alpha) == (0.2, 2.0, -2, 1, -1, 0.01)
    assert yukawa_reduction(red) == red


def test_yukawa_energies_vary_monotonically_with_strength():
    s = SymmetrySpec("spin")
    q = QuantumState(0, -2)
    energies = [solve_energy(q, yukawa_reduction(PotentialParams(V1=v)), s).E
                for v in np.linspace(0.05, 0.3, 6)]
    assert np.all(np.diff(energies) < 0)


def test_coulomb_trend():
    p = PotentialParams(V0=0.0, V1=0.1, alpha=0.04)
    s = SymmetrySpec("spin")
    q = QuantumState(0, -2)
    alphas = [0.04 / 2 ** k for k in range(6)]
    E = coulomb_trend_check(p, s, q, alphas)
    d = np.abs(np.diff(E))
    assert np.all(d[1:] < d[:-1])
    same = coulomb_trend_check(p, s, q, [0.01, 0.01])
    assert same[0] == same[1]
