import pytest

from mobius_dirac import QuantumState, golden_config, solve_energy


@pytest.fixture(scope="session")
def golden():
    return {t: golden_config(t) for t in (1, 2, 3, 4)}


@pytest.fixture(scope="session")
def solve(golden):
    """solve(table, n, kappa, H) with memoization across the session."""
    cache = {}

    def _solve(table, n, kappa, H=0.0):
        key = (table, n, kappa, H)
        if key not in cache:
            cfg = golden[table]
            cache[key] = solve_energy(QuantumState(n, kappa), cfg.potential(), cfg.symmetry(H))
        return cache[key]

    return _solve
