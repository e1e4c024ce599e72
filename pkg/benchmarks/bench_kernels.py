"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import os
import subprocess
import sys
import timeit

import numpy as np

from mobius_dirac import kernels
from mobius_dirac._ext import _kernels_py

try:
    from mobius_dirac._ext import _kernels as _compiled
except ImportError:
    _compiled = None


def _cases(n_points: int):
    r = np.linspace(1e-3, 250.0, n_points)
    q = 0.5 - 2.0 / (1.0 + r)
    x = np.linspace(-1.0, 1.0, n_points)
    h = r[1] - r[0]
    u = np.sin(r)
    return {
        "numerov": lambda impl: impl.numerov(q, h, 0.0, 1e-20, False),
        "count_sign_changes": lambda impl: impl.count_sign_changes(u, 0, len(u)),
        "jacobi(n=6)": lambda impl: impl.jacobi(6, 1.3, 0.7, x),
    }


def run(repeat: int = 5, n_points: int = 20000) -> list[tuple[str, float, float]]:
    rows = []
    for name, call in _cases(n_points).items():
        t_py = min(timeit.repeat(lambda: call(_kernels_py), number=1, repeat=repeat))
        t_c = (min(timeit.repeat(lambda: call(_compiled), number=1, repeat=repeat))
               if _compiled is not None else float("nan"))
        rows.append((name, t_py, t_c))
    return rows


_SHOOT = (
    "import time; from mobius_dirac import BACKEND, golden_config, QuantumState;"
    "from mobius_dirac.oracle import shooting_eigenvalue;"
    "c = golden_config(1); t = time.perf_counter();"
    "shooting_eigenvalue(QuantumState(1, -1), c.potential(), c.symmetry(0.0));"
    "print(BACKEND, time.perf_counter() - t)"
)


def shooting(pure: bool) -> tuple[str, float]:
    """Full Numerov shooting solve in a fresh interpreter."""
    env = dict(os.environ, MOBIUS_DIRAC_PURE="1" if pure else "0")
    out = subprocess.run([sys.executable, "-c", _SHOOT], env=env, capture_output=True,
                         text=True, check=True).stdout.split()
    return out[0], float(out[1])


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--points", type=int, default=20000)
    args = ap.parse_args()
    print(f"active backend: {kernels.BACKEND}, {args.points} points")
    print(f"{'kernel':<20}{'python [ms]':>14}{'compiled [ms]':>16}{'speedup':>10}")
    for name, t_py, t_c in run(args.repeat, args.points):
        print(f"{name:<20}{1e3 * t_py:>14.3f}{1e3 * t_c:>16.3f}{t_py / t_c:>10.1f}")
    (_, t_py), (backend, t_c) = shooting(True), shooting(False)
    if backend == "compiled":
        print(f"{'shooting solve':<20}{1e3 * t_py:>14.1f}{1e3 * t_c:>16.1f}{t_py / t_c:>10.1f}")


if __name__ == "__main__":
    main()
