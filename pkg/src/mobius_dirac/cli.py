"""Command-line front end: ``mobius-dirac energies|sweep|wavefunction|verify|centrifugal``.

Exit codes: 0 success, 1 physics failure (no root, failed check), 2 usage or
configuration error.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from datetime import datetime, timezone

import numpy as np

from . import __version__
from .config import ConfigError, RunConfig, fmt, golden_config, load, serialize
from .model import (DomainError, QuantumState, RadialGrid, centrifugal_approx,
                    centrifugal_relative_error)
from .spectrum import AmbiguousRoot, NoBoundState, solve_energy
from .susy import DegenerateParameter, NoRealSuperpotential
from .verify import SUITES
from .wavefn import components, normalized_spec

EXIT_OK, EXIT_PHYSICS, EXIT_USAGE = 0, 1, 2

ENERGY_COLUMNS = ["limit", "choice", "n", "kappa", "label", "H", "E_fm_inv", "branch",
                  "residual", "status"]
SWEEPABLE = ("alpha", "V0", "V1", "A", "B", "C", "D", "M", "sym_const", "H")

_SOLVE_ERRORS = (NoBoundState, AmbiguousRoot, NoRealSuperpotential, DegenerateParameter,
                 DomainError)


class UsageError(Exception):
    pass


def _num(x: float) -> str:
    return f"{x + 0.0:.15g}"


def _status(exc: Exception) -> str:
    if isinstance(exc, AmbiguousRoot):
        return "ambiguous"
    return "no-root"


def _header(cfg: RunConfig, extra: dict[str, str], timestamp: bool) -> list[str]:
    lines = [f"# mobius-dirac {__version__}"]
    if timestamp:
        lines.append(f"# generated = {datetime.now(timezone.utc).isoformat(timespec='seconds')}")
    lines += [f"# {line}" for line in serialize(cfg).splitlines()]
    lines += [f"# {k} = {v}" for k, v in extra.items()]
    return lines


def _write(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv(header: list[str], columns: list[str], rows) -> str:
    buf = io.StringIO(newline="")
    buf.write("\n".join(header) + "\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    writer.writerows(rows)
    return buf.getvalue()


def _sort_key(row):
    n, kappa, H = row[2], row[3], row[5]
    return n, abs(kappa), 1 if kappa > 0 else -1, H


def energy_rows(cfg: RunConfig) -> tuple[list[list], bool]:
    """CSV rows for every (n, kappa, H) of the config and whether all solved."""
    p = cfg.potential()
    rows, ok = [], True
    for H in cfg.H_list:
        s = cfg.symmetry(H)
        for q in cfg.states():
            try:
                bs = solve_energy(q, p, s, branch=cfg.branch)
                tail = [bs.E, bs.branch.value, bs.residual_at_E, "ok"]
            except _SOLVE_ERRORS as exc:
                ok = False
                tail = [float("nan"), cfg.branch, float("nan"), _status(exc)]
            rows.append([cfg.limit, cfg.choice, q.n, q.kappa, q.label, H] + tail)
    rows.sort(key=_sort_key)
    return rows, ok


def _format_energy_row(row):
    return row[:5] + [fmt(row[5]), _num(row[6]), row[7], f"{row[8]:.3e}", row[9]]


def cmd_energies(cfg: RunConfig, out: str | None, timestamp: bool) -> int:
    rows, ok = energy_rows(cfg)
    text = _csv(_header(cfg, {}, timestamp), ENERGY_COLUMNS,
                [_format_energy_row(r) for r in rows])
    _write(text, out or cfg.output_path)
    return EXIT_OK if ok else EXIT_PHYSICS


def sweep_values(cfg: RunConfig, param: str, start: float, stop: float, steps: int):
    """(values, states, energies[value, state]) with nan where no root was found."""
    if param not in SWEEPABLE:
        raise UsageError(f"cannot sweep {param!r}; choose from {', '.join(SWEEPABLE)}")
    if steps < 1:
        raise UsageError("steps must be >= 1")
    values = np.linspace(start, stop, steps) if steps > 1 else np.array([start])
    states = cfg.states()
    E = np.full((len(values), len(states)), np.nan)
    for i, v in enumerate(values):
        v = float(v)
        if param == "H":
            c, H = cfg, v
        else:
            c, H = cfg.replace(**{param: v}), cfg.H_list[0]
        p, s = c.potential(), c.symmetry(H)
        for j, q in enumerate(states):
            try:
                E[i, j] = solve_energy(q, p, s, branch=c.branch).E
            except _SOLVE_ERRORS:
                pass
    return values, states, E


def cmd_sweep(cfg: RunConfig, param: str, start: float, stop: float, steps: int,
              out: str | None, timestamp: bool) -> int:
    values, states, E = sweep_values(cfg, param, start, stop, steps)
    columns = ["param_value"] + [f"E_{q.n}_{q.kappa}" for q in states]
    rows = [[_num(v)] + [_num(e) for e in E[i]] for i, v in enumerate(values)]
    extra = {"sweep": param, "from": fmt(start), "to": fmt(stop), "steps": str(steps)}
    if param != "H" and cfg.H_list:
        extra["H"] = fmt(cfg.H_list[0])
    _write(_csv(_header(cfg, extra, timestamp), columns, rows), out or cfg.output_path)
    return EXIT_OK if np.all(np.isfinite(E)) else EXIT_PHYSICS


def cmd_wavefunction(cfg: RunConfig, n: int, kappa: int, H: float | None, grid: RadialGrid,
                     out: str | None, timestamp: bool) -> int:
    H = cfg.H_list[0] if H is None else H
    try:
        q = QuantumState(n, kappa)
        bs = solve_energy(q, cfg.potential(), cfg.symmetry(H), branch=cfg.branch)
        ws = normalized_spec(bs, grid)
    except _SOLVE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PHYSICS
    r = grid.values()
    F, G = components(bs, r, ws)
    extra = {"state": q.label, "n": str(n), "kappa": str(kappa), "H": fmt(H),
             "E_fm_inv": _num(bs.E), "branch": bs.branch.value, "exp1": _num(ws.exp1),
             "exp2": _num(ws.exp2), "jacobi_a": _num(ws.jacobi_a), "jacobi_b": _num(ws.jacobi_b),
             "degree": str(ws.n), "grid": f"{fmt(grid.r_min)}:{fmt(grid.r_max)}:{grid.points}"}
    rows = ([_num(a), _num(b), _num(c)] for a, b, c in zip(r, F, G))
    _write(_csv(_header(cfg, extra, timestamp), ["r", "F", "G"], rows), out or cfg.output_path)
    return EXIT_OK


def cmd_centrifugal(cfg: RunConfig, grid: RadialGrid, out: str | None, timestamp: bool) -> int:
    r = grid.values()
    exact = 1.0 / (r * r)
    approx = centrifugal_approx(r, cfg.alpha, cfg.C, cfg.D)
    err = centrifugal_relative_error(r, cfg.alpha, cfg.C, cfg.D)
    rows = ([_num(a), _num(b), _num(c), _num(d)] for a, b, c, d in zip(r, exact, approx, err))
    _write(_csv(_header(cfg, {}, timestamp), ["r", "inverse_r2", "approx", "rel_error"], rows),
           out or cfg.output_path)
    return EXIT_OK


def cmd_verify(cfg: RunConfig | None, suite: str, stream=None) -> int:
    stream = stream or sys.stdout
    if suite not in SUITES:
        raise UsageError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    try:
        checks = SUITES[suite](cfg)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    for c in checks:
        print(c.line(), file=stream)
    failed = sum(not c.passed for c in checks)
    print(f"{suite}: {len(checks) - failed}/{len(checks)} checks passed", file=stream)
    return EXIT_OK if failed == 0 else EXIT_PHYSICS


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="run configuration file (key = value lines)")
    common.add_argument("--table", type=int, choices=(1, 2, 3, 4),
                        help="use the shipped golden config for this table")
    common.add_argument("--out", help="output path (default: stdout)")
    common.add_argument("--limit", choices=("spin", "pseudospin"))
    common.add_argument("--choice", choices=("first", "second"))
    common.add_argument("--branch", choices=("auto", "plus", "minus"))
    common.add_argument("--no-timestamp", action="store_true",
                        help="omit the generation time from the metadata header")

    parser = argparse.ArgumentParser(prog="mobius-dirac", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("energies", parents=[common], help="energies for every (n, kappa, H)")

    sw = sub.add_parser("sweep", parents=[common], help="energies along a parameter sweep")
    sw.add_argument("--param", required=True)
    sw.add_argument("--from", dest="start", type=float, required=True)
    sw.add_argument("--to", dest="stop", type=float, required=True)
    sw.add_argument("--steps", type=int, default=51)

    def grid_flags(p, r_max):
        p.add_argument("--r-min", type=float, default=1e-3)
        p.add_argument("--r-max", type=float, default=r_max)
        p.add_argument("--points", type=int, default=8000)

    wf = sub.add_parser("wavefunction", parents=[common], help="normalized radial components")
    wf.add_argument("--n", type=int, required=True)
    wf.add_argument("--kappa", type=int, required=True)
    wf.add_argument("--H", type=float, help="tensor strength (default: first of H_list)")
    grid_flags(wf, 250.0)

    cf = sub.add_parser("centrifugal", parents=[common], help="1/r^2 against its approximation")
    grid_flags(cf, 100.0)

    vf = sub.add_parser("verify", parents=[common], help="run a verification suite")
    vf.add_argument("suite", help=", ".join(SUITES))
    return parser


def _resolve_config(args) -> RunConfig | None:
    if args.config and args.table:
        raise UsageError("--config and --table are mutually exclusive")
    if args.config:
        cfg = load(args.config)
    elif args.table:
        cfg = golden_config(args.table)
    elif args.command == "verify":
        cfg = None
    else:
        cfg = RunConfig()
    overrides = {k: getattr(args, k) for k in ("limit", "choice", "branch")
                 if getattr(args, k) is not None}
    if overrides:
        cfg = (cfg or RunConfig()).replace(**overrides)
        cfg.__post_init__()
    return cfg


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    timestamp = not args.no_timestamp
    try:
        cfg = _resolve_config(args)
        if args.command == "energies":
            return cmd_energies(cfg, args.out, timestamp)
        if args.command == "sweep":
            return cmd_sweep(cfg, args.param, args.start, args.stop, args.steps, args.out,
                             timestamp)
        if args.command in ("wavefunction", "centrifugal"):
            try:
                grid = RadialGrid(args.r_min, args.r_max, args.points)
            except ValueError as exc:
                raise UsageError(str(exc)) from None
            if args.command == "centrifugal":
                return cmd_centrifugal(cfg, grid, args.out, timestamp)
            return cmd_wavefunction(cfg, args.n, args.kappa, args.H, grid, args.out, timestamp)
        return cmd_verify(cfg, args.suite)
    except (UsageError, ConfigError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
