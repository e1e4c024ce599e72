"""Line-oriented ``key = value`` run configuration.

``#`` starts a comment, lists are comma separated.  Serialization writes every
key in a fixed order with 12 significant digits, so parse -> serialize ->
parse is a fixed point.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field, fields
from importlib import resources
from pathlib import Path

from .model import Choice, Limit, PotentialParams, QuantumState, SymmetrySpec


class ConfigError(ValueError):
    """Malformed or inconsistent configuration (usage error)."""


def fmt(x: float) -> str:
    return f"{x:.12g}"


@dataclass
class RunConfig:
    limit: str = "pseudospin"
    choice: str = "first"
    V0: float = -0.2
    V1: float = 0.1
    A: float = 1.0
    B: float = -2.0
    C: float = 1.0
    D: float = -1.0
    alpha: float = 0.01
    M: float = 5.0
    sym_const: float = 0.0
    squared_tail: bool = True
    H_list: list[float] = field(default_factory=lambda: [0.0])
    n_list: list[int] = field(default_factory=lambda: [0])
    kappa_list: list[int] = field(default_factory=lambda: [-1])
    partners: bool = False
    branch: str = "auto"
    table: int | None = None
    output_path: str | None = None

    def __post_init__(self):
        try:
            self.limit = Limit(self.limit).value
            self.choice = Choice(self.choice).value
        except ValueError as exc:
            raise ConfigError(str(exc)) from None
        if self.branch not in ("auto", "plus", "minus"):
            raise ConfigError(f"branch must be auto, plus or minus, got {self.branch!r}")
        if any(k == 0 for k in self.kappa_list):
            raise ConfigError("kappa = 0 is not allowed")
        if any(n < 0 for n in self.n_list):
            raise ConfigError("n must be non-negative")

    def potential(self) -> PotentialParams:
        try:
            return PotentialParams(self.V0, self.V1, self.A, self.B, self.C, self.D, self.alpha)
        except ValueError as exc:
            raise ConfigError(str(exc)) from None

    def symmetry(self, H: float) -> SymmetrySpec:
        try:
            return SymmetrySpec(self.limit, self.choice, self.sym_const, H, self.M,
                                self.squared_tail)
        except ValueError as exc:
            raise ConfigError(str(exc)) from None

    def states(self) -> list[QuantumState]:
        """n_list x kappa_list, plus doublet partners when ``partners`` is set."""
        from .spectrum import doublet_partner

        out = []
        for n in self.n_list:
            for k in self.kappa_list:
                q = QuantumState(n, k)
                out.append(q)
                if self.partners:
                    try:
                        out.append(doublet_partner(q, SymmetrySpec(limit=self.limit)))
                    except ValueError:
                        pass
        seen, unique = set(), []
        for q in out:
            if q not in seen:
                seen.add(q)
                unique.append(q)
        return unique

    def replace(self, **changes) -> "RunConfig":
        return dataclasses.replace(self, **changes)


_FLOATS = {"V0", "V1", "A", "B", "C", "D", "alpha", "M", "sym_const"}
_BOOLS = {"squared_tail", "partners"}
_TRUE = {"true", "yes", "1", "on"}
_FALSE = {"false", "no", "0", "off"}


def _convert(key: str, raw: str):
    try:
        if key in _FLOATS:
            return float(raw)
        if key in _BOOLS:
            low = raw.lower()
            if low not in _TRUE | _FALSE:
                raise ValueError(raw)
            return low in _TRUE
        if key == "H_list":
            return [float(v) for v in raw.split(",") if v.strip()]
        if key in ("n_list", "kappa_list"):
            return [int(v) for v in raw.split(",") if v.strip()]
        if key == "table":
            return None if raw.lower() in ("", "none") else int(raw)
        if key == "output_path":
            return None if raw.lower() in ("", "none") else raw
        return raw
    except ValueError:
        raise ConfigError(f"bad value for {key}: {raw!r}") from None


def parse(text: str) -> RunConfig:
    known = {f.name for f in fields(RunConfig)}
    values = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value'")
        key, raw = (part.strip() for part in line.split("=", 1))
        if key not in known:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
        values[key] = _convert(key, raw)
    return RunConfig(**values)


def serialize(cfg: RunConfig) -> str:
    lines = []
    for f in fields(RunConfig):
        v = getattr(cfg, f.name)
        if v is None:
            text = "none"
        elif isinstance(v, bool):
            text = "true" if v else "false"
        elif isinstance(v, float):
            text = fmt(v)
        elif isinstance(v, list):
            text = ", ".join(fmt(x) if isinstance(x, float) else str(x) for x in v)
        else:
            text = str(v)
        lines.append(f"{f.name} = {text}")
    return "\n".join(lines) + "\n"


def load(path: str | Path) -> RunConfig:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from None
    return parse(text)


def golden_config(table: int) -> RunConfig:
    """One of the four shipped configurations reproducing the published tables."""
    if table not in (1, 2, 3, 4):
        raise ConfigError(f"no golden config for table {table}")
    text = resources.files("mobius_dirac").joinpath("data", f"table{table}.cfg").read_text()
    return parse(text)
