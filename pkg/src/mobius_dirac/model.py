"""Domain types and the physical potentials of the Mobius-square/Yukawa family.

Units are natural (hbar = c = 1) with lengths in fm and energies in fm^-1.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum

import numpy as np


class DomainError(ValueError):
    """Raised when a potential or approximation is evaluated outside its domain."""


class Limit(str, Enum):
    PSEUDOSPIN = "pseudospin"
    SPIN = "spin"


class Choice(str, Enum):
    FIRST = "first"     # Yukawa tail
    SECOND = "second"   # quasi-Yukawa tail


@dataclass(frozen=True)
class PotentialParams:
    """Shape constants and screening of the Mobius-square plus (quasi-)Yukawa potential.

    Parameters
    ----------
    V0 : float
        Mobius-square strength (fm^-1).
    V1 : float
        Yukawa / quasi-Yukawa strength.
    A, B, C, D : float
        Mobius shape constants.
    alpha : float
        Screening parameter (fm^-1).
    """

    V0: float = -0.2
    V1: float = 0.1
    A: float = 1.0
    B: float = -2.0
    C: float = 1.0
    D: float = -1.0
    alpha: float = 0.01

    def __post_init__(self):
        if not self.alpha > 0:
            raise DomainError(f"alpha must be positive, got {self.alpha}")
        if self.C == 0 or self.D == 0:
            raise DomainError("C and D must both be nonzero")
        # C + D e^{-alpha r} sweeps the open interval between C + D and C on r > 0
        lo, hi = sorted((self.C + self.D, self.C))
        if lo < 0 < hi:
            raise DomainError(
                f"Mobius factor C + D exp(-alpha r) vanishes on r > 0 (C={self.C}, D={self.D})"
            )

    @property
    def ratio(self) -> float:
        """D / C, the coefficient of exp(-alpha r) in the normalized Mobius factor."""
        return self.D / self.C


@dataclass(frozen=True)
class SymmetrySpec:
    """Symmetry limit, potential choice and the remaining Dirac constants.

    ``sym_const`` plays C_ps in the pseudospin limit and C_s in the spin limit.
    ``squared_tail`` selects the quasi-Yukawa tail -V1 (1 - e^{-ar}/r)^2 (True)
    or -V1 (1 - e^{-ar}/r) (False); it is ignored for the first choice.
    """

    limit: Limit = Limit.PSEUDOSPIN
    choice: Choice = Choice.FIRST
    sym_const: float = 0.0
    H: float = 0.0
    M: float = 5.0
    squared_tail: bool = True

    def __post_init__(self):
        object.__setattr__(self, "limit", Limit(self.limit))
        object.__setattr__(self, "choice", Choice(self.choice))
        if not self.M > 0:
            raise DomainError(f"fermion mass M must be positive, got {self.M}")


_LETTERS = "SPdfghiklmnoqrtuv"


@dataclass(frozen=True)
class QuantumState:
    """Radial number ``n`` and spin-orbit number ``kappa``.

    ``l`` is the orbital number of the upper component, ``l_tilde`` the
    pseudo-orbital number of the lower one:

    * kappa < 0: j = l + 1/2, l = -kappa - 1, l_tilde = -kappa
    * kappa > 0: j = l - 1/2, l = kappa, l_tilde = kappa - 1
    """

    n: int
    kappa: int

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 0:
            raise ValueError(f"n must be a non-negative integer, got {self.n}")
        if int(self.kappa) != self.kappa or self.kappa == 0:
            raise ValueError(f"kappa must be a nonzero integer, got {self.kappa}")
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "kappa", int(self.kappa))

    @property
    def l(self) -> int:
        return -self.kappa - 1 if self.kappa < 0 else self.kappa

    @property
    def l_tilde(self) -> int:
        return -self.kappa if self.kappa < 0 else self.kappa - 1

    @property
    def two_j(self) -> int:
        return 2 * abs(self.kappa) - 1

    @property
    def j(self) -> float:
        return self.two_j / 2

    @property
    def label(self) -> str:
        if self.l >= len(_LETTERS):
            raise ValueError(f"no spectroscopic letter for l={self.l}")
        return f"{self.n}{_LETTERS[self.l]}{self.two_j}/2"

    @classmethod
    def parse(cls, label: str) -> "QuantumState":
        """Inverse of :attr:`label`, e.g. ``"0d3/2"`` -> ``QuantumState(0, 2)``."""
        m = re.fullmatch(r"\s*(\d+)([A-Za-z])(\d+)/2\s*", label)
        if m is None:
            raise ValueError(f"malformed spectroscopic label {label!r}")
        n, letter, two_j = int(m.group(1)), m.group(2), int(m.group(3))
        matches = [i for i, c in enumerate(_LETTERS) if c.lower() == letter.lower()]
        if not matches:
            raise ValueError(f"unknown orbital letter {letter!r}")
        l = matches[0]
        if two_j == 2 * l + 1:
            kappa = -(l + 1)
        elif two_j == 2 * l - 1 and l > 0:
            kappa = l
        else:
            raise ValueError(f"j={two_j}/2 incompatible with l={l}")
        return cls(n, kappa)

    def centrifugal_product(self, limit: Limit, H: float = 0.0) -> float:
        """(k+H)(k+H-1) for pseudospin, (k+H+1)(k+H) for spin."""
        kh = self.kappa + H
        if Limit(limit) is Limit.PSEUDOSPIN:
            return kh * (kh - 1.0)
        return (kh + 1.0) * kh

    def degree(self, limit: Limit) -> int:
        """Degree of the Jacobi polynomial (node count of the primary component).

        Pseudospin states with kappa > 0 are labelled by the nucleon radial
        number, which is one less than the pseudo-radial number of their
        lower component.
        """
        if Limit(limit) is Limit.PSEUDOSPIN and self.kappa > 0:
            return self.n + 1
        return self.n


@dataclass(frozen=True)
class RadialGrid:
    r_min: float = 1e-3
    r_max: float = 250.0
    points: int = 8000
    spacing: str = "uniform"

    def __post_init__(self):
        if not 0 < self.r_min < self.r_max:
            raise ValueError(f"need 0 < r_min < r_max, got {self.r_min}, {self.r_max}")
        if self.points < 2:
            raise ValueError("a grid needs at least two points")
        if self.spacing not in ("uniform", "log"):
            raise ValueError(f"unknown spacing {self.spacing!r}")

    def values(self) -> np.ndarray:
        if self.spacing == "log":
            return np.geomspace(self.r_min, self.r_max, self.points)
        return np.linspace(self.r_min, self.r_max, self.points)

    @property
    def step(self) -> float:
        if self.spacing != "uniform":
            raise ValueError("step is only defined for uniform grids")
        return (self.r_max - self.r_min) / (self.points - 1)


def _positive_r(r):
    r = np.asarray(r, dtype=float)
    if np.any(r <= 0):
        raise DomainError("radial coordinate must be positive")
    return r


def _mobius_denominator(r, alpha, C, D):
    # (C + D) + D expm1(.) keeps full precision where C + D e^{-ar} nearly cancels
    den = (C + D) + D * np.expm1(-alpha * r)
    if np.any(den == 0):
        raise DomainError("pole of the Mobius factor C + D exp(-alpha r)")
    return den


def _scalar_or_array(x):
    return float(x) if np.ndim(x) == 0 else x


def mobius_square(r, p: PotentialParams):
    r = _positive_r(r)
    e = np.exp(-p.alpha * r)
    den = _mobius_denominator(r, p.alpha, p.C, p.D)
    return p.V0 * ((p.A + p.B * e) / den) ** 2


def _tail(r, p: PotentialParams, choice: Choice, squared: bool):
    e = np.exp(-p.alpha * r)
    if Choice(choice) is Choice.FIRST:
        return -p.V1 * e / r
    base = 1.0 - e / r
    return -p.V1 * (base * base if squared else base)


def delta_potential(r, p: PotentialParams, choice: Choice = Choice.FIRST, *,
                    squared_tail: bool = True):
    """V - S in the pseudospin limit: Mobius square plus the (quasi-)Yukawa tail."""
    r = _positive_r(r)
    return _scalar_or_array(mobius_square(r, p) + _tail(r, p, choice, squared_tail))


def sigma_potential(r, p: PotentialParams, choice: Choice = Choice.FIRST, *,
                    squared_tail: bool = True):
    """V + S in the spin limit; same functional family as :func:`delta_potential`."""
    r = _positive_r(r)
    return _scalar_or_array(mobius_square(r, p) + _tail(r, p, choice, squared_tail))


def tensor_potential(r, H: float):
    """Coulomb-like tensor term U(r) = -H/r, applied at every r (no Coulomb-radius cutoff)."""
    r = _positive_r(r)
    return _scalar_or_array(-H / r)


def centrifugal_approx(r, alpha: float, C: float, D: float):
    """Pekeris-type replacement of 1/r^2: C^2 alpha^2 / (C + D e^{-alpha r})^2."""
    r = _positive_r(r)
    den = _mobius_denominator(r, alpha, C, D)
    return _scalar_or_array((C * alpha / den) ** 2)


def inverse_r_approx(r, alpha: float, C: float, D: float):
    """Replacement of 1/r consistent with :func:`centrifugal_approx`: C alpha / (C + D e^{-alpha r})."""
    r = _positive_r(r)
    den = _mobius_denominator(r, alpha, C, D)
    return _scalar_or_array(C * alpha / den)


def centrifugal_relative_error(r, alpha: float, C: float = 1.0, D: float = -1.0):
    """|approx * r^2 - 1| on the given radii."""
    r = _positive_r(r)
    return np.abs(np.asarray(centrifugal_approx(r, alpha, C, D)) * r * r - 1.0)


def physical_potential(r, p: PotentialParams, s: SymmetrySpec):
    """The potential carrying the dynamics in the active limit (Delta or Sigma)."""
    if s.limit is Limit.PSEUDOSPIN:
        return delta_potential(r, p, s.choice, squared_tail=s.squared_tail)
    return sigma_potential(r, p, s.choice, squared_tail=s.squared_tail)


__all__ = [
    "Choice", "DomainError", "Limit", "PotentialParams", "QuantumState", "RadialGrid",
    "SymmetrySpec", "centrifugal_approx", "centrifugal_relative_error", "delta_potential",
    "inverse_r_approx", "mobius_square", "physical_potential", "sigma_potential",
    "tensor_potential",
]
