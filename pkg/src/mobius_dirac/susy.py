"""Superpotential, Riccati check, partner potentials and shape-invariance algebra.

The superpotential family is

    phi(r) = f e^{-ar} / (1 + k e^{-ar}) + g,     k = D / C.

Equating powers of e^{-ar} in phi^2 - phi' = V_eff - E0 gives

    f^2 - k a f - (quad + k^2 cst - k lin) = 0
    g = (quad C^2 - cst D^2 - f^2 C^2) / (2 C D f)
    E0 = cst - g^2

and shape invariance maps f -> f + a k.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .coeffs import EffectiveCoefficients, effective_potential
from .model import PotentialParams


class Branch(str, Enum):
    PLUS = "plus"
    MINUS = "minus"


class NoRealSuperpotential(ArithmeticError):
    """The f-quadratic has a negative discriminant: unphysical parameter region."""


class DegenerateParameter(ArithmeticError):
    """A shape-invariance parameter a_k vanished, so w(a_k) is undefined."""


@dataclass(frozen=True)
class SuperpotentialParams:
    f: float
    g: float
    branch: Branch


def discriminant(c: EffectiveCoefficients, p: PotentialParams):
    a, C, D = p.alpha, p.C, p.D
    return a * a * D * D + 4 * c.cst * D * D + 4 * c.quad * C * C - 4 * c.lin * C * D


def f_roots(c: EffectiveCoefficients, p: PotentialParams, branch: Branch):
    """Root of the f-quadratic; ``branch`` picks the sign in front of the square root.

    Works elementwise for array coefficients; a negative discriminant yields nan.
    """
    disc = discriminant(c, p)
    sign = 1.0 if Branch(branch) is Branch.PLUS else -1.0
    with np.errstate(invalid="ignore"):
        root = np.sqrt(disc)
    return p.alpha * p.D / (2 * p.C) + sign * root / (2 * p.C)


def w_of(a, c: EffectiveCoefficients, p: PotentialParams):
    """Constant term of the superpotential belonging to the slope parameter ``a``."""
    C, D = p.C, p.D
    return (-a * a * C * C - c.cst * D * D + c.quad * C * C) / (2 * C * D * a)


def solve_superpotential(c: EffectiveCoefficients, p: PotentialParams,
                         branch: Branch = Branch.MINUS) -> SuperpotentialParams:
    disc = float(discriminant(c, p))
    if disc < 0:
        raise NoRealSuperpotential(f"discriminant {disc:.6g} < 0")
    f = float(f_roots(c, p, branch))
    if f == 0:
        raise DegenerateParameter("superpotential slope f vanished")
    return SuperpotentialParams(f, float(w_of(f, c, p)), Branch(branch))


def _grid(r):
    r = np.asarray(r)
    return r if r.dtype == np.longdouble else r.astype(float)


def _mobius(r, p: PotentialParams):
    """(e^{-ar}, 1 + k e^{-ar}); the factor is formed with expm1 so it stays accurate near a pole."""
    x = -p.alpha * r
    return np.exp(x), (1.0 + p.ratio) + p.ratio * np.expm1(x)


def superpotential(r, sp: SuperpotentialParams, p: PotentialParams):
    e, den = _mobius(_grid(r), p)
    out = sp.f * e / den + sp.g
    return float(out) if np.ndim(out) == 0 else out


def superpotential_derivative(r, sp: SuperpotentialParams, p: PotentialParams):
    e, den = _mobius(_grid(r), p)
    out = -sp.f * p.alpha * e / den ** 2
    return float(out) if np.ndim(out) == 0 else out


def ground_effective_energy(sp: SuperpotentialParams, c: EffectiveCoefficients) -> float:
    return c.cst - sp.g * sp.g


def riccati_residual(sp: SuperpotentialParams, c: EffectiveCoefficients,
                     p: PotentialParams, grid) -> float:
    """sup over the grid of |phi^2 - phi' - V_eff + E0| with E0 = cst - g^2."""
    r = np.asarray(grid, dtype=float)
    phi = superpotential(r, sp, p)
    dphi = superpotential_derivative(r, sp, p)
    defect = phi * phi - dphi - effective_potential(r, c, p) + ground_effective_energy(sp, c)
    return float(np.max(np.abs(defect)))


def partner_potentials(sp: SuperpotentialParams, p: PotentialParams, grid, dtype=float):
    """(V_+, V_-) = (phi^2 + phi', phi^2 - phi') on the grid.

    Near the pole of the Mobius factor both potentials grow like 1/r^2 while
    their shape-invariant difference stays O(1); pass ``dtype=np.longdouble``
    when that difference is wanted to many digits.
    """
    r = np.asarray(grid, dtype=dtype)
    phi = superpotential(r, sp, p)
    dphi = superpotential_derivative(r, sp, p)
    return phi * phi + dphi, phi * phi - dphi


def shifted(a0: float, k: int, p: PotentialParams) -> float:
    """a_k = a_0 + k alpha D / C."""
    return a0 + k * p.alpha * p.ratio


def superpotential_at(a: float, c: EffectiveCoefficients, p: PotentialParams,
                      branch: Branch = Branch.MINUS) -> SuperpotentialParams:
    """Member of the shape-invariant family with slope ``a``."""
    if a == 0:
        raise DegenerateParameter("a_k = 0")
    return SuperpotentialParams(float(a), float(w_of(a, c, p)), Branch(branch))


def shape_invariance_remainders(a0: float, c: EffectiveCoefficients, p: PotentialParams,
                                n_max: int) -> list[float]:
    """[R(a_1), ..., R(a_n_max)] with R(a_k) = w(a_{k-1})^2 - w(a_k)^2."""
    a = [shifted(a0, k, p) for k in range(n_max + 1)]
    if any(ak == 0 for ak in a):
        raise DegenerateParameter("a_k = 0 for some k <= n_max")
    w = [float(w_of(ak, c, p)) for ak in a]
    return [w[k - 1] ** 2 - w[k] ** 2 for k in range(1, n_max + 1)]


def closed_form_effective_energy(n: int, c: EffectiveCoefficients, p: PotentialParams,
                                 branch: Branch = Branch.MINUS):
    """cst - w(a_n)^2 with a_0 the ``branch`` root of the f-quadratic.

    Elementwise for array coefficients; nan where no real superpotential exists.
    """
    a_n = f_roots(c, p, branch) + n * p.alpha * p.ratio
    with np.errstate(divide="ignore", invalid="ignore"):
        w = w_of(a_n, c, p)
    out = c.cst - w * w
    return float(out) if np.ndim(out) == 0 else out


__all__ = [
    "Branch", "DegenerateParameter", "NoRealSuperpotential", "SuperpotentialParams",
    "closed_form_effective_energy", "discriminant", "f_roots", "ground_effective_energy",
    "partner_potentials", "riccati_residual", "shape_invariance_remainders", "shifted",
    "solve_superpotential", "superpotential", "superpotential_at",
    "superpotential_derivative", "w_of",
]
