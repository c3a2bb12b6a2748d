"""Certificates and integral diagnostics for the coupled system.

The certificates bound the problem data: Lipschitz constants of the two
right-hand sides over a box |phi| <= M, |psi| <= Mstar, the largest
interval length for which the Schauder fixed-point argument applies, and
the contraction constant A whose condition A < 1 forces uniqueness.

The energy identity and the H1-norm trichotomy are derived for
r = s = 1; calling them with other coefficients warns but proceeds.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, asdict

import numpy as np

from . import quadrature
from .errors import ConfigurationError, DegenerateBoundsError, DomainError
from .model import Bounds, Domain, FieldPair, Grid, SystemParams

_TINY = 1e-300


@dataclass(frozen=True)
class LipschitzConstants:
    """Constants L_ij with |f_i(u1) - f_i(u2)| <= L_i1 |dphi| + L_i2 |dpsi|."""

    L11: float
    L12: float
    L21: float
    L22: float


@dataclass(frozen=True)
class Certificate:
    """Existence/uniqueness certificate for one parameter set and box."""

    params: SystemParams
    domain: Domain
    bounds: Bounds
    lipschitz: LipschitzConstants
    L_max: float
    A: float
    equicontinuity: float
    exists_ok: bool
    unique_ok: bool

    def to_dict(self) -> dict:
        return asdict(self)


def lipschitz(params: SystemParams, bounds: Bounds) -> LipschitzConstants:
    """Lipschitz constants of (f1, f2) over the box (M, Mstar)."""
    M, Mstar = bounds.M, bounds.Mstar
    return LipschitzConstants(
        L11=(1.0 + Mstar) / abs(params.r),
        L12=M / abs(params.r),
        L21=(M + M) / (2.0 * abs(params.s)),
        L22=params.alpha / abs(params.s),
    )


def existence_interval_bound(params: SystemParams, bounds: Bounds) -> float:
    """Largest interval length the existence argument admits (cube root bound)."""
    M, Mstar = bounds.M, bounds.Mstar
    denom = abs(params.s) * (M + M * Mstar) + abs(params.r) * (
        params.alpha * Mstar + 0.5 * M * M
    )
    if denom == 0.0:
        raise DegenerateBoundsError("M = Mstar = 0 gives an empty existence bound")
    return (8.0 * abs(params.r * params.s) * (M + Mstar) / denom) ** (1.0 / 3.0)


def uniqueness_constant(params: SystemParams, domain: Domain, bounds: Bounds) -> float:
    """Contraction constant A; A < 1 implies at most one solution."""
    lip = lipschitz(params, bounds)
    biggest = max(max(lip.L11, lip.L21), max(lip.L12, lip.L22))
    return domain.length**2 / 8.0 * biggest


def certify(params: SystemParams, domain: Domain, bounds: Bounds) -> Certificate:
    """Assemble the full certificate for one parameter set and bounding box."""
    lip = lipschitz(params, bounds)
    L_max = existence_interval_bound(params, bounds)
    A = uniqueness_constant(params, domain, bounds)
    K = domain.length**2 / 8.0 * (
        (bounds.M + bounds.M * bounds.Mstar) / abs(params.r)
        + (params.alpha * bounds.Mstar + 0.5 * bounds.M**2) / abs(params.s)
    )
    return Certificate(
        params=params,
        domain=domain,
        bounds=bounds,
        lipschitz=lip,
        L_max=L_max,
        A=A,
        equicontinuity=K,
        exists_ok=domain.length <= L_max,
        unique_ok=A < 1.0,
    )


def green_function(a: float, b: float, x, y):
    """Dirichlet Green kernel of u'' on [a, b].

    G(x, y) = (x-a)(b-y)/(b-a) for x <= y, symmetric in (x, y).
    """
    if not b > a:
        raise DomainError(f"need a < b, got [{a}, {b}]")
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if np.any(x < a) or np.any(x > b) or np.any(y < a) or np.any(y > b):
        raise DomainError("green_function arguments must lie in [a, b]")
    lo = np.minimum(x, y)
    hi = np.maximum(x, y)
    out = (lo - a) * (b - hi) / (b - a)
    if out.ndim == 0:
        return float(out)
    return out


def _grid_derivative(u: np.ndarray, h: float) -> np.ndarray:
    """Central differences inside, second-order one-sided at the endpoints."""
    du = np.empty_like(u)
    du[1:-1] = (u[2:] - u[:-2]) / (2.0 * h)
    du[0] = (-3.0 * u[0] + 4.0 * u[1] - u[2]) / (2.0 * h)
    du[-1] = (3.0 * u[-1] - 4.0 * u[-2] + u[-3]) / (2.0 * h)
    return du


def sobolev_h1_norm(grid: Grid, u: np.ndarray, rule: str = "simpson") -> float:
    """H1 norm sqrt(int u^2 + int u'^2) for u vanishing at both endpoints."""
    u = np.asarray(u, dtype=float)
    if u.shape != (grid.n,):
        raise ConfigurationError("u must be sampled on the grid")
    if max(abs(u[0]), abs(u[-1])) > 1e-8:
        warnings.warn(
            "H1 norm assumes homogeneous Dirichlet data; endpoint values "
            f"are ({u[0]:.3e}, {u[-1]:.3e})",
            stacklevel=2,
        )
    du = _grid_derivative(u, grid.h)
    return math.sqrt(
        quadrature.integrate(u * u, grid.h, rule)
        + quadrature.integrate(du * du, grid.h, rule)
    )


def _warn_if_not_unit_coefficients(params: SystemParams, what: str) -> None:
    if params.r != 1.0 or params.s != 1.0:
        warnings.warn(f"{what} is derived for r = s = 1; got r={params.r}, s={params.s}",
                      stacklevel=3)


def energy_identity_residual(
    params: SystemParams, grid: Grid, fields: FieldPair, rule: str = "simpson"
) -> float:
    """Relative defect of int phi^2 + int phi'^2 = 2 alpha int psi^2 + 2 int psi'^2."""
    _warn_if_not_unit_coefficients(params, "the energy identity")
    h = grid.h
    dphi = _grid_derivative(fields.phi, h)
    dpsi = _grid_derivative(fields.psi, h)
    lhs = quadrature.integrate(fields.phi**2, h, rule) + quadrature.integrate(
        dphi**2, h, rule
    )
    rhs = 2.0 * params.alpha * quadrature.integrate(
        fields.psi**2, h, rule
    ) + 2.0 * quadrature.integrate(dpsi**2, h, rule)
    return abs(lhs - rhs) / max(lhs, rhs, _TINY)


def norm_ordering(
    params: SystemParams,
    grid: Grid,
    fields: FieldPair,
    rule: str = "simpson",
    rel_tol: float = 1e-6,
) -> str:
    """Compare ||phi||_1 with sqrt(2) ||psi||_1: 'less', 'equal', or 'greater'."""
    _warn_if_not_unit_coefficients(params, "the norm trichotomy")
    lhs = sobolev_h1_norm(grid, fields.phi, rule)
    rhs = math.sqrt(2.0) * sobolev_h1_norm(grid, fields.psi, rule)
    scale = max(lhs, rhs, _TINY)
    if abs(lhs - rhs) <= rel_tol * scale:
        return "equal"
    return "less" if lhs < rhs else "greater"
