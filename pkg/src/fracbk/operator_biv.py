"""Tensor-product bivariate operator, its moments and error bounds.

The kernel integral matrix is computed once per function with a tensor
Gauss-Jacobi rule and reused for every evaluation point, so full surface
grids cost one matrix product per row of points.  Moduli of continuity on
[0,1]^2 are grid estimates, sized adaptively from the requested radius when
no grid is given.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .basis import OperatorParams, basis_row
from .errors import DomainError, QuadratureError
from .exprlib import FunctionExpr, evaluate
from .operator_uni import central_moments, raw_moments
from .quadrature import gauss_jacobi_rule

_PARTIAL_TARGET = 16
_COMPLETE_TARGET = 12
_BIV_GRID_CAP = 641
_DEFAULT_BIV_GRID = 241
_SHIFT_EPS = 1e-9


@dataclass(frozen=True)
class BivariateParams:
    px: OperatorParams
    py: OperatorParams


@dataclass(frozen=True, eq=False)
class BivKernelIntegrals:
    bp: BivariateParams
    values: np.ndarray


@dataclass(frozen=True)
class BivMoments:
    e00: float
    e10: float
    e01: float
    e11: float
    e20: float
    e02: float


def eval_function2(F, zv, yv) -> np.ndarray:
    """Evaluate a bivariate expression or callable on broadcastable arrays."""
    vals = evaluate(F, zv, yv) if isinstance(F, FunctionExpr) else F(zv, yv)
    vals = np.asarray(vals, dtype=float)
    target = np.broadcast_shapes(np.shape(zv), np.shape(yv))
    if vals.shape != target:
        vals = np.broadcast_to(vals, target)
    return vals


def biv_kernel_integrals(bp: BivariateParams, F, order: int = 64) -> BivKernelIntegrals:
    """The (m1+1) x (m2+1) matrix of tensor kernel integrals of F."""
    px, py = bp.px, bp.py
    rule1 = gauss_jacobi_rule(px.eta, order)
    rule2 = gauss_jacobi_rule(py.eta, order)
    x_args = (np.arange(px.m + 1)[:, None] + rule1.nodes[None, :] ** px.gamma) / (px.m + 1.0)
    y_args = (np.arange(py.m + 1)[:, None] + rule2.nodes[None, :] ** py.gamma) / (py.m + 1.0)
    values = np.empty((px.m + 1, py.m + 1))
    for j1 in range(px.m + 1):
        vals = eval_function2(F, x_args[j1][:, None, None], y_args[None, :, :])
        if not np.all(np.isfinite(vals)):
            raise QuadratureError("bivariate kernel integrand produced non-finite values")
        values[j1] = np.einsum("a,abc,c->b", rule1.weights, vals, rule2.weights)
    values.setflags(write=False)
    return BivKernelIntegrals(bp, values)


def apply_biv_kernel(ki: BivKernelIntegrals, z: float, y: float) -> float:
    bz = basis_row(ki.bp.px, z).weights
    by = basis_row(ki.bp.py, y).weights
    return float(bz @ ki.values @ by)


def apply_biv(bp: BivariateParams, F, z: float, y: float, order: int = 64) -> float:
    """Bivariate operator value at one point; use surface_values for grids."""
    return apply_biv_kernel(biv_kernel_integrals(bp, F, order), z, y)


def surface_values(bp: BivariateParams, F, zs, ys, order: int = 64) -> np.ndarray:
    """Operator values on the product grid zs x ys, shape (len(zs), len(ys))."""
    ki = biv_kernel_integrals(bp, F, order)
    bz = np.array([basis_row(bp.px, float(z)).weights for z in zs])
    by = np.array([basis_row(bp.py, float(y)).weights for y in ys])
    return bz @ ki.values @ by.T


def biv_moments(bp: BivariateParams, z: float, y: float) -> BivMoments:
    """Closed-form images of the monomials z^u y^v, u+v <= 2, which factor
    into products of univariate moments."""
    mx = raw_moments(bp.px, z)
    my = raw_moments(bp.py, y)
    return BivMoments(1.0, mx.e1, my.e1, mx.e1 * my.e1, mx.e2, my.e2)


def _check_grid(grid_n: int) -> None:
    if grid_n < 101:
        raise DomainError(f"grid_n must be >= 101 per axis, got {grid_n}")


def _check_delta(d: float) -> None:
    if d < 0.0:
        raise DomainError(f"modulus radius must be non-negative, got {d}")


def _adaptive_grid_n(d: float, target: int) -> int:
    if d <= 0.0:
        return _DEFAULT_BIV_GRID
    n = int(math.ceil(target / d)) + 1
    return max(101, min(n, _BIV_GRID_CAP))


def _grid_values(F, grid_n: int) -> np.ndarray:
    u = np.linspace(0.0, 1.0, grid_n)
    return eval_function2(F, u[:, None], u[None, :])


def partial_moduli(F, d1: float, d2: float, grid_n: int | None = None) -> tuple[float, float]:
    """Grid estimates of the two partial moduli of continuity."""
    _check_delta(d1)
    _check_delta(d2)
    if grid_n is None:
        grid_n = _adaptive_grid_n(max(min(d1, d2), 0.0) or max(d1, d2), _PARTIAL_TARGET)
    _check_grid(grid_n)
    G = _grid_values(F, grid_n)
    k1 = min(int(d1 * (grid_n - 1) + _SHIFT_EPS), grid_n - 1)
    k2 = min(int(d2 * (grid_n - 1) + _SHIFT_EPS), grid_n - 1)
    w1 = 0.0
    for k in range(1, k1 + 1):
        w1 = max(w1, float(np.max(np.abs(G[k:, :] - G[:-k, :]))))
    w2 = 0.0
    for k in range(1, k2 + 1):
        w2 = max(w2, float(np.max(np.abs(G[:, k:] - G[:, :-k]))))
    return w1, w2


def complete_modulus(F, d: float, grid_n: int | None = None) -> float:
    """Grid estimate of sup |F(v) - F(u)| over pairs with |v-u| <= d.

    Cost grows as (d*grid_n)^2 slices of a grid_n^2 array; the adaptive
    default keeps d*grid_n near the target, so prefer it over large
    explicit grids when d is not small.
    """
    _check_delta(d)
    if grid_n is None:
        grid_n = _adaptive_grid_n(d, _COMPLETE_TARGET)
    _check_grid(grid_n)
    G = _grid_values(F, grid_n)
    h = 1.0 / (grid_n - 1)
    kmax = min(int(d / h + _SHIFT_EPS), grid_n - 1)
    limit = (d / h) ** 2 + _SHIFT_EPS
    best = 0.0
    for a in range(0, kmax + 1):
        bs = range(1, kmax + 1) if a == 0 else range(-kmax, kmax + 1)
        for b in bs:
            if a * a + b * b > limit or (a == 0 and b == 0):
                continue
            if b >= 0:
                diff = G[a:, b:] - G[: grid_n - a, : grid_n - b]
            else:
                diff = G[a:, : grid_n + b] - G[: grid_n - a, -b:]
            best = max(best, float(np.max(np.abs(diff))))
    return best


def bound_complete(bp: BivariateParams, F, z: float, y: float, grid_n: int | None = None) -> float:
    """Error bound 4*omega_complete(F; sqrt(xi2_x + xi2_y))."""
    d = math.sqrt(central_moments(bp.px, z).xi2 + central_moments(bp.py, y).xi2)
    return 4.0 * complete_modulus(F, d, grid_n)


def bound_partial(bp: BivariateParams, F, z: float, y: float, grid_n: int | None = None) -> float:
    """Error bound 2*(omega_1(F; sqrt(xi2_x)) + omega_2(F; sqrt(xi2_y)))."""
    d1 = math.sqrt(central_moments(bp.px, z).xi2)
    d2 = math.sqrt(central_moments(bp.py, y).xi2)
    w1, w2 = partial_moduli(F, d1, d2, grid_n)
    return 2.0 * (w1 + w2)


def surface_rows(bp: BivariateParams, F, zs, ys, order: int = 64):
    """Row-major (z, y, exact, approx, abs_error) tuples over the grid."""
    approx = surface_values(bp, F, zs, ys, order)
    rows = []
    max_err = 0.0
    for i, z in enumerate(zs):
        for k, y in enumerate(ys):
            exact = float(eval_function2(F, np.asarray(float(z)), np.asarray(float(y))))
            err = abs(exact - float(approx[i, k]))
            max_err = max(max_err, err)
            rows.append((float(z), float(y), exact, float(approx[i, k]), err))
    return rows, max_err
