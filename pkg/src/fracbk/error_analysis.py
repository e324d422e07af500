"""Empirical error measurement and numeric evaluation of the error bounds.

Moduli of continuity are estimated on uniform grids, which gives a lower
bound of the true modulus; the bound checks therefore carry a small
explicit slack.  When no grid size is supplied the grid is sized adaptively
so that the shift window contains a useful number of steps even for very
small radii.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .basis import OperatorParams
from .errors import DomainError
from .operator_uni import apply_kernel, central_moments, eval_function, kernel_integrals

DEFAULT_MODULUS_GRID = 4001
_ADAPTIVE_TARGET = 32
_ADAPTIVE_CAP = 1_000_001
_SHIFT_EPS = 1e-9


@dataclass(frozen=True)
class ModulusEstimate:
    delta: float
    value: float
    grid_n: int


@dataclass(frozen=True, eq=False)
class ErrorTable:
    params: OperatorParams
    function: object
    rows: list
    max_error: float

    def to_csv(self, comments: tuple[str, ...] = ()) -> str:
        lines = [f"# {c}" for c in comments]
        lines.append("z,exact,approx,abs_error")
        for z, exact, approx, err in self.rows:
            lines.append(f"{z!r},{exact!r},{approx!r},{err!r}")
        lines.append(f"# max_error={self.max_error!r}")
        return "\n".join(lines) + "\n"


def _check_grid(grid_n: int) -> None:
    if grid_n < 101:
        raise DomainError(f"grid_n must be >= 101, got {grid_n}")


def _check_delta(delta: float) -> None:
    if delta < 0.0:
        raise DomainError(f"delta must be non-negative, got {delta}")


def _shift_count(delta: float, grid_n: int) -> int:
    return min(int(delta * (grid_n - 1) + _SHIFT_EPS), grid_n - 1)


def modulus_continuity(f, delta: float, grid_n: int = DEFAULT_MODULUS_GRID) -> ModulusEstimate:
    """Grid estimate of sup |f(u+h) - f(u)| over 0 < h <= delta."""
    _check_delta(delta)
    _check_grid(grid_n)
    fs = eval_function(f, np.linspace(0.0, 1.0, grid_n))
    best = 0.0
    for k in range(1, _shift_count(delta, grid_n) + 1):
        best = max(best, float(np.max(np.abs(fs[k:] - fs[:-k]))))
    return ModulusEstimate(delta, best, grid_n)


def second_modulus(f, delta: float, grid_n: int = DEFAULT_MODULUS_GRID) -> ModulusEstimate:
    """Grid estimate of sup |f(u+2h) - 2f(u+h) + f(u)| over 0 < h <= delta."""
    _check_delta(delta)
    _check_grid(grid_n)
    fs = eval_function(f, np.linspace(0.0, 1.0, grid_n))
    best = 0.0
    top = min(_shift_count(delta, grid_n), (grid_n - 1) // 2)
    for k in range(1, top + 1):
        best = max(best, float(np.max(np.abs(fs[2 * k :] - 2.0 * fs[k:-k] + fs[: -2 * k]))))
    return ModulusEstimate(delta, best, grid_n)


def _adaptive_grid_n(delta: float) -> int:
    """Grid size giving about _ADAPTIVE_TARGET shift steps within delta."""
    if delta <= 0.0:
        return DEFAULT_MODULUS_GRID
    n = int(math.ceil(_ADAPTIVE_TARGET / delta)) + 1
    return max(DEFAULT_MODULUS_GRID, min(n, _ADAPTIVE_CAP))


def bound_t2(params: OperatorParams, f, z: float, grid_n: int | None = None) -> float:
    """Error bound 2*omega(f; sqrt(xi2))."""
    delta = math.sqrt(central_moments(params, z).xi2)
    n = grid_n if grid_n is not None else _adaptive_grid_n(delta)
    return 2.0 * modulus_continuity(f, delta, n).value


def bound_lipschitz(params: OperatorParams, M: float, kappa: float, z: float) -> float:
    """Error bound M * xi2^(kappa/2) for f in the Lipschitz class (M, kappa)."""
    if M <= 0.0:
        raise DomainError(f"M must be positive, got {M}")
    if not 0.0 < kappa <= 1.0:
        raise DomainError(f"kappa must lie in (0, 1], got {kappa}")
    return M * central_moments(params, z).xi2 ** (kappa / 2.0)


def bound_kfunctional(params: OperatorParams, f, z: float, C: float, grid_n: int | None = None) -> float:
    """Error bound C*omega2(f; sqrt(xi2+zeta^2)/2) + omega(f; |zeta|).

    The constant C is not determined by the theory and must be supplied.
    """
    cm = central_moments(params, z)
    radius = 0.5 * math.sqrt(cm.xi2 + cm.zeta**2)
    n2 = grid_n if grid_n is not None else _adaptive_grid_n(radius)
    n1 = grid_n if grid_n is not None else _adaptive_grid_n(abs(cm.zeta))
    w2 = second_modulus(f, radius, n2).value
    w1 = modulus_continuity(f, abs(cm.zeta), n1).value
    return C * w2 + w1


def error_table(params: OperatorParams, f, z_values, order: int = 64) -> ErrorTable:
    """Pointwise exact/approximate values and absolute errors over z_values."""
    ki = kernel_integrals(params, f, order)
    rows = []
    for z in z_values:
        z = float(z)
        exact = float(eval_function(f, np.asarray(z)))
        approx = apply_kernel(ki, z)
        rows.append((z, exact, approx, abs(exact - approx)))
    max_err = max(row[3] for row in rows) if rows else 0.0
    return ErrorTable(params, f, rows, max_err)


def max_error(params: OperatorParams, f, grid_n: int = 1001, order: int = 64) -> float:
    """Maximum absolute error over a uniform grid on [0, 1]."""
    _check_grid(grid_n)
    zs = np.linspace(0.0, 1.0, grid_n)
    table = error_table(params, f, zs, order)
    return table.max_error
