"""Preset experiment datasets: error tables 1-7 and figure datasets 1-6.

Each preset carries its full parameter set and emits a deterministic CSV
(comment lines prefixed with '#', numbers printed with repr so they
round-trip losslessly).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .basis import OperatorParams, basis_row
from .corpus import BUILTINS, get_function
from .errors import DomainError
from .operator_biv import BivariateParams, biv_kernel_integrals, eval_function2
from .operator_uni import DEFAULT_ORDER, apply_kernel, eval_function, kernel_integrals

NINE_POINTS = tuple(round(0.1 * k, 1) for k in range(1, 10))


@dataclass(frozen=True, eq=False)
class Dataset:
    name: str
    meta: tuple[str, ...]
    columns: tuple[str, ...]
    rows: tuple[tuple, ...]


def _cell(v) -> str:
    if isinstance(v, str):
        return v
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    return repr(float(v))


def to_csv(ds: Dataset) -> str:
    lines = [f"# {line}" for line in ds.meta]
    lines.append(",".join(ds.columns))
    lines.extend(",".join(_cell(v) for v in row) for row in ds.rows)
    return "\n".join(lines) + "\n"


def _label(prefix: str, value) -> str:
    if isinstance(value, (int, np.integer)):
        return f"{prefix}{int(value)}"
    return f"{prefix}{str(float(value)).replace('.', '')}"


def _uni_errors(params: OperatorParams, fn: str, zs, order: int) -> np.ndarray:
    f = get_function(fn)
    ki = kernel_integrals(params, f, order)
    zs = np.asarray(zs, dtype=float)
    exact = eval_function(f, zs)
    approx = np.array([apply_kernel(ki, float(z)) for z in zs])
    return np.abs(exact - approx)


def _biv_errors(p: OperatorParams, fn: str, pts, order: int) -> np.ndarray:
    F = get_function(fn)
    ki = biv_kernel_integrals(BivariateParams(p, p), F, order)
    out = np.empty(len(pts))
    for i, (z, y) in enumerate(pts):
        bz = basis_row(p, z).weights
        by = basis_row(p, y).weights
        exact = float(eval_function2(F, np.asarray(z), np.asarray(y)))
        out[i] = abs(exact - float(bz @ ki.values @ by))
    return out


def _uni_error_table(name, fn, base, sweep_name, sweep, make_params, order) -> Dataset:
    columns = ["z"] + [_label("err_" + sweep_name[0], v) for v in sweep]
    errs = [_uni_errors(make_params(v), fn, NINE_POINTS, order) for v in sweep]
    rows = tuple(
        (z, *(e[i] for e in errs)) for i, z in enumerate(NINE_POINTS)
    )
    meta = (
        name,
        f"function {fn} = {BUILTINS[fn]}",
        base,
        f"{sweep_name} values: {', '.join(str(v) for v in sweep)}",
        f"order={order}",
    )
    return Dataset(name, meta, tuple(columns), rows)


def _biv_error_table(name, fn, base, sweep_name, sweep, make_params, order) -> Dataset:
    pts = [(z, z) for z in NINE_POINTS]
    columns = ["z", "y"] + [_label("err_" + sweep_name[0], v) for v in sweep]
    errs = [_biv_errors(make_params(v), fn, pts, order) for v in sweep]
    rows = tuple((z, y, *(e[i] for e in errs)) for i, (z, y) in enumerate(pts))
    meta = (
        name,
        f"function {fn} = {BUILTINS[fn]}",
        base,
        f"{sweep_name} values: {', '.join(str(v) for v in sweep)}",
        f"order={order}",
    )
    return Dataset(name, meta, tuple(columns), rows)


def comparator_params(m, eta, gamma, alpha, s, bbk_gamma=None):
    """Derive the four comparison operators from one base parameter set.

    rlgbk keeps the base parameters; rlbk sets gamma=1, s=2; bbk sets eta=1
    (gamma overridable); fbk sets gamma=eta=1, s=2.
    """
    return (
        ("rlbk", OperatorParams(m, eta, 1.0, alpha, 2)),
        ("bbk", OperatorParams(m, 1.0, gamma if bbk_gamma is None else bbk_gamma, alpha, s)),
        ("fbk", OperatorParams(m, 1.0, 1.0, alpha, 2)),
        ("rlgbk", OperatorParams(m, eta, gamma, alpha, s)),
    )


def compare_rows(fn, m_values, eta, gamma, alpha, s, z_values, order=DEFAULT_ORDER,
                 bbk_gamma=None):
    """One row per m: the largest error over z_values for each comparator."""
    rows = []
    for m in m_values:
        row = [int(m)]
        for _tag, params in comparator_params(int(m), eta, gamma, alpha, s, bbk_gamma):
            row.append(float(np.max(_uni_errors(params, fn, z_values, order))))
        rows.append(tuple(row))
    return tuple(rows)


def _table4(order: int) -> Dataset:
    eta, gamma, alpha, s = 2.0, 3.0, 0.9, 2
    m_values = (10, 20, 40, 80)
    rows = compare_rows("f4", m_values, eta, gamma, alpha, s, [0.2], order, bbk_gamma=2.0)
    meta = (
        "table 4",
        f"function f4 = {BUILTINS['f4']}",
        f"base eta={eta} gamma={gamma} alpha={alpha} s={s}",
        "errors at z=0.2; bbk comparator uses gamma=2",
        f"order={order}",
    )
    return Dataset("table4", meta, ("m", "rlbk", "bbk", "fbk", "rlgbk"), rows)


def table_dataset(which: int, order: int = DEFAULT_ORDER) -> Dataset:
    if which == 1:
        return _uni_error_table(
            "table 1", "f1", "eta=2 gamma=4 alpha=0.9 s=3", "m", (40, 100, 250),
            lambda m: OperatorParams(m, 2.0, 4.0, 0.9, 3), order)
    if which == 2:
        return _uni_error_table(
            "table 2", "f2", "m=90 eta=3 gamma=2 s=3", "alpha", (0.35, 0.65, 0.95),
            lambda a: OperatorParams(90, 3.0, 2.0, a, 3), order)
    if which == 3:
        return _uni_error_table(
            "table 3", "f3", "m=70 eta=3 gamma=2 alpha=0.75", "s", (8, 5, 2),
            lambda s: OperatorParams(70, 3.0, 2.0, 0.75, s), order)
    if which == 4:
        return _table4(order)
    if which == 5:
        return _biv_error_table(
            "table 5", "g1", "eta=2 gamma=3 alpha=0.9 s=2 (both axes)", "m", (10, 30, 90),
            lambda m: OperatorParams(m, 2.0, 3.0, 0.9, 2), order)
    if which == 6:
        return _biv_error_table(
            "table 6", "g2", "m=15 eta=2 gamma=2 s=2 (both axes)", "alpha", (0.1, 0.5, 0.9),
            lambda a: OperatorParams(15, 2.0, 2.0, a, 2), order)
    if which == 7:
        return _biv_error_table(
            "table 7", "g3", "m=15 eta=3 gamma=2 alpha=0.8 (both axes)", "s", (9, 6, 3),
            lambda s: OperatorParams(15, 3.0, 2.0, 0.8, s), order)
    raise DomainError(f"table number must be in 1..7, got {which}")


def _uni_figure(name, fn, base, sweep_name, sweep, make_params, order) -> Dataset:
    zs = np.linspace(0.0, 1.0, 201)
    f = get_function(fn)
    phi = eval_function(f, zs)
    columns = ["z", "phi"] + [_label("op_" + sweep_name[0], v) for v in sweep]
    ops = []
    for v in sweep:
        ki = kernel_integrals(make_params(v), f, order)
        ops.append(np.array([apply_kernel(ki, float(z)) for z in zs]))
    rows = tuple(
        (float(zs[i]), float(phi[i]), *(op[i] for op in ops)) for i in range(len(zs))
    )
    meta = (
        name,
        f"function {fn} = {BUILTINS[fn]}",
        base,
        f"{sweep_name} values: {', '.join(str(v) for v in sweep)}",
        f"order={order}",
    )
    return Dataset(name, meta, tuple(columns), rows)


def _biv_figure(name, fn, base, sweep_name, sweep, make_params, order) -> Dataset:
    u = np.linspace(0.0, 1.0, 41)
    F = get_function(fn)
    phi = eval_function2(F, u[:, None], u[None, :])
    columns = ["z", "y", "phi"] + [_label("op_" + sweep_name[0], v) for v in sweep]
    surfaces = []
    for v in sweep:
        p = make_params(v)
        ki = biv_kernel_integrals(BivariateParams(p, p), F, order)
        b = np.array([basis_row(p, float(t)).weights for t in u])
        surfaces.append(b @ ki.values @ b.T)
    rows = []
    for i in range(41):
        for k in range(41):
            rows.append((float(u[i]), float(u[k]), float(phi[i, k]),
                         *(float(surf[i, k]) for surf in surfaces)))
    meta = (
        name,
        f"function {fn} = {BUILTINS[fn]}",
        base,
        f"{sweep_name} values: {', '.join(str(v) for v in sweep)}",
        f"order={order}",
    )
    return Dataset(name, meta, tuple(columns), tuple(rows))


def figure_dataset(which: int, order: int = DEFAULT_ORDER) -> Dataset:
    if which == 1:
        return _uni_figure(
            "figure 1", "f1", "eta=3 gamma=3 alpha=0.9 s=4", "m", (20, 30, 70),
            lambda m: OperatorParams(m, 3.0, 3.0, 0.9, 4), order)
    if which == 2:
        return _uni_figure(
            "figure 2", "f2", "m=10 eta=2 gamma=3 s=4", "alpha", (0.35, 0.65, 0.95),
            lambda a: OperatorParams(10, 2.0, 3.0, a, 4), order)
    if which == 3:
        return _uni_figure(
            "figure 3", "f3", "m=10 eta=3 gamma=2 alpha=0.75", "s", (2, 5, 8),
            lambda s: OperatorParams(10, 3.0, 2.0, 0.75, s), order)
    if which == 4:
        return _biv_figure(
            "figure 4", "g1", "eta=2 gamma=3 alpha=0.9 s=2 (both axes)", "m", (10, 30, 90),
            lambda m: OperatorParams(m, 2.0, 3.0, 0.9, 2), order)
    if which == 5:
        return _biv_figure(
            "figure 5", "g2", "m=15 eta=2 gamma=2 s=2 (both axes)", "alpha", (0.1, 0.5, 0.9),
            lambda a: OperatorParams(15, 2.0, 2.0, a, 2), order)
    if which == 6:
        return _biv_figure(
            "figure 6", "g3", "m=15 eta=3 gamma=2 alpha=0.8 (both axes)", "s", (9, 6, 3),
            lambda s: OperatorParams(15, 3.0, 2.0, 0.8, s), order)
    raise DomainError(f"figure number must be in 1..6, got {which}")
