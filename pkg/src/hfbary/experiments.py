"""Reproducible numerical studies: thresholds, convergence, normality, limits.

Every function here is deterministic (no randomness, sequential reductions),
returns plain row data, and leaves CSV rendering to the command-line layer.
"""

from __future__ import annotations

import math
from typing import Optional, Sequence

import numpy as np

from .evaluate import FEJER_ZERO, FULL_DATA, eval_second_form, sample_hermite_data
from .functions import get_function
from .jacobi import GAUSS, JacobiParams, common_factor, gauss_jacobi_grid, lobatto_grid
from .oracle import MultiNodeSpec, sv_weights
from .weights import SIMPLIFIED, ratio_table, simplified_leading_weights, weights_alg2

DEFAULT_EVAL_POINTS = 101  # x = -1, -0.98, ..., 1


def make_grid(system: str, params: JacobiParams, n: int):
    if system == GAUSS:
        return gauss_jacobi_grid(params, n)
    return lobatto_grid(params, n)


def evaluation_grid(points: int = DEFAULT_EVAL_POINTS) -> np.ndarray:
    return np.linspace(-1.0, 1.0, points)


def max_interpolation_error(
    fn_name: str,
    system: str,
    params: JacobiParams,
    n: int,
    m: int,
    data_mode: str = FULL_DATA,
    points: int = DEFAULT_EVAL_POINTS,
):
    """Sup-norm error of the degree mn-1 interpolant on the evaluation grid.

    Returns (max_error, truncated) where truncated reports whether the
    requested derivative orders exceeded what the function provides (the
    missing slots are zero-filled).
    """
    f = get_function(fn_name)
    grid = make_grid(system, params, n)
    table = weights_alg2(grid, m, SIMPLIFIED)
    stack, truncated = f.derivative_stack(m if data_mode == FULL_DATA else 1)
    data = sample_hermite_data(stack, grid, m, data_mode)
    xs = evaluation_grid(points)
    err = np.max(np.abs(eval_second_form(table, grid, data, xs) - f(xs)))
    return float(err), truncated and data_mode == FULL_DATA


def experiment_convergence(
    fn_name: str,
    system: str,
    params: JacobiParams,
    n_list: Sequence[int],
    m_list: Sequence[int],
    data_mode: str = FULL_DATA,
    points: int = DEFAULT_EVAL_POINTS,
):
    """Rows (n, m, max_error, data_mode, truncated) over the given sweeps."""
    header = ["n", "m", "max_error", "data_mode", "truncated_derivatives"]
    rows = []
    for m in m_list:
        for n in n_list:
            err, truncated = max_interpolation_error(
                fn_name, system, params, n, m, data_mode, points
            )
            rows.append((n, m, err, data_mode, truncated))
    return header, rows


def sv_has_nonfinite(params: JacobiParams, system: str, n: int, m: int) -> bool:
    grid = make_grid(system, params, n)
    spec = MultiNodeSpec(grid.nodes, np.full(grid.n, m))
    return any(not np.all(np.isfinite(row)) for row in sv_weights(spec))


def experiment_overflow(
    m: int,
    params: JacobiParams,
    system: str = GAUSS,
    n_cap: int = 4096,
) -> int:
    """Smallest n at which the power-sum weight recursion stops being finite.

    Binary search over n followed by a linear confirmation that the found
    threshold is minimal.
    """
    lo, hi = 4, 8
    while hi <= n_cap and not sv_has_nonfinite(params, system, hi, m):
        lo, hi = hi, hi * 2
    if hi > n_cap:
        raise RuntimeError(f"no overflow up to n={n_cap} for m={m}")
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if sv_has_nonfinite(params, system, mid, m):
            hi = mid
        else:
            lo = mid
    s = hi
    while s > 4 and sv_has_nonfinite(params, system, s - 1, m):
        s -= 1
    return s


def experiment_common_factor(
    params: JacobiParams, n_list: Sequence[int], m_list: Sequence[int]
):
    """Rows (n, m, sign, log10_mag) of the m-th common-factor power."""
    header = ["n", "m", "sign", "log10_mag"]
    rows = []
    for n in n_list:
        for m in m_list:
            c = common_factor(params, n, m)
            rows.append((n, m, c.sign, c.log10_magnitude))
    return header, rows


def experiment_normality(
    system: str, params: JacobiParams, n: int, x_points: int = 2001
):
    """Minimum of v_k(x) = 1 - (x - x_k) w''(x_k)/w'(x_k) over nodes and x.

    Positive minima characterise the point systems for which the classical
    fixed-derivative interpolation process converges.  Returns
    (min_value, argmin_x, argmin_node_index).
    """
    grid = make_grid(system, params, n)
    second_over_first = 2.0 * ratio_table(grid, 2)[:, 1]
    xs = np.linspace(-1.0, 1.0, x_points)
    v = 1.0 - (xs[None, :] - grid.nodes[:, None]) * second_over_first[:, None]
    k, ix = np.unravel_index(np.argmin(v), v.shape)
    return float(v[k, ix]), float(xs[ix]), int(k)


def experiment_failure_second_kind(
    n_list: Sequence[int],
    m_list: Sequence[int] = (2,),
    fn_name: str = "runge",
    points: int = DEFAULT_EVAL_POINTS,
):
    """Errors at the endpoint-including second-kind Chebyshev points.

    That grid is the alpha = beta = 1/2 Lobatto system; for m >= 2 the
    interpolation error stalls instead of converging.
    """
    params = JacobiParams(0.5, 0.5)
    header = ["n", "m", "max_error", "data_mode", "truncated_derivatives"]
    rows = []
    for m in m_list:
        for n in n_list:
            err, truncated = max_interpolation_error(
                fn_name, "lobatto", params, n, m, FULL_DATA, points
            )
            rows.append((n, m, err, FULL_DATA, truncated))
    return header, rows


def simplified_weights_ok(grid, m: int) -> bool:
    """True when every simplified weight is finite and nonzero."""
    with np.errstate(over="ignore", invalid="ignore", under="ignore"):
        table = weights_alg2(grid, m, SIMPLIFIED)
    v = table.values
    return bool(np.all(np.isfinite(v)) and not np.any(v == 0.0))


def experiment_stability_limit(
    system: str,
    params: JacobiParams,
    n_list: Sequence[int],
    m_cap: int = 64,
):
    """Rows (n, max_m): the largest m with fully finite, nonzero weights.

    Binary search on m for each n; the grid is built once per n.
    """
    header = ["n", "max_m"]
    rows = []
    for n in n_list:
        grid = make_grid(system, params, n)
        if not simplified_weights_ok(grid, 1):
            rows.append((n, 0))
            continue
        lo = 1
        hi = m_cap
        if simplified_weights_ok(grid, m_cap):
            rows.append((n, m_cap))
            continue
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if simplified_weights_ok(grid, mid):
                lo = mid
            else:
                hi = mid
        rows.append((n, lo))
    return header, rows
