"""Evaluation of the Hermite interpolant from a weight table.

The second barycentric form is the workhorse: a ratio of two weighted sums in
powers of 1/(x - x_k), immune to any common rescaling of the weights, so it
pairs with simplified tables.  The first form (nodal polynomial times one
weighted sum) needs true-magnitude weights and exists here for small-n
validation; it reports a range error as soon as anything leaves the
representable range.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .jacobi import Grid
from .weights import FULL, SIMPLIFIED, BaryWeightTable

_CHUNK = 128


class NumericalRangeError(ArithmeticError):
    """A computation left the finite double range (or a contract was violated)."""


@dataclass(frozen=True)
class HermiteData:
    """values[k][j] = f^(j)(x_k) for j = 0..m-1 at each grid node."""

    values: np.ndarray

    def __init__(self, values):
        values = np.asarray(values, dtype=float)
        if values.ndim != 2:
            raise ValueError("values must be an n-by-m array")
        if not np.all(np.isfinite(values)):
            raise ValueError("derivative data must be finite")
        object.__setattr__(self, "values", values)

    @property
    def n(self) -> int:
        return self.values.shape[0]

    @property
    def m(self) -> int:
        return self.values.shape[1]


FULL_DATA = "full"
FEJER_ZERO = "fejer_zero"


def sample_hermite_data(derivs, grid: Grid, m: int, mode: str = FULL_DATA) -> HermiteData:
    """Fill the n-by-m data array for a function given by derivative callables.

    ``derivs`` is a single callable f (enough for ``fejer_zero`` mode, which
    zeroes every derivative slot) or a sequence where derivs[j] evaluates the
    j-th derivative.  In ``full`` mode, slots beyond the supplied callables
    are zero-filled, matching the classical convention for data that stops
    existing at some order.
    """
    if callable(derivs):
        derivs = [derivs]
    values = np.zeros((grid.n, m))
    values[:, 0] = derivs[0](grid.nodes)
    if mode == FULL_DATA:
        for j in range(1, min(m, len(derivs))):
            values[:, j] = derivs[j](grid.nodes)
    elif mode != FEJER_ZERO:
        raise ValueError(f"unknown data mode {mode!r}")
    return HermiteData(values)


def _scaled_data(data: HermiteData) -> np.ndarray:
    fact = np.array([math.factorial(j) for j in range(data.m)], dtype=float)
    return data.values / fact


def _check_shapes(table: BaryWeightTable, grid: Grid, data: HermiteData):
    if data.n != grid.n or data.n != table.n or data.m != table.m:
        raise ValueError(
            f"shape mismatch: grid n={grid.n}, table {table.n}x{table.m}, "
            f"data {data.n}x{data.m}"
        )


def _horner_rows(coeffs: np.ndarray, u: np.ndarray) -> np.ndarray:
    # sum_k coeffs[k,0] u_k^m + ... + coeffs[k,m-1] u_k, vectorised over
    # evaluation points (axis 0 of u)
    acc = np.broadcast_to(coeffs[:, 0], u.shape).copy()
    for j in range(1, coeffs.shape[1]):
        acc = acc * u + coeffs[:, j]
    return (acc * u).sum(axis=1)


def eval_second_form(table: BaryWeightTable, grid: Grid, data: HermiteData, x):
    """Interpolant value(s) at x via the second barycentric form.

    Requires a simplified table.  Points that hit a node bit-exactly return
    the stored function value; nearby points rely on the rational form's own
    cancellation, with no proximity threshold.
    """
    if table.scaling != SIMPLIFIED:
        raise NumericalRangeError(
            "second-form evaluation requires a simplified weight table"
        )
    _check_shapes(table, grid, data)
    w = table.values
    fd = _scaled_data(data)
    m = table.m
    # numerator coefficients in powers of u = 1/(x - x_k): column j multiplies
    # u^(m-j), a convolution of the weight row with the scaled data row
    g = np.zeros_like(w)
    for j in range(m):
        for s_ in range(j + 1):
            g[:, j] += w[:, j - s_] * fd[:, s_]

    scalar = np.isscalar(x)
    xv = np.atleast_1d(np.asarray(x, dtype=float))
    out = np.empty(xv.size)
    nodes = grid.nodes
    for start in range(0, xv.size, _CHUNK):
        xs = xv[start : start + _CHUNK]
        diff = xs[:, None] - nodes[None, :]
        hit_rows, hit_cols = np.nonzero(diff == 0.0)
        if hit_rows.size:
            diff[hit_rows, hit_cols] = 1.0
        u = 1.0 / diff
        num = _horner_rows(g, u)
        den = _horner_rows(w, u)
        vals = num / den
        if hit_rows.size:
            vals[hit_rows] = data.values[hit_cols, 0]
        out[start : start + _CHUNK] = vals
    if not np.all(np.isfinite(out)):
        raise NumericalRangeError("second-form evaluation produced a non-finite value")
    if scalar:
        return float(out[0])
    return out


def _full_table_as_floats(table: BaryWeightTable) -> np.ndarray:
    with np.errstate(over="ignore"):
        w = table.signs * 10.0 ** table.log10_mags
    bad = ~np.isfinite(w) | ((w == 0.0) & (table.signs != 0))
    if np.any(bad):
        k, r = np.argwhere(bad)[0]
        raise NumericalRangeError(
            f"full weight w[{k}][{r}] (sign {int(table.signs[k, r])}, "
            f"log10 {table.log10_mags[k, r]:.2f}) is outside double range"
        )
    return w


def eval_first_form(table: BaryWeightTable, grid: Grid, data: HermiteData, x):
    """Interpolant value(s) at x via the first barycentric form.

    Takes a full-scaling table, converts it to doubles, and multiplies by the
    nodal polynomial power; raises NumericalRangeError naming the offending
    factor whenever conversion or the product over- or underflows.  A
    validation path only; use the second form in earnest.
    """
    if table.scaling != FULL:
        raise ValueError("first-form evaluation requires a full-scaling table")
    _check_shapes(table, grid, data)
    w = _full_table_as_floats(table)
    fd = _scaled_data(data)
    m = table.m
    g = np.zeros_like(w)
    for j in range(m):
        for s_ in range(j + 1):
            g[:, j] += w[:, j - s_] * fd[:, s_]

    scalar = np.isscalar(x)
    xv = np.atleast_1d(np.asarray(x, dtype=float))
    out = np.empty(xv.size)
    nodes = grid.nodes
    for i, xi in enumerate(xv):
        diff = xi - nodes
        hit = np.nonzero(diff == 0.0)[0]
        if hit.size:
            out[i] = data.values[hit[0], 0]
            continue
        prod = np.multiply.reduce(diff)
        hstar = prod ** m
        if hstar == 0.0 or not math.isfinite(hstar):
            raise NumericalRangeError(
                f"nodal polynomial power at x={xi} evaluates to {hstar!r}"
            )
        u = 1.0 / diff
        acc = g[:, 0].copy()
        for j in range(1, m):
            acc = acc * u + g[:, j]
        total = float(np.sum(acc * u))
        val = hstar * total
        if not math.isfinite(val):
            raise NumericalRangeError(
                f"first-form accumulation at x={xi} left the double range"
            )
        out[i] = val
    if scalar:
        return float(out[0])
    return out
