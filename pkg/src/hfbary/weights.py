"""Barycentric weight tables for m-fold Hermite data on Jacobi-type grids.

Two O(n m^2) routes produce the n-by-m table w[k][r]:

* ``weights_alg1`` expands the m-th power of the cardinal function around
  each node and inverts that series;
* ``weights_alg2`` expands the reciprocal power directly, which skips the
  inversion step and is the better-conditioned production path.

Tables come in ``simplified`` scaling (the exponentially large factor common
to every entry is cancelled, so plain doubles suffice even at n = 10^6) or
``full`` scaling (true magnitudes, kept as sign/log10 pairs because they
overflow doubles long before n reaches interesting sizes).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .jacobi import GAUSS, LOBATTO, Grid, JacobiParams, LogScaled, _log10_common_base
from .taylor import gauss_ratio_table, lobatto_ratio_table

SIMPLIFIED = "simplified"
FULL = "full"


@dataclass(frozen=True)
class BaryWeightTable:
    """n-by-m barycentric weights, plus the grid identity they belong to.

    ``values`` holds plain doubles for simplified scaling.  Full scaling uses
    the parallel ``signs``/``log10_mags`` arrays instead (values is None).
    """

    kind: str
    params: JacobiParams
    n: int
    m: int
    scaling: str
    values: np.ndarray | None = None
    signs: np.ndarray | None = None
    log10_mags: np.ndarray | None = None

    def entry(self, k: int, r: int):
        """Weight w[k][r]: a float for simplified tables, LogScaled for full."""
        if self.scaling == SIMPLIFIED:
            return float(self.values[k, r])
        return LogScaled(int(self.signs[k, r]), float(self.log10_mags[k, r]))

    def rescaled(self, factor: float) -> "BaryWeightTable":
        """Copy with every weight multiplied by one nonzero constant."""
        if self.scaling != SIMPLIFIED:
            raise ValueError("rescaling is only supported for simplified tables")
        if factor == 0.0:
            raise ValueError("factor must be nonzero")
        return replace(self, values=self.values * factor)


def ratio_table(grid: Grid, m: int) -> np.ndarray:
    """Nodal-polynomial derivative ratios M[k][r] for every grid node."""
    if grid.kind == GAUSS:
        return gauss_ratio_table(grid.params, grid.n, grid.nodes, m)
    return lobatto_ratio_table(grid, m)


def simplified_leading_weights(grid: Grid, m: int) -> np.ndarray:
    """w[k][0] with the common factor cancelled: (-1)^(m(k+1)) q_k^(m/2).

    q_k is (1-x_k^2) w_k for a Gauss grid and the fused endpoint quantity for
    a Lobatto grid; both are stored on the grid as ``gauss_weights``.
    """
    if grid.kind == GAUSS:
        q = (1.0 - grid.nodes ** 2) * grid.gauss_weights
    else:
        q = grid.gauss_weights
    w0 = q ** (0.5 * m)
    if m % 2 == 1:
        # (-1)^(k+1) against the ascending node order, k 1-based
        w0[1::2] *= -1.0
    return w0


def _columns_alg1(M: np.ndarray, m: int) -> np.ndarray:
    """w[k][r]/w[k][0] by expanding the cardinal power and inverting it."""
    nn = M.shape[0]
    c = np.zeros((nn, m))
    c[:, 0] = 1.0
    if m == 1:
        return c
    a = np.zeros((nn, m))
    b = np.zeros((nn, m))
    b[:, 0] = 1.0
    for i in range(1, m):
        acc = i * m * M[:, i].copy()
        for j in range(1, i):
            acc -= a[:, j] * M[:, i - j]
        a[:, i] = acc
    for i in range(1, m):
        acc = np.zeros(nn)
        for v in range(1, i + 1):
            acc += a[:, v] * b[:, i - v]
        b[:, i] = acc / i
    for i in range(1, m):
        acc = np.zeros(nn)
        for j in range(0, i):
            acc -= c[:, j] * b[:, i - j]
        c[:, i] = acc
    return c


def _columns_alg2(M: np.ndarray, m: int) -> np.ndarray:
    """w[k][r]/w[k][0] by expanding the reciprocal cardinal power directly."""
    nn = M.shape[0]
    bt = np.zeros((nn, m))
    bt[:, 0] = 1.0
    if m == 1:
        return bt
    at = np.zeros((nn, m))
    for i in range(1, m):
        acc = -i * m * M[:, i].copy()
        for j in range(1, i):
            acc -= at[:, j] * M[:, i - j]
        at[:, i] = acc
    for i in range(1, m):
        acc = np.zeros(nn)
        for v in range(1, i + 1):
            acc += at[:, v] * bt[:, i - v]
        bt[:, i] = acc / i
    return bt


def _assemble(grid: Grid, m: int, scaling: str, columns: np.ndarray) -> BaryWeightTable:
    w0 = simplified_leading_weights(grid, m)
    values = columns * w0[:, None]
    if scaling == SIMPLIFIED:
        return BaryWeightTable(grid.kind, grid.params, grid.n, m, SIMPLIFIED, values=values)
    if scaling != FULL:
        raise ValueError(f"unknown scaling {scaling!r}")
    deg = grid.n if grid.kind == GAUSS else grid.n - 2
    base = _log10_common_base(grid.params.alpha, grid.params.beta, deg)
    sigma = 1 if deg % 2 == 1 else -1
    csign = sigma ** m
    with np.errstate(divide="ignore"):
        mags = np.log10(np.abs(values)) + m * base
    signs = np.sign(values).astype(np.int8) * csign
    return BaryWeightTable(
        grid.kind, grid.params, grid.n, m, FULL, signs=signs, log10_mags=mags
    )


def weights_alg1(grid: Grid, m: int, scaling: str = SIMPLIFIED) -> BaryWeightTable:
    """Weight table via cardinal-power expansion plus series inversion."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return _assemble(grid, m, scaling, _columns_alg1(ratio_table(grid, m), m))


def weights_alg2(grid: Grid, m: int, scaling: str = SIMPLIFIED) -> BaryWeightTable:
    """Weight table via direct reciprocal-power expansion (recommended)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return _assemble(grid, m, scaling, _columns_alg2(ratio_table(grid, m), m))


def explicit_low_order(grid: Grid, m: int) -> BaryWeightTable:
    """Closed-form simplified tables for m in {2, 3, 4}.

    Written directly in the nodal derivative ratios (w''/w' = 2 M_1 and so
    on), independent of the series recursions, so it doubles as their
    cross-check.
    """
    if m not in (2, 3, 4):
        raise ValueError("explicit forms exist for m in {2, 3, 4} only")
    M = ratio_table(grid, m)
    cols = np.empty((grid.n, m))
    cols[:, 0] = 1.0
    M1 = M[:, 1]
    if m == 2:
        cols[:, 1] = -2.0 * M1
    elif m == 3:
        M2 = M[:, 2]
        cols[:, 1] = -3.0 * M1
        cols[:, 2] = -3.0 * M2 + 6.0 * M1 ** 2
    else:
        M2, M3 = M[:, 2], M[:, 3]
        cols[:, 1] = -4.0 * M1
        cols[:, 2] = -4.0 * M2 + 10.0 * M1 ** 2
        cols[:, 3] = -4.0 * M3 + 20.0 * M1 * M2 - 20.0 * M1 ** 3
    return _assemble(grid, m, SIMPLIFIED, cols)
