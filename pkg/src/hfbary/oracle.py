"""Independent baselines for arbitrary nodes and multiplicities.

``sv_weights`` is the Sadiq-Viswanath recursion: barycentric Hermite weights
from logarithmic-derivative power sums, O(n * sum n_k + sum n_k^2).  It runs
in plain double precision on purpose; its overflow behaviour at large n is
itself the subject of one of the experiments, so non-finite entries are
returned, never masked.

``newton_hermite_eval`` evaluates the Hermite interpolant through a confluent
divided-difference tableau.  Nodes are taken in the order given (no
reordering), so it is meant for the small sizes where that is harmless.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class MultiNodeSpec:
    """Distinct nodes with a positive derivative count (multiplicity) each."""

    nodes: np.ndarray
    multiplicities: np.ndarray

    def __init__(self, nodes, multiplicities):
        nodes = np.asarray(nodes, dtype=float)
        mult = np.asarray(multiplicities, dtype=int)
        if nodes.ndim != 1 or nodes.size != mult.size:
            raise ValueError("nodes and multiplicities must be 1-D and equally long")
        if np.unique(nodes).size != nodes.size:
            raise ValueError("nodes must be pairwise distinct")
        if np.any(mult < 1):
            raise ValueError("multiplicities must be >= 1")
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "multiplicities", mult)

    @property
    def total(self) -> int:
        return int(self.multiplicities.sum())


def sv_weights(spec: MultiNodeSpec) -> list[np.ndarray]:
    """Barycentric weights w[k][r], r < n_k, for the monic nodal polynomial.

    Returns one array per node.  Entries may be inf or nan when the leading
    products overflow; callers that care should check np.isfinite.
    """
    x = spec.nodes
    mult = spec.multiplicities
    n = x.size
    if n < 2:
        raise ValueError("need at least two nodes")
    out = []
    with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
        for k in range(n):
            dx = x[k] - np.delete(x, k)
            mj = np.delete(mult, k)
            ck = np.multiply.reduce(dx ** (-mj.astype(float)))
            nk = int(mult[k])
            iks = np.empty(nk)
            iks[0] = 1.0
            if nk > 1:
                powers = np.empty(nk)
                inv = -1.0 / dx  # (x_j - x_k)^(-1)
                acc = np.ones_like(dx)
                for r in range(1, nk):
                    acc = acc * inv
                    powers[r] = np.sum(mj * acc)
                for r in range(1, nk):
                    iks[r] = np.dot(powers[1 : r + 1], iks[r - 1 :: -1]) / r
            out.append(ck * iks)
    return out


def newton_hermite_eval(spec: MultiNodeSpec, data, x):
    """Hermite interpolant value at x from per-node derivative lists.

    ``data[k]`` lists f(x_k), f'(x_k), ..., one entry per prescribed
    derivative; lengths must match the multiplicities.
    """
    mult = spec.multiplicities
    if len(data) != spec.nodes.size:
        raise ValueError("one derivative list per node required")
    for k, row in enumerate(data):
        if len(row) != mult[k]:
            raise ValueError(
                f"node {k}: expected {mult[k]} derivative values, got {len(row)}"
            )
    z = np.repeat(spec.nodes, mult)
    size = z.size
    # tableau columns; confluent entries take f^(j)/j!
    fact = 1.0
    col = np.empty(size)
    pos = 0
    for k, row in enumerate(data):
        col[pos : pos + mult[k]] = row[0]
        pos += mult[k]
    coeffs = np.empty(size)
    coeffs[0] = col[0]
    for j in range(1, size):
        fact *= j
        new = np.empty(size - j)
        for i in range(size - j):
            if z[i + j] == z[i]:
                k = np.searchsorted(np.cumsum(mult), i, side="right")
                new[i] = data[k][j] / fact
            else:
                new[i] = (col[i + 1] - col[i]) / (z[i + j] - z[i])
        col = new
        coeffs[j] = col[0]

    xv = np.asarray(x, dtype=float)
    result = np.full_like(xv, coeffs[-1], dtype=float)
    for j in range(size - 2, -1, -1):
        result = result * (xv - z[j]) + coeffs[j]
    if np.isscalar(x):
        return float(result)
    return result
