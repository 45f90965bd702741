"""Scaled derivative ratios of the nodal polynomial, in O(m) per node.

For a grid's nodal polynomial w(x) = prod (x - x_k), the quantity

    M_r = w^(r+1)(x_k) / ((r+1)! w'(x_k))

drives both barycentric weight recursions.  At Gauss-Jacobi nodes the ratios
follow a two-term recursion obtained by differentiating the Sturm-Liouville
equation; at Lobatto nodes they combine shifted ratios of the interior
polynomial, with a dedicated one-term recursion at the endpoints.
"""

from __future__ import annotations

import numpy as np

from .jacobi import GAUSS, LOBATTO, Grid, JacobiParams


def series_divide(numer, denom, s: int) -> np.ndarray:
    """First s Taylor coefficients of the power series quotient numer/denom.

    Both inputs are coefficient sequences (index j multiplies t^j) of length
    at least s.  Raises ZeroDivisionError when denom[0] == 0.
    """
    a = np.asarray(numer, dtype=float)
    b = np.asarray(denom, dtype=float)
    if a.size < s or b.size < s:
        raise ValueError(f"need at least {s} coefficients on both sides")
    if b[0] == 0.0:
        raise ZeroDivisionError("leading denominator coefficient is zero")
    f = np.empty(s)
    for j in range(s):
        acc = a[j]
        for i in range(1, j + 1):
            acc -= b[i] * f[j - i]
        f[j] = acc / b[0]
    return f


def _root_ratio_rows(alpha: float, beta: float, degree: int, x: np.ndarray, m: int) -> np.ndarray:
    """M_0..M_{m-1} at roots x of P_degree^(alpha,beta), vectorised over x.

    Columns follow M_{r+1} from (M_r, M_{r-1}) with M_{-1} = 0 (the value of
    the polynomial itself vanishes at a root) and M_0 = 1.
    """
    s = alpha + beta
    one_minus = 1.0 - x * x
    out = np.empty((x.size, m))
    out[:, 0] = 1.0
    prev = np.zeros_like(x)  # M_{-1}
    cur = out[:, 0]
    nu = degree * (degree + s + 1.0)
    for r in range(m - 1):
        lin = ((s + 2.0 * (r + 1.0)) * x + (alpha - beta)) / (one_minus * (r + 2.0))
        drop = (r * (s + r + 1.0) - nu) / (one_minus * (r + 2.0) * (r + 1.0))
        nxt = lin * cur + drop * prev
        out[:, r + 1] = nxt
        prev, cur = cur, nxt
    return out


def gauss_ratio_table(params: JacobiParams, n: int, nodes: np.ndarray, m: int) -> np.ndarray:
    """Ratio rows for every Gauss-Jacobi node at once; shape (len(nodes), m)."""
    nodes = np.asarray(nodes, dtype=float)
    if np.any(np.abs(nodes) >= 1.0):
        raise ValueError("Gauss-Jacobi ratio recursion needs |x| < 1")
    if m < 1:
        raise ValueError("m must be >= 1")
    return _root_ratio_rows(params.alpha, params.beta, n, nodes, m)


def gauss_taylor_ratios(params: JacobiParams, n: int, x_k: float, m: int) -> np.ndarray:
    """M_0..M_{m-1} at a single Gauss-Jacobi node x_k."""
    return gauss_ratio_table(params, n, np.array([x_k]), m)[0]


def endpoint_derivative_ratios(params: JacobiParams, degree: int, end: int, m: int) -> np.ndarray:
    """e_r = P^(r)(s) / (r! P(s)) for s = end in {-1, +1}, r = 0..m-1.

    One-term recursion from the differentiated Sturm-Liouville relation
    evaluated at the endpoint, where the (1-x^2) term drops out.
    """
    if end not in (-1, 1):
        raise ValueError("end must be -1 or +1")
    a, b = params.alpha, params.beta
    s = a + b
    nu = degree * (degree + s + 1.0)
    e = np.empty(m)
    e[0] = 1.0
    for r in range(1, m):
        num = nu - (r - 1.0) * (s + r)
        den = r * (end * (s + 2.0 * r) + a - b)
        e[r] = num / den * e[r - 1]
    return e


def lobatto_ratio_table(grid: Grid, m: int) -> np.ndarray:
    """Ratio rows for every node of a Lobatto grid; shape (n, m)."""
    if grid.kind != LOBATTO:
        raise ValueError("grid must be a Lobatto grid")
    if m < 1:
        raise ValueError("m must be >= 1")
    params = grid.params
    n = grid.n
    deg = n - 2
    out = np.empty((n, m))
    out[:, 0] = 1.0
    if m == 1:
        return out

    x = grid.nodes[1:-1]
    # g_r = Q^(r)(x) / (r! Q'(x)) for the interior polynomial Q of degree n-2:
    # g_0 = 0 at a root, g_1 = 1, higher rows via the same recursion as the
    # Gauss case shifted by one order.
    g = np.zeros((x.size, m + 1))
    g[:, 1:] = _root_ratio_rows(params.alpha, params.beta, deg, x, m)
    inv = 1.0 / (x * x - 1.0)
    for j in range(1, m):
        out[1:-1, j] = g[:, j + 1] + 2.0 * x * inv * g[:, j] + inv * g[:, j - 1]

    for end, row in ((-1, 0), (1, n - 1)):
        e = endpoint_derivative_ratios(params, deg, end, m)
        half = 0.5 * float(end)
        for j in range(1, m):
            out[row, j] = e[j] + half * e[j - 1]
    return out


def lobatto_taylor_ratios(grid: Grid, node_index: int, m: int) -> np.ndarray:
    """M_0..M_{m-1} at one Lobatto node (0-based ascending index)."""
    if not 0 <= node_index < grid.n:
        raise IndexError(f"node_index {node_index} out of range for n={grid.n}")
    return lobatto_ratio_table(grid, m)[node_index]
