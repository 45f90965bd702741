"""Jacobi polynomials, Gauss-Jacobi and Jacobi-Gauss-Lobatto grids.

Node solving is Newton iteration on the three-term recurrence, started from
endpoint-corrected Chebyshev angles.  Parameter pairs with exact closed or
trigonometric root representations (alpha = beta in {-1/2, 1/2, 3/2}) bypass
the recurrence entirely, which keeps grid generation O(n) for the point
systems used at very large n.  All gamma-function arithmetic goes through
``math.lgamma`` so nothing overflows before the final exponential.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

GAUSS = "gauss"
LOBATTO = "lobatto"

_LN10 = math.log(10.0)


class ConvergenceError(RuntimeError):
    """Raised when the node solver fails to converge within its iteration cap."""


@dataclass(frozen=True)
class JacobiParams:
    """Exponent pair of the Jacobi weight (1-x)^alpha (1+x)^beta."""

    alpha: float
    beta: float

    def __post_init__(self):
        if not (self.alpha > -1.0 and self.beta > -1.0):
            raise ValueError(
                f"Jacobi exponents must exceed -1, got alpha={self.alpha}, beta={self.beta}"
            )

    @property
    def is_symmetric(self) -> bool:
        return self.alpha == self.beta


@dataclass(frozen=True)
class LogScaled:
    """A real number sign * 10**log10_magnitude; sign 0 encodes exact zero."""

    sign: int
    log10_magnitude: float

    def __post_init__(self):
        if self.sign not in (-1, 0, 1):
            raise ValueError(f"sign must be -1, 0 or +1, got {self.sign}")
        if self.sign == 0 and self.log10_magnitude != -math.inf:
            raise ValueError("zero value requires log10_magnitude == -inf")

    @classmethod
    def from_float(cls, value: float) -> "LogScaled":
        if value == 0.0:
            return cls(0, -math.inf)
        return cls(1 if value > 0 else -1, math.log10(abs(value)))

    def as_float(self) -> float:
        """Convert back to a double; may overflow to inf or underflow to 0."""
        if self.sign == 0:
            return 0.0
        return self.sign * 10.0 ** self.log10_magnitude


@dataclass(frozen=True)
class Grid:
    """A point system on [-1, 1] with its quadrature-derived weights.

    ``gauss_weights`` holds the Gaussian quadrature weights for a ``gauss``
    grid.  For a ``lobatto`` grid it holds the endpoint-fused quantities that
    the barycentric leading weights are built from (interior entries are the
    degree n-2 Gauss weight divided by 1-x^2, endpoint entries absorb the
    eta factor so they stay finite and positive for alpha or beta -> 0).
    """

    kind: str
    params: JacobiParams
    nodes: np.ndarray
    gauss_weights: np.ndarray

    @property
    def n(self) -> int:
        return self.nodes.size


def jacobi_eval(params: JacobiParams, degree: int, x):
    """Evaluate P_degree^(alpha,beta) and its first derivative at x.

    Accepts a scalar or array; exact for degree <= 1.
    """
    if degree < 0:
        raise ValueError("degree must be >= 0")
    scalar = np.isscalar(x)
    xv = np.atleast_1d(np.asarray(x, dtype=float))
    p, dp = _jacobi_value_derivative(params.alpha, params.beta, degree, xv)
    if scalar:
        return float(p[0]), float(dp[0])
    return p, dp


def _jacobi_value_derivative(alpha: float, beta: float, degree: int, x: np.ndarray):
    s = alpha + beta
    p_prev = np.ones_like(x)
    d_prev = np.zeros_like(x)
    if degree == 0:
        return p_prev, d_prev
    p_cur = 0.5 * (s + 2.0) * x + 0.5 * (alpha - beta)
    d_cur = np.full_like(x, 0.5 * (s + 2.0))
    for k in range(2, degree + 1):
        c1 = 2.0 * k * (k + s) * (2.0 * k + s - 2.0)
        c2 = (2.0 * k + s - 1.0) * (alpha * alpha - beta * beta)
        c3 = (2.0 * k + s - 1.0) * (2.0 * k + s) * (2.0 * k + s - 2.0)
        c4 = 2.0 * (k + alpha - 1.0) * (k + beta - 1.0) * (2.0 * k + s)
        lin = c2 + c3 * x
        p_new = (lin * p_cur - c4 * p_prev) / c1
        d_new = (lin * d_cur + c3 * p_cur - c4 * d_prev) / c1
        p_prev, p_cur = p_cur, p_new
        d_prev, d_cur = d_cur, d_new
    return p_cur, d_cur


def jacobi_weight_mass(params: JacobiParams) -> float:
    """Total mass of the Jacobi weight, int_{-1}^{1} (1-x)^a (1+x)^b dx."""
    a, b = params.alpha, params.beta
    return math.exp(
        (a + b + 1.0) * math.log(2.0)
        + math.lgamma(a + 1.0)
        + math.lgamma(b + 1.0)
        - math.lgamma(a + b + 2.0)
    )


def _log10_common_base(alpha: float, beta: float, n: int) -> float:
    s = alpha + beta
    ln = (
        math.lgamma(2.0 * n + s + 1.0)
        - (n + (s + 1.0) / 2.0) * math.log(2.0)
        - 0.5
        * (
            math.lgamma(n + 1.0)
            + math.lgamma(n + s + 1.0)
            + math.lgamma(n + alpha + 1.0)
            + math.lgamma(n + beta + 1.0)
        )
    )
    return ln / _LN10


def common_factor(params: JacobiParams, n: int, m: int) -> LogScaled:
    """m-th power of the exponentially large factor shared by all full weights.

    Returned in sign/log10 form; safe far beyond double range (n up to 1e6,
    m up to 64 and well past).  The base value carries sign +1 for odd n and
    -1 for even n.
    """
    if n < 1 or m < 1:
        raise ValueError("n and m must be >= 1")
    base = _log10_common_base(params.alpha, params.beta, n)
    sigma = 1 if n % 2 == 1 else -1
    return LogScaled(sigma ** m, m * base)


# ---------------------------------------------------------------------------
# node solving


def _initial_angles(alpha: float, beta: float, n: int) -> np.ndarray:
    # Chebyshev angles with the standard endpoint correction for (alpha, beta);
    # exact for alpha = beta = +-1/2, close enough elsewhere that Newton stays
    # inside each root's basin.
    k = np.arange(1, n + 1, dtype=float)
    return (k + 0.5 * alpha - 0.25) * math.pi / (n + 0.5 * (alpha + beta + 1.0))


def _newton_nodes(alpha: float, beta: float, n: int, max_iter: int = 50):
    """All roots of P_n^(alpha,beta), ascending, plus P' at the roots."""
    theta = _initial_angles(alpha, beta, n)
    x = np.cos(theta)  # descending in x
    # limit each Newton step to half the initial spacing so iterates cannot
    # hop into a neighbouring root's basin
    if n > 1:
        gap = np.empty(n)
        gap[:-1] = np.abs(np.diff(x))
        gap[-1] = gap[-2]
        gap[1:] = np.maximum(gap[1:], gap[:-1])
        max_step = 0.75 * gap
    else:
        max_step = np.array([1.0])
    tol = 1e-14
    converged = False
    for _ in range(max_iter):
        p, dp = _jacobi_value_derivative(alpha, beta, n, x)
        step = p / dp
        step = np.clip(step, -max_step, max_step)
        x = np.clip(x - step, -1.0, 1.0)
        if np.max(np.abs(step)) < tol:
            converged = True
            break
    if not converged:
        p, dp = _jacobi_value_derivative(alpha, beta, n, x)
        bad = int(np.argmax(np.abs(p / dp)))
        raise ConvergenceError(
            f"Newton solve for P_{n}^({alpha},{beta}) did not converge at node index {bad}"
        )
    # one polishing step at full length, then final derivative values
    p, dp = _jacobi_value_derivative(alpha, beta, n, x)
    x = x - p / dp
    x = x[::-1].copy()
    p, dp = _jacobi_value_derivative(alpha, beta, n, x)
    if np.any(np.diff(x) <= 0.0):
        raise ConvergenceError(
            f"Newton solve for P_{n}^({alpha},{beta}) produced non-distinct roots"
        )
    resid = np.abs(p) / np.maximum(np.abs(dp), 1e-300)
    if np.max(resid) > 1e-14:
        bad = int(np.argmax(resid))
        raise ConvergenceError(
            f"root residual {resid[bad]:.3e} at node index {bad} exceeds tolerance"
        )
    return x, dp


def _chebyshev_first_kind(n: int):
    # sine form keeps the set exactly symmetric in floating point
    k = np.arange(1, n + 1, dtype=float)
    x = np.sin((2.0 * k - n - 1.0) * math.pi / (2.0 * n))
    w = np.full(n, math.pi / n)
    return x, w


def _chebyshev_second_kind(n: int):
    k = np.arange(1, n + 1, dtype=float)
    x = np.sin((2.0 * k - n - 1.0) * math.pi / (2.0 * (n + 1.0)))
    w = math.pi / (n + 1.0) * (1.0 - x * x)
    return x, w


def _gegenbauer_two_nodes(n: int):
    """Roots of P_n^(3/2,3/2) (equivalently U'_{n+1}) with weight factors.

    The roots solve tan(M t) = M tan t with M = n + 2 for t in (0, pi);
    each lies in a bracket ((j+1/2)pi/M, (j+3/2)pi/M), so vectorised
    bisection plus two Newton polish steps is exact and O(n) overall.
    Returns nodes ascending and the Gauss weights (mass-normalised).
    """
    M = n + 2

    def f(t):
        return M * np.cos(M * t) * np.sin(t) - np.sin(M * t) * np.cos(t)

    half = n // 2
    j = np.arange(half, dtype=float)
    lo = (j + 0.5) * math.pi / M
    hi = (j + 1.5) * math.pi / M
    flo = f(lo)
    for _ in range(55):
        mid = 0.5 * (lo + hi)
        fmid = f(mid)
        take_lo = (flo * fmid) > 0.0
        lo = np.where(take_lo, mid, lo)
        flo = np.where(take_lo, fmid, flo)
        hi = np.where(take_lo, hi, mid)
    t = 0.5 * (lo + hi)
    for _ in range(2):
        fp = (1.0 - M * M) * np.sin(M * t) * np.sin(t)
        t = t - f(t) / fp
    if n % 2 == 1:
        t = np.concatenate([t, [0.5 * math.pi]])
    # theta in (0, pi/2] covers the non-negative x half (descending order)
    x_half = np.cos(t)
    u_half = np.sin(t) ** 4 / np.sin(M * t) ** 2
    if n % 2 == 1:
        x = np.concatenate([-x_half[:half], [0.0], x_half[:half][::-1]])
        u = np.concatenate([u_half[:half], [u_half[half]], u_half[:half][::-1]])
    else:
        x = np.concatenate([-x_half, x_half[::-1]])
        u = np.concatenate([u_half, u_half[::-1]])
    mass = 3.0 * math.pi / 8.0  # total Jacobi weight mass for alpha = beta = 3/2
    w = mass * u / np.sum(u)
    return x, w


def gauss_jacobi_grid(params: JacobiParams, n: int) -> Grid:
    """Nodes and Gaussian quadrature weights of the degree-n Gauss-Jacobi rule.

    Nodes are the roots of P_n^(alpha,beta), strictly ascending.  Weights come
    from the derivative identity w_k ~ 1/((1-x_k^2) P'(x_k)^2), normalised so
    they sum to the Jacobi weight's total mass.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    a, b = params.alpha, params.beta
    if a == b == -0.5:
        x, w = _chebyshev_first_kind(n)
    elif a == b == 0.5:
        x, w = _chebyshev_second_kind(n)
    elif a == b == 1.5:
        x, w = _gegenbauer_two_nodes(n)
    else:
        x, dp = _newton_nodes(a, b, n)
        u = 1.0 / ((1.0 - x * x) * dp * dp)
        if params.is_symmetric:
            # enforce exact symmetry of the computed set
            x = 0.5 * (x - x[::-1])
            if n % 2 == 1:
                x[n // 2] = 0.0
            u = 0.5 * (u + u[::-1])
        w = jacobi_weight_mass(params) * u / np.sum(u)
    return Grid(GAUSS, params, x, w)


def _lobatto_endpoint_factor(alpha: float, beta: float, interior_degree: int) -> float:
    # beta * what the quadrature-like endpoint quantity would be at x = -1;
    # the gamma(beta) pole cancels against eta = beta, leaving gamma(beta+1)^2
    nn = float(interior_degree)
    return math.exp(
        (alpha + beta - 1.0) * math.log(2.0)
        + 2.0 * math.lgamma(beta + 1.0)
        + math.lgamma(nn + alpha + 1.0)
        + math.lgamma(nn + 1.0)
        - math.lgamma(nn + beta + 1.0)
        - math.lgamma(nn + alpha + beta + 1.0)
    )


def lobatto_grid(params: JacobiParams, n: int) -> Grid:
    """The n-point Lobatto-type grid: +-1 plus the roots of P_{n-2}^(alpha,beta).

    ``gauss_weights`` stores the fused leading-weight factors (see Grid).
    """
    if n < 3:
        raise ValueError("lobatto grids need n >= 3")
    interior = gauss_jacobi_grid(params, n - 2)
    nodes = np.empty(n)
    nodes[0] = -1.0
    nodes[-1] = 1.0
    nodes[1:-1] = interior.nodes
    fused = np.empty(n)
    fused[1:-1] = interior.gauss_weights / (1.0 - interior.nodes ** 2)
    fused[0] = _lobatto_endpoint_factor(params.alpha, params.beta, n - 2)
    fused[-1] = _lobatto_endpoint_factor(params.beta, params.alpha, n - 2)
    return Grid(LOBATTO, params, nodes, fused)
