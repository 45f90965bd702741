"""Independent baselines used by the test suite.

Held apart from the package on purpose: everything here takes a different
route to the same quantities (eigenvalue quadrature, exact rational
polynomial expansion, direct product formulas), so agreement is evidence,
not tautology.
"""

import math
from fractions import Fraction

import numpy as np
from scipy.linalg import eigh_tridiagonal


def golub_welsch(alpha, beta, n):
    """Gauss-Jacobi nodes and weights via the symmetric tridiagonal eigenproblem."""
    s = alpha + beta
    a = np.empty(n)
    b = np.empty(max(n - 1, 0))
    a[0] = (beta - alpha) / (s + 2.0)
    for k in range(1, n):
        a[k] = (beta * beta - alpha * alpha) / ((2.0 * k + s) * (2.0 * k + s + 2.0))
    if n > 1:
        b[0] = math.sqrt(4.0 * (1 + alpha) * (1 + beta) / ((2 + s) ** 2 * (3 + s)))
    for k in range(2, n):
        num = 4.0 * k * (k + alpha) * (k + beta) * (k + s)
        den = (2.0 * k + s) ** 2 * (2.0 * k + s + 1.0) * (2.0 * k + s - 1.0)
        b[k - 1] = math.sqrt(num / den)
    mass = math.exp(
        (s + 1.0) * math.log(2.0)
        + math.lgamma(alpha + 1.0)
        + math.lgamma(beta + 1.0)
        - math.lgamma(s + 2.0)
    )
    vals, vecs = eigh_tridiagonal(a, b)
    return vals, mass * vecs[0] ** 2


def monic_coeffs_exact(nodes):
    """Coefficients (index = power) of prod (x - x_k) in exact rationals."""
    coeffs = [Fraction(1)]
    for xj in nodes:
        fx = Fraction(float(xj))
        new = [Fraction(0)] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            new[i + 1] += c
            new[i] -= c * fx
        coeffs = new
    return coeffs


def _poly_derivative(coeffs):
    return [coeffs[i] * i for i in range(1, len(coeffs))]


def _poly_eval(coeffs, x):
    val = Fraction(0)
    for c in reversed(coeffs):
        val = val * x + c
    return val


def exact_taylor_ratios(nodes, x_k, m):
    """w^(r+1)(x_k)/((r+1)! w'(x_k)) for r = 0..m-1, exactly, then floats.

    The nodes are taken at their double-precision values and everything else
    is rational, so the only inexactness is the final float conversion.
    """
    coeffs = monic_coeffs_exact(nodes)
    fx = Fraction(float(x_k))
    cur = coeffs
    derivs = []
    for order in range(1, m + 1):
        cur = _poly_derivative(cur)
        derivs.append(_poly_eval(cur, fx) / math.factorial(order))
    return np.array([float(d / derivs[0]) for d in derivs])


def poly_multiply(a, b):
    """Coefficient convolution; oracle for truncated series division."""
    out = np.zeros(len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return out


def lagrange_bary_eval(nodes, values, x):
    """Independent barycentric Lagrange evaluator with direct product weights."""
    nodes = np.asarray(nodes, dtype=float)
    w = np.empty(nodes.size)
    for k in range(nodes.size):
        w[k] = 1.0 / np.prod(nodes[k] - np.delete(nodes, k))
    xv = np.atleast_1d(np.asarray(x, dtype=float))
    out = np.empty(xv.size)
    for i, xi in enumerate(xv):
        diff = xi - nodes
        hit = np.nonzero(diff == 0.0)[0]
        if hit.size:
            out[i] = values[hit[0]]
            continue
        q = w / diff
        out[i] = np.sum(q * values) / np.sum(q)
    return out if np.ndim(x) else float(out[0])


def poly_derivative_stack(coeffs, m):
    """Derivative callables of a numpy Polynomial-style coefficient array."""
    from numpy.polynomial import Polynomial

    p = Polynomial(coeffs)
    out = []
    for _ in range(m):
        out.append((lambda q: (lambda x: q(x)))(p))
        p = p.deriv()
    return out
