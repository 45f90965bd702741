"""Benchmark functions with derivatives of every needed order.

Each entry supplies exact derivatives on [-1, 1]:

* ``runge``   1/(1+x^2), analytic; derivatives from the complex pole pair.
* ``expinv``  exp(-1/x^2) with the removable point at 0 set to 0 along with
  all derivatives there; derivatives elsewhere are P_j(1/x) exp(-1/x^2) with
  integer-coefficient polynomials P_j built once and cached.
* ``cusp``    1 - |x|^3, differentiable twice; no third derivative exists,
  so its stack stops at order 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np


@dataclass(frozen=True)
class TargetFunction:
    name: str
    max_order: Optional[int]  # highest derivative available; None = unlimited
    _kernel: Callable[[int, np.ndarray], np.ndarray] = field(repr=False)

    def derivative(self, order: int, x):
        if order < 0:
            raise ValueError("order must be >= 0")
        if self.max_order is not None and order > self.max_order:
            raise ValueError(f"{self.name} has no derivative of order {order}")
        scalar = np.isscalar(x)
        out = self._kernel(order, np.atleast_1d(np.asarray(x, dtype=float)))
        return float(out[0]) if scalar else out

    def __call__(self, x):
        return self.derivative(0, x)

    def derivative_stack(self, m: int):
        """Callables for orders 0..m-1, truncated at max_order when shorter.

        Returns (stack, truncated): truncated is True when some requested
        order does not exist and will be zero-filled by the data sampler.
        """
        top = m if self.max_order is None else min(m, self.max_order + 1)
        stack = [
            (lambda j: (lambda x: self.derivative(j, x)))(j) for j in range(top)
        ]
        return stack, top < m


def _runge_kernel(order: int, x: np.ndarray) -> np.ndarray:
    # 1/(1+x^2) = Im[1/(x - i)]; differentiating the pole term j times gives
    # (-1)^j j! (x - i)^(-j-1)
    z = (x - 1j) ** (-(order + 1))
    return ((-1.0) ** order) * math.factorial(order) * z.imag


_EXPINV_COEFFS: list[dict[int, int]] = [{0: 1}]


def _expinv_poly(order: int) -> dict[int, int]:
    # P_{j+1}(t) = -t^2 P_j'(t) + 2 t^3 P_j(t) where t = 1/x
    while len(_EXPINV_COEFFS) <= order:
        prev = _EXPINV_COEFFS[-1]
        nxt: dict[int, int] = {}
        for p, c in prev.items():
            if p:
                nxt[p + 1] = nxt.get(p + 1, 0) - p * c
            nxt[p + 3] = nxt.get(p + 3, 0) + 2 * c
        _EXPINV_COEFFS.append({p: c for p, c in nxt.items() if c})
    return _EXPINV_COEFFS[order]


def _expinv_kernel(order: int, x: np.ndarray) -> np.ndarray:
    out = np.zeros_like(x)
    nz = x != 0.0
    if not np.any(nz):
        return out
    xs = x[nz]
    t = 1.0 / xs
    log_t = np.log(np.abs(t))
    expo = -t * t
    sgn_t = np.sign(t)
    acc = np.zeros_like(xs)
    # term-wise exp keeps extreme t graceful: each term underflows to 0 on
    # its own instead of forming inf * 0
    for p, c in sorted(_expinv_poly(order).items()):
        acc += c * sgn_t ** (p % 2) * np.exp(p * log_t + expo)
    out[nz] = acc
    return out


def _cusp_kernel(order: int, x: np.ndarray) -> np.ndarray:
    if order == 0:
        return 1.0 - np.abs(x) ** 3
    if order == 1:
        return -3.0 * x * np.abs(x)
    return -6.0 * np.abs(x)


runge = TargetFunction("runge", None, _runge_kernel)
expinv = TargetFunction("expinv", None, _expinv_kernel)
cusp = TargetFunction("cusp", 2, _cusp_kernel)

FUNCTIONS = {f.name: f for f in (runge, expinv, cusp)}


def get_function(name: str) -> TargetFunction:
    try:
        return FUNCTIONS[name]
    except KeyError:
        raise ValueError(f"unknown function {name!r}; choose from {sorted(FUNCTIONS)}")
