"""Barycentric Hermite interpolation at Gauss-Jacobi and Lobatto point systems.

The package computes the n-by-m table of barycentric weights for m-fold
Hermite data in O(n m^2) operations, cancels the exponentially large common
factor so the table stays in double range at very large n, and evaluates the
interpolant through the rescaling-immune second barycentric form.
"""

from .evaluate import (
    FEJER_ZERO,
    FULL_DATA,
    HermiteData,
    NumericalRangeError,
    eval_first_form,
    eval_second_form,
    sample_hermite_data,
)
from .functions import FUNCTIONS, TargetFunction, get_function
from .jacobi import (
    GAUSS,
    LOBATTO,
    ConvergenceError,
    Grid,
    JacobiParams,
    LogScaled,
    common_factor,
    gauss_jacobi_grid,
    jacobi_eval,
    jacobi_weight_mass,
    lobatto_grid,
)
from .oracle import MultiNodeSpec, newton_hermite_eval, sv_weights
from .taylor import (
    endpoint_derivative_ratios,
    gauss_ratio_table,
    gauss_taylor_ratios,
    lobatto_ratio_table,
    lobatto_taylor_ratios,
    series_divide,
)
from .weights import (
    FULL,
    SIMPLIFIED,
    BaryWeightTable,
    explicit_low_order,
    ratio_table,
    simplified_leading_weights,
    weights_alg1,
    weights_alg2,
)

__version__ = "0.1.0"

__all__ = [
    "BaryWeightTable",
    "ConvergenceError",
    "FEJER_ZERO",
    "FULL",
    "FULL_DATA",
    "FUNCTIONS",
    "GAUSS",
    "Grid",
    "HermiteData",
    "JacobiParams",
    "LOBATTO",
    "LogScaled",
    "MultiNodeSpec",
    "NumericalRangeError",
    "SIMPLIFIED",
    "TargetFunction",
    "common_factor",
    "endpoint_derivative_ratios",
    "eval_first_form",
    "eval_second_form",
    "explicit_low_order",
    "gauss_jacobi_grid",
    "gauss_ratio_table",
    "gauss_taylor_ratios",
    "get_function",
    "jacobi_eval",
    "jacobi_weight_mass",
    "lobatto_grid",
    "lobatto_ratio_table",
    "lobatto_taylor_ratios",
    "newton_hermite_eval",
    "ratio_table",
    "sample_hermite_data",
    "series_divide",
    "simplified_leading_weights",
    "sv_weights",
    "weights_alg1",
    "weights_alg2",
]
