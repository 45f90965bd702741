"""Command-line front end: grids, weight tables, interpolation, experiments.

Everything prints CSV (UTF-8, header row, 17 significant digits; log-scaled
numbers as sign and log10 magnitude columns).  Exit status 0 on success, 2 on
usage errors, 3 when a numerical contract is violated.
"""

from __future__ import annotations

import argparse
import csv
import sys

import numpy as np

from . import experiments as xp
from .evaluate import FEJER_ZERO, FULL_DATA, NumericalRangeError
from .jacobi import GAUSS, LOBATTO, ConvergenceError, JacobiParams
from .oracle import MultiNodeSpec, sv_weights
from .weights import FULL, SIMPLIFIED, weights_alg1, weights_alg2

USAGE_ERROR = 2
NUMERICAL_ERROR = 3


def _fmt(value) -> str:
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return format(float(value), ".17g")
    return str(value)


def _write_csv(header, rows, out_path: str):
    def emit(stream):
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([_fmt(v) for v in row])

    if out_path == "stdout":
        emit(sys.stdout)
    else:
        with open(out_path, "w", encoding="utf-8", newline="") as fh:
            emit(fh)


def _params(args) -> JacobiParams:
    return JacobiParams(args.alpha, args.beta)


def _int_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _add_shared(parser, *names):
    if "alpha" in names:
        parser.add_argument("--alpha", type=float, default=-0.5, help="Jacobi exponent at +1")
    if "beta" in names:
        parser.add_argument("--beta", type=float, default=-0.5, help="Jacobi exponent at -1")
    if "n" in names:
        parser.add_argument("--n", type=int, required=True, help="number of nodes")
    if "m" in names:
        parser.add_argument("--m", type=int, default=2, help="derivative count per node")
    if "system" in names:
        parser.add_argument("--system", choices=[GAUSS, LOBATTO], default=GAUSS)
    if "algorithm" in names:
        parser.add_argument("--algorithm", choices=["1", "2", "sv"], default="2")
    if "scaling" in names:
        parser.add_argument("--scaling", choices=[SIMPLIFIED, FULL], default=SIMPLIFIED)
    if "fn" in names:
        parser.add_argument("--fn", choices=["runge", "expinv", "cusp"], default="runge")
    parser.add_argument("--out", default="stdout", help="output path or 'stdout'")


def _cmd_nodes(args) -> int:
    grid = xp.make_grid(args.system, _params(args), args.n)
    header = ["k", "node", "gauss_weight"]
    rows = [(k + 1, grid.nodes[k], grid.gauss_weights[k]) for k in range(grid.n)]
    _write_csv(header, rows, args.out)
    return 0


def _cmd_weights(args) -> int:
    grid = xp.make_grid(args.system, _params(args), args.n)
    if args.algorithm == "sv":
        spec = MultiNodeSpec(grid.nodes, np.full(grid.n, args.m))
        wk = sv_weights(spec)
        header = ["k", "r", "weight"]
        rows = [(k + 1, r, wk[k][r]) for k in range(grid.n) for r in range(args.m)]
        _write_csv(header, rows, args.out)
        return 0
    builder = weights_alg1 if args.algorithm == "1" else weights_alg2
    table = builder(grid, args.m, args.scaling)
    if args.scaling == SIMPLIFIED:
        header = ["k", "r", "weight"]
        rows = [
            (k + 1, r, table.values[k, r]) for k in range(grid.n) for r in range(args.m)
        ]
    else:
        header = ["k", "r", "sign", "log10_mag"]
        rows = [
            (k + 1, r, int(table.signs[k, r]), table.log10_mags[k, r])
            for k in range(grid.n)
            for r in range(args.m)
        ]
    _write_csv(header, rows, args.out)
    return 0


def _cmd_interp(args) -> int:
    mode = FULL_DATA if args.data == "full" else FEJER_ZERO
    err, truncated = xp.max_interpolation_error(
        args.fn, args.system, _params(args), args.n, args.m, mode, args.points
    )
    header = [
        "fn", "system", "alpha", "beta", "n", "m",
        "points", "data_mode", "truncated_derivatives", "max_error",
    ]
    rows = [
        (args.fn, args.system, args.alpha, args.beta, args.n, args.m,
         args.points, mode, truncated, err)
    ]
    _write_csv(header, rows, args.out)
    return 0


def _cmd_experiment(args) -> int:
    params = _params(args)
    if args.name == "overflow":
        s = xp.experiment_overflow(args.m, params, args.system)
        _write_csv(
            ["system", "alpha", "beta", "m", "threshold"],
            [(args.system, args.alpha, args.beta, args.m, s)],
            args.out,
        )
    elif args.name == "convergence":
        header, rows = xp.experiment_convergence(
            args.fn, args.system, params, args.n_list, args.m_list,
            FULL_DATA if args.data == "full" else FEJER_ZERO, args.points,
        )
        _write_csv(header, rows, args.out)
    elif args.name == "common-factor":
        header, rows = xp.experiment_common_factor(params, args.n_list, args.m_list)
        _write_csv(header, rows, args.out)
    elif args.name == "normality":
        vmin, arg_x, arg_k = xp.experiment_normality(
            args.system, params, args.n, args.x_points
        )
        _write_csv(
            ["system", "alpha", "beta", "n", "x_points", "min_v", "argmin_x", "argmin_k"],
            [(args.system, args.alpha, args.beta, args.n, args.x_points, vmin, arg_x, arg_k + 1)],
            args.out,
        )
    elif args.name == "failure-second-kind":
        header, rows = xp.experiment_failure_second_kind(
            args.n_list, args.m_list, args.fn, args.points
        )
        _write_csv(header, rows, args.out)
    else:  # stability-limit
        header, rows = xp.experiment_stability_limit(
            args.system, params, args.n_list, args.m_cap
        )
        _write_csv(header, rows, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hfbary",
        description="Barycentric weights and interpolation at Jacobi-type grids",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("nodes", help="grid nodes and quadrature weights")
    _add_shared(p, "alpha", "beta", "n", "system")
    p.set_defaults(func=_cmd_nodes)

    p = sub.add_parser("weights", help="barycentric weight table")
    _add_shared(p, "alpha", "beta", "n", "m", "system", "algorithm", "scaling")
    p.set_defaults(func=_cmd_weights)

    p = sub.add_parser("interp", help="interpolation error for a benchmark function")
    _add_shared(p, "alpha", "beta", "n", "m", "system", "fn")
    p.add_argument("--data", choices=["full", "fejer"], default="full")
    p.add_argument("--points", type=int, default=xp.DEFAULT_EVAL_POINTS)
    p.set_defaults(func=_cmd_interp)

    p = sub.add_parser("experiment", help="reproducible numerical studies")
    p.add_argument(
        "name",
        choices=[
            "overflow", "convergence", "common-factor",
            "normality", "failure-second-kind", "stability-limit",
        ],
    )
    _add_shared(p, "alpha", "beta", "m", "system", "fn")
    p.add_argument("--n", type=int, default=50)
    p.add_argument("--n-list", type=_int_list, default=[10, 20, 40, 80])
    p.add_argument("--m-list", type=_int_list, default=[2])
    p.add_argument("--data", choices=["full", "fejer"], default="full")
    p.add_argument("--points", type=int, default=xp.DEFAULT_EVAL_POINTS)
    p.add_argument("--x-points", type=int, default=2001)
    p.add_argument("--m-cap", type=int, default=64)
    p.set_defaults(func=_cmd_experiment)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (NumericalRangeError, ConvergenceError, ZeroDivisionError) as exc:
        print(f"hfbary: numerical contract violation: {exc}", file=sys.stderr)
        return NUMERICAL_ERROR
    except ValueError as exc:
        parser.exit(USAGE_ERROR, f"hfbary: {exc}\n")


if __name__ == "__main__":
    sys.exit(main())
