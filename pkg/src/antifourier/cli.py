"""Command-line interface emitting JSON/CSV plot data.

Exit codes: 0 success, 1 numerical failure (non-convergent quadrature,
incompatible heat data), 2 flag or function-spec parse errors.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

import numpy as np

from . import io
from .antiperiodic import antiperiodic_coefficients, half_basis
from .catalog import evaluate, parse_function_spec
from .classical import classical_coefficients
from .diagnostics import (
    REPORT_COLUMNS,
    compare_orders,
    gibbs_overshoot,
    partial_sum,
)
from .errors import AntifourierError, ParseError, ValidationError
from .heat import HeatProblem, heat_eval, heat_eval_dx, solve_heat
from .quadrature import DEFAULT_CONFIG, QuadratureConfig

ENV_QUAD_TOL = "ANTIFOURIER_QUAD_TOL"

_EPILOG = f"""\
function spec grammar:
  poly:<c0>,<c1>,...      polynomial with ascending coefficients
  named:<id>[:<params>]   one of: identity, const:<c>, signum, x-plus-sign,
                          scaled-square
  csv:<path>              sampled x,y table (optional header row)

CSV column orders:
  coeffs   kind,n,cos,sin,gamma   (gamma empty for classical, sin empty at n=0)
  eval     x,f[,classical][,antiperiodic]
  compare  {",".join(REPORT_COLUMNS)}
  gibbs    series_kind,order,window_fraction,subgrid_points,overshoot
  heat     x,t,u[,ux]
  basis    n,x,cos,sin

The environment variable {ENV_QUAD_TOL} overrides the default quadrature
tolerance; the --quad-tol flag beats the environment variable.
"""


def _interval_type(text: str) -> float:
    if text.strip().lower() == "pi":
        return math.pi
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected a positive number or 'pi', got {text!r}"
        ) from None
    if not (math.isfinite(value) and value > 0.0):
        raise argparse.ArgumentTypeError(f"interval half-width must be positive, got {text!r}")
    return value


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}") from None
    if not (math.isfinite(value) and value > 0.0):
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text!r}")
    return value


def _any_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}") from None
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"expected a finite number, got {text!r}")
    return value


def _nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}")
    return value


def _grid_type(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 2:
        raise argparse.ArgumentTypeError("grid needs at least 2 points")
    return value


def _times_type(text: str):
    out = []
    for token in text.split(","):
        try:
            value = float(token)
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad time value {token!r}") from None
        if not (math.isfinite(value) and value >= 0.0):
            raise argparse.ArgumentTypeError(f"times must be nonnegative, got {token!r}")
        out.append(value)
    return tuple(out)


def _orders_type(text: str):
    out = []
    for token in text.split(","):
        try:
            value = int(token)
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad order {token!r}") from None
        if value < 0:
            raise argparse.ArgumentTypeError(f"orders must be nonnegative, got {token!r}")
        out.append(value)
    if not out:
        raise argparse.ArgumentTypeError("need at least one order")
    return tuple(out)


def _add_common(sub, with_function=True):
    if with_function:
        sub.add_argument("--function", required=True, help="function spec (see grammar below)")
    sub.add_argument(
        "--interval", required=True, type=_interval_type, metavar="L|pi",
        help="half-width L of the symmetric interval [-L, L]; 'pi' is accepted",
    )
    sub.add_argument(
        "--quad-tol", type=_positive_float, default=None,
        help="absolute quadrature tolerance (default 1e-10)",
    )
    sub.add_argument("--format", choices=("json", "csv"), default="json")
    sub.add_argument("--out", default=None, help="output path (written atomically)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="antifourier",
        description="Half-integer-harmonic Fourier series toolkit: coefficients, "
        "series evaluation, Gibbs/convergence diagnostics, and a heat solver "
        "with mean-value boundary conditions.",
        epilog=_EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeffs", help="compute series coefficients")
    _add_common(p)
    p.add_argument("--kind", choices=("classical", "anti", "both"), default="both")
    p.add_argument("--n", type=_nonneg_int, default=32, help="truncation order")

    p = sub.add_parser("eval", help="evaluate partial sums on a grid")
    _add_common(p)
    p.add_argument("--kind", choices=("classical", "anti", "both"), default="both")
    p.add_argument("--n", type=_nonneg_int, default=32, help="truncation order")
    p.add_argument("--grid", type=_grid_type, default=201, help="number of grid points")
    p.add_argument(
        "--coeffs-file", default=None,
        help="reuse coefficients from a 'coeffs --format json' output file",
    )

    p = sub.add_parser("compare", help="diagnostics ladder over truncation orders")
    _add_common(p)
    p.add_argument(
        "--orders", type=_orders_type, default=(10, 25, 50, 100, 200, 400),
        metavar="M1,M2,...", help="truncation orders (default 10,25,50,100,200,400)",
    )
    p.add_argument("--grid", type=_grid_type, default=2001, help="error-profile grid (odd)")
    p.add_argument("--window-fraction", type=_positive_float, default=0.1)
    p.add_argument("--subgrid", type=_grid_type, default=4001, help="overshoot window grid")

    p = sub.add_parser("gibbs", help="endpoint overshoot report")
    _add_common(p)
    p.add_argument("--kind", choices=("classical", "anti", "both"), default="both")
    p.add_argument("--n", type=_nonneg_int, default=400, help="truncation order")
    p.add_argument("--window-fraction", type=_positive_float, default=0.1)
    p.add_argument("--subgrid", type=_grid_type, default=4001, help="overshoot window grid")

    p = sub.add_parser("heat", help="solve the mean-value heat problem")
    _add_common(p)
    p.add_argument("--k", type=_positive_float, default=1.0, help="diffusivity")
    p.add_argument("--c", type=_any_float, default=1.0, help="boundary mean temperature")
    p.add_argument("--n", type=_nonneg_int, default=10, help="truncation order")
    p.add_argument("--times", type=_times_type, default=(0.0, 0.5, 1.0), metavar="T1,T2,...")
    p.add_argument("--grid", type=_grid_type, default=101, help="number of x grid points")
    p.add_argument("--flux", action="store_true", help="also emit the x-derivative column")

    p = sub.add_parser("basis", help="sample the half-integer basis functions")
    _add_common(p, with_function=False)
    p.add_argument("--n", type=_nonneg_int, default=4, help="largest basis index")
    p.add_argument("--grid", type=_grid_type, default=101, help="number of x grid points")

    return parser


def _quad_config(args) -> QuadratureConfig:
    tol = args.quad_tol
    if tol is None:
        env = os.environ.get(ENV_QUAD_TOL)
        if env is not None:
            try:
                tol = float(env)
            except ValueError:
                raise ValidationError(f"{ENV_QUAD_TOL} is not a number: {env!r}") from None
    if tol is None:
        return DEFAULT_CONFIG
    try:
        return QuadratureConfig(abs_tol=tol)
    except ValueError as exc:
        raise ValidationError(str(exc)) from exc


def _kinds(kind: str):
    if kind == "classical":
        return ("classical",)
    if kind == "anti":
        return ("antiperiodic",)
    return ("classical", "antiperiodic")


def _compute_series(spec, kinds, N, cfg):
    out = {}
    if "classical" in kinds:
        out["classical"] = classical_coefficients(spec, N, cfg)
    if "antiperiodic" in kinds:
        out["antiperiodic"] = antiperiodic_coefficients(spec, N, cfg)
    return out


def _cmd_coeffs(args, cfg) -> str:
    spec = parse_function_spec(args.function, args.interval)
    kinds = _kinds(args.kind)
    series = _compute_series(spec, kinds, args.n, cfg)
    if args.format == "json":
        if len(series) == 1:
            return io.dumps(next(iter(series.values()))) + "\n"
        return io.dumps(series) + "\n"
    rows = []
    for kind in kinds:
        obj = series[kind]
        if kind == "classical":
            rows.append(["classical", 0, obj.a[0], "", ""])
            rows.extend(
                ["classical", n, obj.a[n], obj.b[n - 1], ""] for n in range(1, obj.N + 1)
            )
        else:
            rows.extend(
                ["antiperiodic", n, obj.alpha[n], obj.beta[n], obj.gamma]
                for n in range(obj.N + 1)
            )
    return io.csv_text(("kind", "n", "cos", "sin", "gamma"), rows)


def _cmd_eval(args, cfg) -> str:
    spec = parse_function_spec(args.function, args.interval)
    kinds = _kinds(args.kind)
    if args.coeffs_file:
        loaded = io.load_coefficients(args.coeffs_file)
        series = {}
        for kind in kinds:
            if kind not in loaded:
                raise ValidationError(f"{args.coeffs_file}: missing {kind!r} coefficients")
            obj = loaded[kind]
            if obj.L != args.interval:
                raise ValidationError(
                    f"{args.coeffs_file}: coefficients use L={obj.L!r}, "
                    f"flags request L={args.interval!r}"
                )
            if obj.N < args.n:
                raise ValidationError(
                    f"{args.coeffs_file}: stored order {obj.N} is below --n {args.n}"
                )
            series[kind] = obj
    else:
        series = _compute_series(spec, kinds, args.n, cfg)
    xs = np.linspace(-args.interval, args.interval, args.grid)
    columns = {"x": xs, "f": evaluate(spec, xs)}
    for kind in kinds:
        columns[kind] = partial_sum(series[kind], xs, args.n)
    if args.format == "json":
        return json.dumps({key: np.asarray(col).tolist() for key, col in columns.items()}) + "\n"
    header = tuple(columns)
    rows = zip(*(np.asarray(col).tolist() for col in columns.values()))
    return io.csv_text(header, rows)


def _cmd_compare(args, cfg) -> str:
    if args.grid % 2 == 0 or args.grid < 3:
        raise ValidationError("--grid must be odd and at least 3 for compare")
    spec = parse_function_spec(args.function, args.interval)
    N = max(args.orders)
    series = _compute_series(spec, ("classical", "antiperiodic"), N, cfg)
    rows = compare_orders(
        spec,
        series["classical"],
        series["antiperiodic"],
        orders=args.orders,
        grid_size=args.grid,
        window_fraction=args.window_fraction,
        subgrid_points=args.subgrid,
    )
    if args.format == "json":
        return json.dumps([{c: getattr(r, c) for c in REPORT_COLUMNS} for r in rows]) + "\n"
    return io.report_csv(rows)


def _cmd_gibbs(args, cfg) -> str:
    spec = parse_function_spec(args.function, args.interval)
    kinds = _kinds(args.kind)
    series = _compute_series(spec, kinds, args.n, cfg)
    rows = [
        (
            kind,
            args.n,
            args.window_fraction,
            args.subgrid,
            gibbs_overshoot(spec, series[kind], args.n, args.window_fraction, args.subgrid),
        )
        for kind in kinds
    ]
    if args.format == "json":
        keys = ("series_kind", "order", "window_fraction", "subgrid_points", "overshoot")
        return json.dumps([dict(zip(keys, row)) for row in rows]) + "\n"
    return io.csv_text(
        ("series_kind", "order", "window_fraction", "subgrid_points", "overshoot"), rows
    )


def _cmd_heat(args, cfg) -> str:
    spec = parse_function_spec(args.function, args.interval)
    problem = HeatProblem(k=args.k, L=args.interval, boundary_mean=args.c, initial=spec)
    sol = solve_heat(problem, args.n, cfg)
    xs = np.linspace(-args.interval, args.interval, args.grid)
    u_rows = [heat_eval(sol, xs, t) for t in args.times]
    ux_rows = [heat_eval_dx(sol, xs, t) for t in args.times] if args.flux else None
    if args.format == "json":
        payload = {
            "solution": io.to_dict(sol),
            "x": xs.tolist(),
            "times": list(args.times),
            "u": [np.asarray(row).tolist() for row in u_rows],
        }
        if ux_rows is not None:
            payload["ux"] = [np.asarray(row).tolist() for row in ux_rows]
        return json.dumps(payload) + "\n"
    header = ("x", "t", "u", "ux") if args.flux else ("x", "t", "u")
    rows = []
    for j, t in enumerate(args.times):
        for i, x in enumerate(xs):
            row = [float(x), float(t), float(u_rows[j][i])]
            if ux_rows is not None:
                row.append(float(ux_rows[j][i]))
            rows.append(row)
    return io.csv_text(header, rows)


def _cmd_basis(args, cfg) -> str:
    del cfg  # basis sampling needs no quadrature
    xs = np.linspace(-args.interval, args.interval, args.grid)
    cos_rows = []
    sin_rows = []
    for n in range(args.n + 1):
        c, s = half_basis(n, args.interval, xs)
        cos_rows.append(np.asarray(c))
        sin_rows.append(np.asarray(s))
    if args.format == "json":
        return (
            json.dumps(
                {
                    "x": xs.tolist(),
                    "n": list(range(args.n + 1)),
                    "cos": [row.tolist() for row in cos_rows],
                    "sin": [row.tolist() for row in sin_rows],
                }
            )
            + "\n"
        )
    rows = []
    for n in range(args.n + 1):
        for i, x in enumerate(xs):
            rows.append([n, float(x), float(cos_rows[n][i]), float(sin_rows[n][i])])
    return io.csv_text(("n", "x", "cos", "sin"), rows)


_HANDLERS = {
    "coeffs": _cmd_coeffs,
    "eval": _cmd_eval,
    "compare": _cmd_compare,
    "gibbs": _cmd_gibbs,
    "heat": _cmd_heat,
    "basis": _cmd_basis,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        cfg = _quad_config(args)
        text = _HANDLERS[args.command](args, cfg)
    except (ParseError, ValidationError) as exc:
        print(f"antifourier: error: {exc}", file=sys.stderr)
        return 2
    except AntifourierError as exc:
        if args.format == "json":
            error = {"error": {"type": type(exc).__name__, "message": str(exc)}}
            sys.stdout.write(json.dumps(error) + "\n")
        print(f"antifourier: error: {exc}", file=sys.stderr)
        return 1
    if args.out:
        io.write_text_atomic(args.out, text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
