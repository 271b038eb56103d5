"""Command-line front end.

    foxeq run --check <names|all> [--zeros PATH] [--tol-scale X] [--max-zeros N]
              [--contour-height T] [--report PATH] [--parallel]
    foxeq curves --name <curve> --from A --to B --step S --out PATH [--no-plot]

Exit status of ``run``: 0 all checks pass, 1 some check fails, 2 unknown
check name, 3 unreadable or invalid zeros file.  ``curves`` exits 2 on a bad
curve name or grid, 3 on a bad zeros file and 4 when the output cannot be
written.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import asdict, dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from . import __version__
from .errors import FoxError, ZeroTableError
from .identities import REGISTRY, CheckContext, CheckResult, check_names, run_checks
from .specfun import mobius_exponential, riemann_R_exp
from .zeros import ZeroSumConfig, alternating_zeta_series, default_zeros_path, load_zeros, waldvogel_rhs, zero_sum_f

TOOL = "foxeq"
SCHEMA = 1

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_ZEROS, EXIT_IO = 0, 1, 2, 3, 4


@dataclass(frozen=True)
class RunConfig:
    check: str
    zeros_path: Optional[str] = None
    tol_scale: float = 1.0
    max_zeros: int = 30
    contour_height: Optional[float] = None
    report_path: Optional[str] = None
    csv_path: Optional[str] = None
    parallel: bool = False

    def selected(self) -> List[str]:
        if self.check.strip() == "all":
            return check_names()
        return [n.strip() for n in self.check.split(",") if n.strip()]


def build_report(cfg: RunConfig, results: Sequence[CheckResult], timestamp: Optional[str] = None) -> dict:
    passed = sum(r.passed for r in results)
    if timestamp is None:
        timestamp = datetime.now(timezone.utc).replace(microsecond=0).isoformat().replace("+00:00", "Z")
    return {
        "schema": SCHEMA,
        "tool": TOOL,
        "version": __version__,
        "timestamp": timestamp,
        "config": asdict(cfg),
        "results": [r.to_dict() for r in results],
        "summary": {"passed": passed, "failed": len(results) - passed},
    }


def _format_params(params: Dict) -> str:
    parts = []
    for k, v in params.items():
        if k.endswith("_error") or k in ("laplace_route", "seed"):
            continue
        parts.append(f"{k}={v:.6g}" if isinstance(v, float) else f"{k}={v}")
    return " ".join(parts)


def _print_table(results: Sequence[CheckResult], out) -> None:
    head = f"{'check':24s} {'params':34s} {'lhs':>22s} {'rhs':>22s} {'abs_err':>9s} {'tol':>8s}  status"
    print(head, file=out)
    print("-" * len(head), file=out)
    for r in results:
        print(f"{r.name:24s} {_format_params(r.params)[:34]:34s} {r.lhs:22.15g} {r.rhs:22.15g} "
              f"{r.abs_err:9.2e} {r.tolerance:8.1e}  {'PASS' if r.passed else 'FAIL'}", file=out)


def cmd_run(args) -> int:
    cfg = RunConfig(check=args.check, zeros_path=args.zeros, tol_scale=args.tol_scale,
                    max_zeros=args.max_zeros, contour_height=args.contour_height,
                    report_path=args.report, parallel=args.parallel)
    names = cfg.selected()
    unknown = [n for n in names if n not in REGISTRY]
    if unknown or not names:
        print(f"unknown check name(s): {', '.join(unknown) or '(none given)'}", file=sys.stderr)
        print("valid names: all, " + ", ".join(check_names()), file=sys.stderr)
        return EXIT_USAGE
    try:
        ctx = CheckContext(tol_scale=cfg.tol_scale, max_zeros=cfg.max_zeros,
                           contour_height_override=cfg.contour_height)
    except FoxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    specs = [REGISTRY[n] for n in dict.fromkeys(names)]
    table = None
    if any(s.resources == "zeros" for s in specs):
        path = cfg.zeros_path or default_zeros_path()
        try:
            table = load_zeros(path)
        except (OSError, ZeroTableError) as exc:
            print(f"cannot use zeros file {path}: {exc}", file=sys.stderr)
            return EXIT_ZEROS
        cfg = RunConfig(**{**asdict(cfg), "zeros_path": path})
    results = run_checks(specs, table, ctx, parallel=cfg.parallel, record_errors=True)
    _print_table(results, sys.stdout)
    report = build_report(cfg, results)
    summary = report["summary"]
    print(f"\n{summary['passed']} passed, {summary['failed']} failed")
    if cfg.report_path:
        try:
            Path(cfg.report_path).write_text(json.dumps(report, indent=2) + "\n", encoding="utf-8")
        except OSError as exc:
            print(f"cannot write report: {exc}", file=sys.stderr)
            return EXIT_IO
    return EXIT_OK if summary["failed"] == 0 else EXIT_FAIL


# ---------------------------------------------------------------------------
# curves


def _theorem21(xs, table, zcfg):
    lhs = np.pi * mobius_exponential(2.0 * np.pi * xs)
    rhs = -zero_sum_f(xs, table, zcfg) + np.array([alternating_zeta_series(x) for x in xs])
    return [lhs, rhs]


def _waldvogel(ts, table, zcfg):
    return [riemann_R_exp(-2.0 * np.pi * ts), np.array([waldvogel_rhs(t, table, zcfg) for t in ts])]


def _delta(ys, table, zcfg):
    return [mobius_exponential(ys)]


def _zero_sum(xs, table, zcfg):
    return [zero_sum_f(xs, table, zcfg)]


# name -> (abscissa, value columns, needs zeros, function)
CURVES: Dict[str, Tuple[str, Tuple[str, ...], bool, Callable]] = {
    "theorem21": ("x", ("pi_delta_2pix", "minus_f_plus_series"), True, _theorem21),
    "waldvogel": ("t", ("gram_R", "waldvogel_rhs"), True, _waldvogel),
    "delta": ("y", ("delta",), False, _delta),
    "zero_sum": ("x", ("f",), True, _zero_sum),
}


def curve_grid(start: float, stop: float, step: float) -> np.ndarray:
    """start, start + step, ... up to stop inclusive (empty for a bad range)."""
    if not (math.isfinite(start) and math.isfinite(stop) and math.isfinite(step)) or step <= 0 or stop < start:
        return np.empty(0)
    n = int(math.floor((stop - start) / step + 1e-9)) + 1
    return start + step * np.arange(n)


def format_csv(header: Sequence[str], rows: np.ndarray) -> str:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join("%.17g" % v for v in row))
    return "\n".join(lines) + "\n"


def emit_curves(name: str, csv_path: str, grid: np.ndarray, table=None,
                zero_cfg: ZeroSumConfig = ZeroSumConfig(), plot: bool = True) -> Tuple[str, Optional[str]]:
    """Write the CSV (and a PNG with the same stem); returns both paths."""
    if name not in CURVES:
        raise KeyError(f"unknown curve {name!r}; valid: {', '.join(sorted(CURVES))}")
    if len(grid) == 0:
        raise ValueError("empty grid")
    abscissa, columns, needs_zeros, fn = CURVES[name]
    if needs_zeros and table is None:
        table = load_zeros()
    grid = np.asarray(grid, dtype=float)
    rows = np.column_stack([grid] + [np.asarray(c, dtype=float) for c in fn(grid, table, zero_cfg)])
    header = (abscissa,) + columns
    text = format_csv(header, rows)
    Path(csv_path).write_text(text, encoding="utf-8")
    png = None
    if plot:
        from .plotting import plot_curves

        png = str(Path(csv_path).with_suffix(".png"))
        plot_curves(header, rows, png, title=name)
    return csv_path, png


def cmd_curves(args) -> int:
    if args.name not in CURVES:
        print(f"unknown curve {args.name!r}; valid curves: {', '.join(sorted(CURVES))}", file=sys.stderr)
        return EXIT_USAGE
    grid = curve_grid(args.start, args.stop, args.step)
    if len(grid) == 0:
        print("error: empty grid (need step > 0 and --to >= --from)", file=sys.stderr)
        return EXIT_USAGE
    table = None
    if CURVES[args.name][2]:
        path = args.zeros or default_zeros_path()
        try:
            table = load_zeros(path)
        except (OSError, ZeroTableError) as exc:
            print(f"cannot use zeros file {path}: {exc}", file=sys.stderr)
            return EXIT_ZEROS
    try:
        csv_path, png = emit_curves(args.name, args.out, grid, table, ZeroSumConfig(max_zeros=args.max_zeros),
                                    plot=not args.no_plot)
    except FoxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_IO
    print(f"wrote {csv_path} ({len(grid)} rows)" + (f" and {png}" if png else ""))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog=TOOL, description="Numerical identity checks for Fox's integral "
                                                            "equation and zeta zero sums.")
    parser.add_argument("--version", action="version", version=f"{TOOL} {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run named checks")
    run.add_argument("--check", required=True, help='"all" or comma-separated check names')
    run.add_argument("--zeros", help="zero-ordinate file (default: $FOX_ZEROS_PATH or the bundled table)")
    run.add_argument("--tol-scale", type=float, default=1.0, help="multiplier on every check tolerance")
    run.add_argument("--max-zeros", type=int, default=30, help="zeros used in zero sums")
    run.add_argument("--contour-height", type=float, default=None, help="override contour truncation height")
    run.add_argument("--report", help="write a JSON report here")
    run.add_argument("--parallel", action="store_true", help="run grid points concurrently")
    run.set_defaults(func=cmd_run)

    curves = sub.add_parser("curves", help="tabulate a curve to CSV (and PNG)")
    curves.add_argument("--name", required=True, help=f"one of: {', '.join(sorted(CURVES))}")
    curves.add_argument("--from", dest="start", type=float, required=True)
    curves.add_argument("--to", dest="stop", type=float, required=True)
    curves.add_argument("--step", type=float, required=True)
    curves.add_argument("--out", required=True, help="CSV path; the PNG gets the same stem")
    curves.add_argument("--zeros", help="zero-ordinate file")
    curves.add_argument("--max-zeros", type=int, default=30)
    curves.add_argument("--no-plot", action="store_true", help="skip the PNG")
    curves.set_defaults(func=cmd_curves)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "tol_scale", 1.0) <= 0:
        print("error: --tol-scale must be > 0", file=sys.stderr)
        return EXIT_USAGE
    if getattr(args, "max_zeros", 1) < 1:
        print("error: --max-zeros must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
