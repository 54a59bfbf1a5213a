"""Command line interface: density table, optimum, curve export, limits.

Exit codes: 0 success, 1 failed sanity gate, 2 domain error (p <= 6 or
bad ranges), 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Sequence

from .errors import DomainError
from .optimize import DEFAULT_TOL, maximize
from .orthoscheme import OrthoschemeAngles, volume_kellerhals
from .tetrahedron import BOROCZKY_FLORIAN_BOUND, DensityPoint, density

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_DOMAIN = 2
EXIT_IO = 3

TABLE_PARAMS = (7.0, 8.0, 9.0, 20.0, 50.0, 100.0)

CSV_HEADER = "p,h,vol_orthoscheme,vol_piece,delta"

_PLOT_RECIPE = (
    "plot the CSV with e.g.  python -c \"import csv, matplotlib.pyplot as plt; "
    "rows = list(csv.DictReader(open('curve.csv'))); "
    "plt.plot([float(r['p']) for r in rows], [float(r['delta']) for r in rows]); "
    "plt.xlabel('p'); plt.ylabel('delta'); plt.savefig('curve.png')\""
)


def _fmt_row(dp: DensityPoint) -> str:
    return (
        f"h={dp.height:.5f} VolO={dp.vol_orthoscheme:.5f} "
        f"piece={dp.vol_hyperball_piece:.5f} delta={dp.delta:.5f}"
    )


def _csv_line(p: float, dp: DensityPoint) -> str:
    return ",".join(
        repr(v)
        for v in (p, dp.height, dp.vol_orthoscheme, dp.vol_hyperball_piece, dp.delta)
    )


def cmd_density(args: argparse.Namespace) -> int:
    dp = density(args.p)
    if args.json:
        print(json.dumps({
            "p": dp.p,
            "h": dp.height,
            "vol_orthoscheme": dp.vol_orthoscheme,
            "vol_piece": dp.vol_hyperball_piece,
            "delta": dp.delta,
        }))
    else:
        print(_fmt_row(dp))
    return EXIT_OK


def cmd_table(args: argparse.Namespace) -> int:
    print(f"{'p':>4}  {'h':>8}  {'vol_orthoscheme':>15}  {'vol_piece':>9}  {'delta':>8}")
    for p in TABLE_PARAMS:
        dp = density(p)
        print(
            f"{p:>4.0f}  {dp.height:>8.5f}  {dp.vol_orthoscheme:>15.5f}  "
            f"{dp.vol_hyperball_piece:>9.5f}  {dp.delta:>8.5f}"
        )
    # limiting row: zero first angle, zero height, no hyperball material
    vol_limit = volume_kellerhals(OrthoschemeAngles(0.0, math.pi / 3.0, math.pi / 3.0))
    print(
        f"{'inf':>4}  {0.0:>8.5f}  {vol_limit:>15.5f}  {0.0:>9.5f}  {0.0:>8.5f}"
    )
    return EXIT_OK


def cmd_optimize(args: argparse.Namespace) -> int:
    result = maximize(tol=args.tol)
    print(f"p_opt={result.p_opt:.5f} delta={result.delta_opt:.5f}")
    return EXIT_OK if result.delta_opt > 0.85 else EXIT_FAIL


def cmd_curve(args: argparse.Namespace) -> int:
    lo, hi, steps = args.from_, args.to, args.steps
    if not (6.0 < lo < hi):
        raise DomainError(f"invalid range: need 6 < from < to, got ({lo}, {hi})")
    if steps < 2:
        raise DomainError(f"steps must be >= 2, got {steps}")
    lines = [CSV_HEADER]
    for i in range(steps):
        p = lo + i * (hi - lo) / (steps - 1)
        lines.append(_csv_line(p, density(p)))
    with open(args.out, "w", encoding="utf-8", newline="\n") as f:
        f.write("\n".join(lines) + "\n")
    print(f"wrote {steps} rows to {args.out}")
    return EXIT_OK


def cmd_limits(args: argparse.Namespace) -> int:
    for k in range(1, 5):
        p = 6.0 + 10.0 ** (-k)
        d = density(p).delta
        print(
            f"p=6+1e-{k}  delta={d:.6f}  |delta-{BOROCZKY_FLORIAN_BOUND}|="
            f"{abs(d - BOROCZKY_FLORIAN_BOUND):.2e}"
        )
    tail = density(1e4).delta
    print(f"p=1e4     delta={tail:.6f}")
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypack",
        description=(
            "Packing density of congruent hyperballs in regular truncated "
            "tetrahedra of hyperbolic 3-space."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_density = sub.add_parser(
        "density", help="evaluate h, volumes and delta at one parameter"
    )
    p_density.add_argument("--p", type=float, required=True,
                           help="tetrahedron parameter, real > 6")
    p_density.add_argument("--json", action="store_true",
                           help="emit full-precision JSON instead of text")
    p_density.set_defaults(handler=cmd_density)

    p_table = sub.add_parser(
        "table", help="reference table for p = 7, 8, 9, 20, 50, 100 and the limit"
    )
    p_table.set_defaults(handler=cmd_table)

    p_opt = sub.add_parser("optimize", help="locate the density maximum")
    p_opt.add_argument("--tol", type=float, default=DEFAULT_TOL,
                       help="bracket width tolerance on p (default %(default)s)")
    p_opt.set_defaults(handler=cmd_optimize)

    p_curve = sub.add_parser(
        "curve",
        help="sweep the density over a parameter range into a CSV file",
        epilog=_PLOT_RECIPE,
    )
    p_curve.add_argument("--from", dest="from_", type=float, required=True,
                         help="range start, real > 6")
    p_curve.add_argument("--to", type=float, required=True, help="range end")
    p_curve.add_argument("--steps", type=int, required=True,
                         help="number of evenly spaced samples, >= 2")
    p_curve.add_argument("--out", required=True, help="output CSV path")
    p_curve.set_defaults(handler=cmd_curve)

    p_limits = sub.add_parser(
        "limits", help="report the p -> 6 and p -> infinity behaviour of delta"
    )
    p_limits.set_defaults(handler=cmd_limits)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
