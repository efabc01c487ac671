"""``qwell-carnot`` command line.

Subcommands ``cycle``, ``diagram``, ``sweep`` and ``verify`` write CSV or
JSON to stdout. Exit codes: 0 success, 2 usage or domain error, 3 numeric
failure. Diagnostics go to stderr as a single line.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

from . import carnot_cycle, processes
from .carnot_cycle import CycleSpec
from .errors import NumericalError, QWellError
from .model import ELECTRON_MASS_SI, HBAR_SI, LambdaSpec, PhysicalParams

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERIC = 3


class UsageError(Exception):
    pass


def _float_list(text: str) -> list[float]:
    parts = [p.strip() for p in text.split(",")]
    if not text.strip() or any(not p for p in parts):
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of numbers, got {text!r}")
    try:
        return [float(p) for p in parts]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--l1", type=float, required=True, help="width at the start of the hot isotherm")
    common.add_argument("--l3", type=float, help="width at the start of the cold isotherm")
    common.add_argument("--lambda", dest="lam", type=float, default=0.0,
                        help="anharmonicity, held constant in L (0 = infinite square well)")
    common.add_argument("--out", choices=("csv", "json"), default="csv")
    common.add_argument("--precision", type=int, default=12, help="significant digits in the output")
    common.add_argument("--units", choices=("natural", "si"), default="natural")
    common.add_argument("--hbar", type=float, help="reduced Planck constant (si units only)")
    common.add_argument("--mass", type=float, help="particle mass (si units only)")

    parser = argparse.ArgumentParser(
        prog="qwell-carnot",
        description="Quantum Carnot engine with a Poschl-Teller well as working medium.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("cycle", parents=[common], help="corner widths, energies, works and efficiency")
    diagram = sub.add_parser("diagram", parents=[common], help="P-L samples for the four legs")
    diagram.add_argument("--samples", type=int, default=256, help="samples per leg (>= 2)")
    sweep = sub.add_parser("sweep", parents=[common], help="efficiency over a list of lambdas or L3 values")
    sweep.add_argument("--lambda-list", type=_float_list)
    sweep.add_argument("--l3-list", type=_float_list)
    sub.add_parser("verify", parents=[common], help="closed forms vs quadrature and the log-free forms")
    return parser


def _params(args) -> PhysicalParams:
    if args.units == "natural":
        if args.hbar is not None or args.mass is not None:
            raise UsageError("--hbar/--mass need --units si")
        return PhysicalParams.natural()
    return PhysicalParams.si(
        hbar=HBAR_SI if args.hbar is None else args.hbar,
        mass=ELECTRON_MASS_SI if args.mass is None else args.mass,
    )


def _fmt(x, precision: int) -> str:
    if x is None or (isinstance(x, float) and not math.isfinite(x)):
        return ""
    if isinstance(x, str):
        return x
    if isinstance(x, int):
        return str(x)
    return f"{x + 0.0:.{precision}g}"


def _json_value(x, precision: int):
    if x is None or isinstance(x, (str, int)):
        return x
    if not math.isfinite(x):
        return None
    return float(f"{x + 0.0:.{precision}g}")


def _emit(records: list[dict], fmt: str, precision: int, json_shape=None) -> str:
    """Serialize a list of flat records; ``json_shape`` wraps the JSON form."""
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(list(records[0].keys()))
        for rec in records:
            writer.writerow([_fmt(v, precision) for v in rec.values()])
        return buf.getvalue()
    data = [{k: _json_value(v, precision) for k, v in rec.items()} for rec in records]
    if json_shape is not None:
        data = json_shape(data)
    return json.dumps(data, indent=2) + "\n"


def _require_l3(args) -> float:
    if args.l3 is None:
        raise UsageError("--l3 is required")
    return args.l3


def _spec(args) -> CycleSpec:
    return CycleSpec(args.l1, _require_l3(args), LambdaSpec.frozen(args.lam), _params(args))


def cmd_cycle(args) -> str:
    result = carnot_cycle.build(_spec(args), with_report=False)
    summary = result.summary()
    if args.out == "csv":
        records = [{"key": k, "value": v} for k, v in summary.items()]
        return _emit(records, "csv", args.precision)
    return _emit([summary], "json", args.precision, json_shape=lambda d: d[0])


def cmd_diagram(args) -> str:
    if args.samples < 2:
        raise UsageError(f"--samples must be >= 2, got {args.samples}")
    spec = _spec(args)
    geometry = spec.geometry()
    records = [
        {"leg": leg, "L": s.L, "P": s.P, "E": s.E, "a1sq": s.a1sq}
        for leg, s in processes.sample_cycle(geometry, args.samples)
    ]
    return _emit(records, args.out, args.precision)


def _monotone(values: list[float]) -> bool:
    pairs = list(zip(values, values[1:]))
    return all(a < b for a, b in pairs) or all(a > b for a, b in pairs)


def cmd_sweep(args) -> str:
    if (args.lambda_list is None) == (args.l3_list is None):
        raise UsageError("give exactly one of --lambda-list or --l3-list")
    if args.lambda_list is not None:
        lams, l3s = args.lambda_list, [_require_l3(args)]
    else:
        lams, l3s = [args.lam], args.l3_list
    swept = args.lambda_list if args.lambda_list is not None else args.l3_list
    if not swept or not _monotone(swept):
        raise UsageError("sweep range must be nonempty and strictly monotone")
    params = _params(args)
    for lam in lams:
        LambdaSpec.frozen(lam)
    for l3 in l3s:
        CycleSpec(args.l1, l3, LambdaSpec.frozen(lams[0]), params)
    rows = carnot_cycle.sweep(args.l1, l3s, lams, params)
    return _emit(rows, args.out, args.precision)


def cmd_verify(args) -> str:
    report = carnot_cycle.verify(_spec(args))

    def record(r, kind):
        return {
            "kind": kind, "key": r.key,
            "reference_source": r.reference_source, "reference": r.reference,
            "comparator_source": r.comparator_source, "comparator": r.comparator,
            "abs_dev": r.abs_dev, "rel_dev": r.rel_dev,
        }

    records = [record(r, "row") for r in report.rows] + [record(r, "note") for r in report.notes]
    return _emit(records, args.out, args.precision)


COMMANDS = {"cycle": cmd_cycle, "diagram": cmd_diagram, "sweep": cmd_sweep, "verify": cmd_verify}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if not 1 <= args.precision <= 17:
        print(f"qwell-carnot: error: --precision must lie in [1, 17], got {args.precision}", file=sys.stderr)
        return EXIT_USAGE
    try:
        text = COMMANDS[args.command](args)
    except NumericalError as exc:
        print(f"qwell-carnot: numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (QWellError, UsageError) as exc:
        print(f"qwell-carnot: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
