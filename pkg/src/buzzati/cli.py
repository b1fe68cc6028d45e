"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 domain
validation error.
"""
from __future__ import annotations

import argparse
import sys
from collections.abc import Sequence

from .classical import build_classical_schedule
from .core import (
    BuzzatiError,
    CourierSpec,
    KinematicConfig,
    Mode,
    SuperluminalError,
    default_couriers,
)
from .relativistic import build_relativistic_schedule, em_limit_city_time
from .report import (
    DEFAULT_YEAR_THRESHOLD_DAYS,
    Format,
    OutputSpec,
    render_em_limit,
    render_schedule,
    render_simulation,
    to_json,
)
from .simulator import DEFAULT_THRESHOLD, light_signal_city_times, simulate, verify_against_analytic

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3

SWEEP_Q = (0.5, 1.0, 2.0, 5.0)
SWEEP_T1 = (1.0, 2.5, 8.0)
SWEEP_TOURS = 10
RELATIVISTIC_VERIFY_TOURS = 8


class UsageError(Exception):
    pass


def _t1_list(text: str) -> list[float]:
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of numbers: {text!r}")


def _common(p: argparse.ArgumentParser, tours: int | None) -> None:
    p.add_argument("--t1", type=_t1_list, help="first departure time(s) in days, comma separated")
    p.add_argument("--first-index", type=int, default=1, help="index of the first courier given via --t1")
    p.add_argument("--messengers", type=int, help="couriers 1..M leaving at 2..M+1 days")
    p.add_argument("--tours", type=int, default=tours, help="number of departures per courier")
    p.add_argument("--format", choices=[f.value for f in Format], default="pretty")
    p.add_argument("--year-days", type=float, default=365.0, help="days per year in pretty output")
    p.add_argument(
        "--year-threshold", type=float, default=DEFAULT_YEAR_THRESHOLD_DAYS,
        help="pretty output switches to years above this many days",
    )
    p.add_argument("--output", help="write to this file instead of stdout")


def _classical_speeds(p: argparse.ArgumentParser) -> None:
    p.add_argument("--q", type=float, help="chase ratio V_c/(V_m - V_c); implies V_c = 1")
    p.add_argument("--vc", type=float, help="convoy speed")
    p.add_argument("--vm", type=float, help="courier speed")


def _relativistic_speeds(p: argparse.ArgumentParser) -> None:
    p.add_argument("--beta-c", type=float, help="convoy speed as a fraction of c")
    p.add_argument("--beta-m", type=float, help="courier speed as a fraction of c")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="buzzati",
        description="Courier relay schedules between a receding caravan and its home city.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classical-table", help="Newtonian departure schedule")
    _classical_speeds(p)
    _common(p, tours=7)
    p.set_defaults(func=cmd_classical_table)

    p = sub.add_parser("relativistic-table", help="four-clock schedule at relativistic speeds")
    _relativistic_speeds(p)
    _common(p, tours=7)
    p.set_defaults(func=cmd_relativistic_table)

    p = sub.add_parser("simulate", help="event-by-event kinematic simulation")
    p.add_argument("--mode", choices=[m.value for m in Mode], default="classical")
    _classical_speeds(p)
    _relativistic_speeds(p)
    _common(p, tours=3)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("verify", help="check closed forms against the simulator")
    p.add_argument("--mode", choices=[m.value for m in Mode], default="classical")
    _classical_speeds(p)
    _relativistic_speeds(p)
    _common(p, tours=None)
    p.add_argument("--threshold", type=float, default=DEFAULT_THRESHOLD)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("em-limit", help="first-order vs exact times for light-speed couriers")
    p.add_argument("--beta-c", type=float, default=0.01)
    _common(p, tours=4)
    p.set_defaults(func=cmd_em_limit)
    return parser


def _output_spec(args: argparse.Namespace) -> OutputSpec:
    return OutputSpec(
        format=Format(args.format),
        year_threshold_days=args.year_threshold,
        year_length_days=args.year_days,
        destination=args.output,
    )


def _emit(text: str, spec: OutputSpec) -> None:
    if spec.destination:
        with open(spec.destination, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _classical_config(args: argparse.Namespace) -> KinematicConfig:
    if args.q is not None:
        if args.vc is not None or args.vm is not None:
            raise UsageError("--q cannot be combined with --vc/--vm")
        return KinematicConfig.from_q(args.q)
    vc = 1.0 if args.vc is None else args.vc
    vm = 1.5 if args.vm is None else args.vm
    return KinematicConfig.classical(vc, vm)


def _relativistic_config(args: argparse.Namespace) -> KinematicConfig:
    bc = 0.5 if args.beta_c is None else args.beta_c
    bm = 0.75 if args.beta_m is None else args.beta_m
    return KinematicConfig.relativistic(bc, bm)


def _couriers(args: argparse.Namespace, default: list[CourierSpec]) -> list[CourierSpec]:
    if args.t1 is not None and args.messengers is not None:
        raise UsageError("--t1 cannot be combined with --messengers")
    if args.t1 is not None:
        if not args.t1:
            raise UsageError("--t1 needs at least one value")
        return [CourierSpec(args.first_index + k, t) for k, t in enumerate(args.t1)]
    if args.messengers is not None:
        return default_couriers(args.messengers)
    return default


def cmd_classical_table(args: argparse.Namespace) -> int:
    spec = _output_spec(args)
    table = build_classical_schedule(
        _classical_config(args), _couriers(args, default_couriers(7)), args.tours, spec.year_length_days
    )
    _emit(render_schedule(table, spec), spec)
    return EXIT_OK


def cmd_relativistic_table(args: argparse.Namespace) -> int:
    spec = _output_spec(args)
    table = build_relativistic_schedule(
        _relativistic_config(args), _couriers(args, [CourierSpec.from_index(4)]), args.tours, spec.year_length_days
    )
    _emit(render_schedule(table, spec), spec)
    return EXIT_OK


def _mode_config(args: argparse.Namespace) -> tuple[KinematicConfig, list[CourierSpec]]:
    if Mode(args.mode) is Mode.CLASSICAL:
        if args.beta_c is not None or args.beta_m is not None:
            raise UsageError("--beta-c/--beta-m need --mode relativistic")
        return _classical_config(args), _couriers(args, default_couriers(1))
    if args.q is not None or args.vc is not None or args.vm is not None:
        raise UsageError("--q/--vc/--vm need --mode classical")
    return _relativistic_config(args), _couriers(args, [CourierSpec.from_index(4)])


def cmd_simulate(args: argparse.Namespace) -> int:
    spec = _output_spec(args)
    config, couriers = _mode_config(args)
    _emit(render_simulation(simulate(config, couriers, args.tours), config, spec), spec)
    return EXIT_OK


def _default_sweep(tours: int, threshold: float):
    couriers = [CourierSpec(k, t) for k, t in enumerate(SWEEP_T1, start=1)]
    report = None
    for q in SWEEP_Q:
        r = verify_against_analytic(KinematicConfig.from_q(q), couriers, tours, threshold)
        report = r if report is None else report.merge(r)
    return report


def cmd_verify(args: argparse.Namespace) -> int:
    spec = _output_spec(args)
    mode = Mode(args.mode)
    given = [args.q, args.vc, args.vm, args.beta_c, args.beta_m, args.t1, args.messengers]
    if mode is Mode.CLASSICAL and all(v is None for v in given):
        report = _default_sweep(args.tours or SWEEP_TOURS, args.threshold)
    else:
        config, couriers = _mode_config(args)
        tours = args.tours or (SWEEP_TOURS if mode is Mode.CLASSICAL else RELATIVISTIC_VERIFY_TOURS)
        report = verify_against_analytic(config, couriers, tours, args.threshold)
    if spec.format is Format.JSON:
        text = to_json(
            {
                "threshold": report.threshold,
                "passed": report.passed,
                "comparisons": report.comparisons,
                "errors": {
                    k: {"max_rel_error": e.max_rel_error, "worst": list(e.worst) if e.worst else None}
                    for k, e in report.errors.items()
                },
            }
        )
    else:
        text = "\n".join(report.lines()) + "\n"
    _emit(text, spec)
    return EXIT_OK if report.passed else EXIT_FAIL


def em_limit_rows(beta_c: float, t1: float, tours: int) -> list[dict]:
    exact = light_signal_city_times(beta_c, t1, tours)
    rows = []
    for n, t_exact in enumerate(exact, start=1):
        approx = em_limit_city_time(beta_c, t1, n)
        err = abs(approx - t_exact)
        rows.append(
            {
                "tour": n,
                "first_order_days": approx,
                "exact_days": t_exact,
                "abs_error_days": err,
                "rel_error": err / t_exact,
            }
        )
    return rows


def cmd_em_limit(args: argparse.Namespace) -> int:
    spec = _output_spec(args)
    if not 0.0 < args.beta_c < 1.0:
        raise SuperluminalError(f"--beta-c must lie in (0, 1), got {args.beta_c!r}")
    couriers = _couriers(args, [CourierSpec(1, 2.0)])
    if len(couriers) != 1:
        raise UsageError("em-limit takes a single --t1 value")
    t1 = couriers[0].first_departure
    _emit(render_em_limit(em_limit_rows(args.beta_c, t1, args.tours), spec, args.beta_c, t1), spec)
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.tours is not None and args.tours < 1:
        parser.error("--tours must be >= 1")
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except BuzzatiError as exc:
        print(f"buzzati: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OverflowError as exc:
        print(f"buzzati: overflow: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
