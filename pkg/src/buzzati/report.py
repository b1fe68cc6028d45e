"""Rendering of schedules, simulations and EM-limit tables as pretty text, CSV or JSON.

CSV and JSON always carry full-precision days; only the pretty form switches
to years, the way printed tables do.
"""
from __future__ import annotations

import csv
import enum
import io
import json
from dataclasses import dataclass

from .core import DEFAULT_YEAR_LENGTH_DAYS, Mode, NonPositiveError, ScheduleTable
from .simulator import Simulation

# 375 days still prints as days and 500 as "~ 1.4 yrs" in the published grid
DEFAULT_YEAR_THRESHOLD_DAYS = 400.0

RELATIVISTIC_FIELDS = (
    "messenger",
    "tour",
    "city_frame_days",
    "caravan_proper_days",
    "messenger_proper_days",
    "messenger_at_city_proper_days",
)
CLASSICAL_FIELDS = ("messenger", "tour", "city_frame_days", "city_arrival_days")
EVENT_FIELDS = ("messenger", "kind", "time_city_days", "position", "proper_days")
EM_FIELDS = ("tour", "first_order_days", "exact_days", "abs_error_days", "rel_error")


class Format(str, enum.Enum):
    PRETTY = "pretty"
    CSV = "csv"
    JSON = "json"


@dataclass(frozen=True)
class OutputSpec:
    format: Format = Format.PRETTY
    year_threshold_days: float = DEFAULT_YEAR_THRESHOLD_DAYS
    year_length_days: float = DEFAULT_YEAR_LENGTH_DAYS
    destination: str | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "format", Format(self.format))
        if self.year_threshold_days <= 0 or self.year_length_days <= 0:
            raise NonPositiveError("year threshold and year length must be positive")


def num(x: float) -> str:
    """Lossless text form of a float (17 significant digits)."""
    return f"{x:.17g}"


def schedule_rows(table: ScheduleTable) -> list[dict]:
    rows = []
    classical = table.config.mode is Mode.CLASSICAL
    for r in table.records:
        if classical:
            rows.append(
                {
                    "messenger": r.courier_index,
                    "tour": r.tour,
                    "city_frame_days": r.city_frame,
                    "city_arrival_days": r.courier_proper_at_city,
                }
            )
        else:
            rows.append(
                {
                    "messenger": r.courier_index,
                    "tour": r.tour,
                    "city_frame_days": r.city_frame,
                    "caravan_proper_days": r.caravan_proper,
                    "messenger_proper_days": r.courier_proper,
                    "messenger_at_city_proper_days": r.courier_proper_at_city,
                }
            )
    return rows


def schedule_fields(table: ScheduleTable) -> tuple[str, ...]:
    return CLASSICAL_FIELDS if table.config.mode is Mode.CLASSICAL else RELATIVISTIC_FIELDS


def config_dict(table_or_config) -> dict:
    config = getattr(table_or_config, "config", table_or_config)
    return {
        "mode": config.mode.value,
        "convoy_speed": config.convoy_speed,
        "courier_speed": config.courier_speed,
        "q": config.q,
    }


def to_csv(fields: tuple[str, ...], rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(fields)
    for row in rows:
        writer.writerow([num(v) if isinstance(v, float) else v for v in (row[f] for f in fields)])
    return buf.getvalue()


def to_json(payload: dict) -> str:
    return json.dumps(payload, indent=2, allow_nan=False) + "\n"


def format_days(days: float, spec: OutputSpec) -> str:
    """Days as printed in a table: whole days, one decimal, or approximate years."""
    if days > spec.year_threshold_days:
        return f"~ {days / spec.year_length_days:.1f} yrs"
    if abs(days - round(days)) <= 1e-9 * max(1.0, days):
        return f"{round(days)} days"
    return f"{days:.1f} days"


def _grid(header: list[str], body: list[list[str]]) -> str:
    widths = [max(len(row[k]) for row in [header, *body]) for k in range(len(header))]
    fmt = lambda row: " | ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip()
    rule = "-+-".join("-" * w for w in widths)
    return "\n".join([fmt(header), rule, *map(fmt, body)]) + "\n"


def pretty_schedule(table: ScheduleTable, spec: OutputSpec) -> str:
    cfg = table.config
    if cfg.mode is Mode.CLASSICAL:
        title = f"q = {cfg.q:g}  (V_c = {cfg.convoy_speed:g}, V_m = {cfg.courier_speed:g})\n"
        header = ["n", *(f"Mess. {c.index}" for c in table.couriers)]
        body = [
            [str(n), *(format_days(table.get(c.index, n).city_frame, spec) for c in table.couriers)]
            for n in range(1, table.tours + 1)
        ]
        return title + _grid(header, body)
    out = []
    for c in table.couriers:
        out.append(
            f"Messenger {c.index}: q = {cfg.q:g}, beta_c = {cfg.convoy_speed:g}, beta_m = {cfg.courier_speed:g}\n"
        )
        header = ["n", "City frame", "Messenger proper", "Caravan proper", "Messenger at City"]
        body = [
            [
                str(r.tour),
                format_days(r.city_frame, spec),
                format_days(r.courier_proper, spec),
                format_days(r.caravan_proper, spec),
                format_days(r.courier_proper_at_city, spec),
            ]
            for r in table.column(c.index)
        ]
        out.append(_grid(header, body))
    return "\n".join(out)


def render_schedule(table: ScheduleTable, spec: OutputSpec) -> str:
    if spec.format is Format.CSV:
        return to_csv(schedule_fields(table), schedule_rows(table))
    if spec.format is Format.JSON:
        return to_json(
            {
                "config": config_dict(table),
                "records": schedule_rows(table),
                "year_length_days": spec.year_length_days,
            }
        )
    return pretty_schedule(table, spec)


def event_rows(sim: Simulation) -> list[dict]:
    return [
        {
            "messenger": e.courier_index,
            "kind": e.kind.value,
            "time_city_days": e.time_city,
            "position": e.position,
            "proper_days": c.elapsed_proper,
        }
        for e, c in zip(sim.events, sim.clocks)
    ]


def render_simulation(sim: Simulation, config, spec: OutputSpec) -> str:
    rows = event_rows(sim)
    if spec.format is Format.CSV:
        return to_csv(EVENT_FIELDS, rows)
    if spec.format is Format.JSON:
        return to_json({"config": config_dict(config), "events": rows})
    body = [
        [str(r["messenger"]), r["kind"], f"{r['time_city_days']:.6f}", f"{r['position']:.6f}", f"{r['proper_days']:.6f}"]
        for r in rows
    ]
    return _grid(["messenger", "kind", "city time [d]", "position", "proper [d]"], body)


def render_em_limit(rows: list[dict], spec: OutputSpec, beta_c: float, t1: float) -> str:
    if spec.format is Format.CSV:
        return to_csv(EM_FIELDS, rows)
    if spec.format is Format.JSON:
        return to_json({"beta_c": beta_c, "t1_days": t1, "rows": rows})
    body = [
        [
            str(r["tour"]),
            f"{r['first_order_days']:.6f}",
            f"{r['exact_days']:.6f}",
            f"{r['abs_error_days']:.3e}",
            f"{r['rel_error']:.3e}",
        ]
        for r in rows
    ]
    title = f"light-speed couriers, beta_c = {beta_c:g}, t1 = {t1:g} days\n"
    return title + _grid(["n", "first order [d]", "exact [d]", "abs error", "rel error"], body)
