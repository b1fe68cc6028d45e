"""Event-driven kinematic oracle for the courier relay.

Every actor moves along a ray from the City (position 0) at constant speed
between events; each rendezvous is the root of a linear position equation, and
each courier carries a clock that advances by ``duration * sqrt(1 - beta**2)``
per segment. Nothing here evaluates the closed-form schedule, so the two can be
compared honestly. :func:`verify_against_analytic` does that comparison.
"""
from __future__ import annotations

import enum
import math
from collections.abc import Iterable
from dataclasses import dataclass, field
from typing import NamedTuple

from . import classical, relativistic
from .core import (
    CourierSpec,
    KinematicConfig,
    Mode,
    SpeedOrderError,
    SuperluminalError,
    check_tours,
    validate,
)

DEFAULT_THRESHOLD = 1e-9


class EventKind(str, enum.Enum):
    DEPART_CARAVAN = "DepartCaravan"
    ARRIVE_CITY = "ArriveCity"
    DEPART_CITY = "DepartCity"
    ARRIVE_CARAVAN = "ArriveCaravan"


@dataclass(frozen=True)
class LegEvent:
    time_city: float
    position: float
    courier_index: int
    kind: EventKind


@dataclass(frozen=True)
class ProperClock:
    courier_index: int
    elapsed_proper: float


class Simulation(NamedTuple):
    events: list[LegEvent]
    clocks: list[ProperClock]


def intercept_return(depart_time: float, convoy_speed: float, courier_speed: float) -> float:
    """City-frame time a courier leaving the convoy at ``depart_time`` reaches the City."""
    separation = convoy_speed * depart_time
    return depart_time + separation / courier_speed


def intercept_catchup(depart_city_time: float, convoy_speed: float, courier_speed: float) -> float:
    """City-frame time a courier leaving the City catches the receding convoy.

    Raises:
        SpeedOrderError: the courier is not faster than the convoy.
    """
    closing = courier_speed - convoy_speed
    if closing <= 0:
        raise SpeedOrderError(
            f"courier speed {courier_speed!r} cannot catch convoy speed {convoy_speed!r}"
        )
    separation = convoy_speed * depart_city_time
    return depart_city_time + separation / closing


def _rate(config: KinematicConfig, speed: float) -> float:
    if config.mode is Mode.CLASSICAL:
        return 1.0
    return math.sqrt(1.0 - speed * speed)


def _checked(t: float) -> float:
    if not math.isfinite(t):
        raise OverflowError("simulation horizon exceeds double-precision range")
    return t


def _simulate_courier(config: KinematicConfig, courier: CourierSpec, tours: int) -> Simulation:
    vc, vm = config.convoy_speed, config.courier_speed
    rate_c, rate_m = _rate(config, vc), _rate(config, vm)
    i = courier.index
    events: list[LegEvent] = []
    clocks: list[ProperClock] = []

    def emit(t: float, x: float, kind: EventKind, proper: float) -> None:
        events.append(LegEvent(t, x, i, kind))
        clocks.append(ProperClock(i, proper))

    # riding with the convoy until the first departure, scheduled on the convoy's clock
    t = courier.first_departure / rate_c
    proper = t * rate_c
    emit(t, vc * t, EventKind.DEPART_CARAVAN, proper)
    for _ in range(tours - 1):
        x0 = vc * t
        t_city = _checked(intercept_return(t, vc, vm))
        proper += (t_city - t) * rate_m
        # position recomputed from the leg geometry rather than assumed to be 0
        emit(t_city, x0 - vm * (t_city - t), EventKind.ARRIVE_CITY, proper)
        emit(t_city, 0.0, EventKind.DEPART_CITY, proper)

        t_meet = _checked(intercept_catchup(t_city, vc, vm))
        proper += (t_meet - t_city) * rate_m
        emit(t_meet, vm * (t_meet - t_city), EventKind.ARRIVE_CARAVAN, proper)
        t = t_meet
        emit(t, vc * t, EventKind.DEPART_CARAVAN, proper)
    return Simulation(events, clocks)


def simulate(config: KinematicConfig, couriers: Iterable[CourierSpec], tours: int) -> Simulation:
    """Run every courier through its ``tours``-th departure from the convoy.

    Couriers never interact, so each one is simulated on its own and the
    results are concatenated in courier-index order (time order within each).
    """
    validate(config)
    check_tours(tours)
    if config.mode is Mode.RELATIVISTIC and config.courier_speed >= 1.0:
        raise SuperluminalError("cannot simulate couriers moving at c")
    events: list[LegEvent] = []
    clocks: list[ProperClock] = []
    for courier in sorted(couriers, key=lambda c: c.index):
        run = _simulate_courier(config, courier, tours)
        events.extend(run.events)
        clocks.extend(run.clocks)
    return Simulation(events, clocks)


def light_signal_city_times(beta_c: float, t1: float, tours: int) -> list[float]:
    """Exact City-frame exchange times when the couriers are light signals.

    The first signal leaves when the convoy's clock reads ``t1``; each later one
    leaves the instant the previous signal returns from the City.
    """
    if not 0.0 < beta_c < 1.0:
        raise SuperluminalError(f"convoy speed must lie in (0, 1), got {beta_c!r}")
    check_tours(tours)
    t = t1 / math.sqrt(1.0 - beta_c * beta_c)
    times = [t]
    for _ in range(tours - 1):
        t = _checked(intercept_catchup(intercept_return(t, beta_c, 1.0), beta_c, 1.0))
        times.append(t)
    return times


CLOCK_KINDS = ("departure_city", "departure_proper", "arrival_proper")


@dataclass
class ClockError:
    max_rel_error: float = 0.0
    worst: tuple[int, int] | None = None

    def update(self, got: float, want: float, where: tuple[int, int]) -> None:
        err = abs(got - want) / abs(want)
        if self.worst is None or err > self.max_rel_error:
            self.max_rel_error = err
            self.worst = where


@dataclass
class VerificationReport:
    threshold: float
    errors: dict[str, ClockError] = field(
        default_factory=lambda: {k: ClockError() for k in CLOCK_KINDS}
    )
    comparisons: int = 0

    @property
    def max_rel_error(self) -> float:
        return max(e.max_rel_error for e in self.errors.values())

    @property
    def passed(self) -> bool:
        return self.max_rel_error <= self.threshold

    def merge(self, other: VerificationReport) -> VerificationReport:
        out = VerificationReport(min(self.threshold, other.threshold))
        out.comparisons = self.comparisons + other.comparisons
        for k in CLOCK_KINDS:
            a, b = self.errors[k], other.errors[k]
            out.errors[k] = a if a.worst is not None and a.max_rel_error >= b.max_rel_error else b
        return out

    def lines(self) -> list[str]:
        out = []
        for k in CLOCK_KINDS:
            e = self.errors[k]
            where = "-" if e.worst is None else f"messenger {e.worst[0]}, tour {e.worst[1]}"
            out.append(f"{k:<17} max rel error {e.max_rel_error:.3e}  worst at {where}")
        verdict = "PASS" if self.passed else "FAIL"
        out.append(f"{verdict}: {self.comparisons} comparisons, threshold {self.threshold:g}")
        return out


def verify_against_analytic(
    config: KinematicConfig,
    couriers: Iterable[CourierSpec],
    tours: int,
    threshold: float = DEFAULT_THRESHOLD,
) -> VerificationReport:
    """Compare simulated clocks with the closed-form schedule.

    Departure events are checked against the departure-time progression (City
    frame) and the courier's proper clock at departure; City arrivals are
    checked against the courier's proper clock on reaching the City. In
    classical mode all clocks read City time.
    """
    couriers = tuple(couriers)
    if config.mode is Mode.CLASSICAL:
        table = classical.build_classical_schedule(config, couriers, tours)
    else:
        table = relativistic.build_relativistic_schedule(config, couriers, tours)
    run = simulate(config, couriers, tours)

    report = VerificationReport(threshold)
    tour_of: dict[int, int] = {}
    for event, clock in zip(run.events, run.clocks):
        i = event.courier_index
        if event.kind is EventKind.DEPART_CARAVAN:
            n = tour_of[i] = tour_of.get(i, 0) + 1
            rec = table.get(i, n)
            report.errors["departure_city"].update(event.time_city, rec.city_frame, (i, n))
            report.errors["departure_proper"].update(clock.elapsed_proper, rec.courier_proper, (i, n))
            report.comparisons += 2
        elif event.kind is EventKind.ARRIVE_CITY:
            n = tour_of[i]
            rec = table.get(i, n)
            report.errors["arrival_proper"].update(
                clock.elapsed_proper, rec.courier_proper_at_city, (i, n)
            )
            report.comparisons += 1
    return report
