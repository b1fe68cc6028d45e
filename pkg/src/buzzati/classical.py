"""Closed-form courier schedule in Newtonian kinematics.

A courier leaving the convoy at ``t`` needs ``2 q t`` days to reach the City
and catch the convoy again, so departures form the geometric progression
``T_n = T_1 (1 + 2q)^(n-1)``.
"""
from __future__ import annotations

import math
from collections.abc import Iterable

from .core import (
    CourierSpec,
    DepartureRecord,
    KinematicConfig,
    Mode,
    ModeMismatchError,
    ScheduleTable,
    check_tours,
    q_factor,
    DEFAULT_YEAR_LENGTH_DAYS,
)


def _growth(q: float, n: int) -> float:
    if n < 1:
        raise ValueError(f"tour must be >= 1, got {n!r}")
    # float ** int raises OverflowError itself once the power leaves double range
    return (1.0 + 2.0 * q) ** (n - 1)


def _finite(value: float) -> float:
    if not math.isfinite(value):
        raise OverflowError("schedule time exceeds double-precision range")
    return value


def first_trip_duration(q: float, t1: float) -> float:
    return 2.0 * q * t1


def trip_duration(q: float, t1: float, n: int) -> float:
    """Length of the ``n``-th round trip, convoy to City and back to convoy."""
    return _finite(2.0 * q * t1 * _growth(q, n))


def departure_time(q: float, t1: float, n: int) -> float:
    """Time of the ``n``-th departure from the convoy."""
    return _finite(t1 * _growth(q, n))


def city_arrival_fraction(q: float) -> float:
    """Fraction of the departure time spent riding back to the City (``V_c / V_m``)."""
    return q / (1.0 + q)


def build_classical_schedule(
    config: KinematicConfig,
    couriers: Iterable[CourierSpec],
    tours: int,
    year_length_days: float = DEFAULT_YEAR_LENGTH_DAYS,
) -> ScheduleTable:
    if config.mode is not Mode.CLASSICAL:
        raise ModeMismatchError("build_classical_schedule needs a classical config")
    couriers = tuple(couriers)
    check_tours(tours)
    q = q_factor(config)
    back = 1.0 + city_arrival_fraction(q)
    records = []
    for n in range(1, tours + 1):
        for c in couriers:
            t = departure_time(q, c.first_departure, n)
            records.append(DepartureRecord(c.index, n, t, t, t, t * back))
    return ScheduleTable(config, records, couriers, tours, year_length_days)
