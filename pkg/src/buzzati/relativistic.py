"""Clock readings for the courier schedule when the speeds are a sizeable fraction of c.

All rendezvous kinematics stay in the City frame with constant coordinate speeds
and instantaneous turnarounds; the only relativistic ingredient is time dilation,
applied per constant-speed segment as ``duration * sqrt(1 - beta**2)``.
"""
from __future__ import annotations

import math
from collections.abc import Iterable
from dataclasses import dataclass

from . import classical
from .core import (
    CourierSpec,
    DepartureRecord,
    KinematicConfig,
    Mode,
    ModeMismatchError,
    ScheduleTable,
    SuperluminalError,
    check_tours,
    q_factor,
    DEFAULT_YEAR_LENGTH_DAYS,
)


@dataclass(frozen=True)
class DilationFactors:
    root_c: float
    root_m: float

    @property
    def ratio(self) -> float:
        return self.root_m / self.root_c


def _require_relativistic(config: KinematicConfig) -> None:
    if config.mode is not Mode.RELATIVISTIC:
        raise ModeMismatchError("operation needs a relativistic config")


def dilation_factors(config: KinematicConfig) -> DilationFactors:
    """Proper-time rates of the convoy and of a riding courier.

    Raises:
        ModeMismatchError: config is classical.
        SuperluminalError: courier moves at c; use :func:`em_limit_city_time`.
    """
    _require_relativistic(config)
    if config.courier_speed >= 1.0:
        raise SuperluminalError("courier at beta_m = 1 has no proper clock; use em_limit_city_time")
    return DilationFactors(
        root_c=math.sqrt(1.0 - config.convoy_speed**2),
        root_m=math.sqrt(1.0 - config.courier_speed**2),
    )


def city_frame_departure(config: KinematicConfig, t1: float, n: int) -> float:
    """City-frame time of the ``n``-th departure; ``t1`` is read on the convoy's clock."""
    _require_relativistic(config)
    root_c = math.sqrt(1.0 - config.convoy_speed**2)
    return classical.departure_time(q_factor(config), t1, n) / root_c


def caravan_proper_departure(config: KinematicConfig, t1: float, n: int) -> float:
    return classical.departure_time(q_factor(config), t1, n)


def messenger_proper_departure(config: KinematicConfig, t1: float, n: int) -> float:
    """Courier's own clock at its ``n``-th departure from the convoy.

    Until ``t1`` the courier rides with the convoy; afterwards it is always
    moving at ``beta_m``, so its clock runs at ``root_m`` in City time.
    """
    f = dilation_factors(config)
    grown = classical.departure_time(q_factor(config), t1, n)
    return f.ratio * grown + (1.0 - f.ratio) * t1


def messenger_proper_at_city(config: KinematicConfig, t1: float, n: int) -> float:
    """Courier's own clock when it reaches the City on its ``n``-th tour."""
    f = dilation_factors(config)
    q = q_factor(config)
    grown = classical.departure_time(q, t1, n)
    return f.ratio * (1.0 + classical.city_arrival_fraction(q)) * grown + (1.0 - f.ratio) * t1


def em_limit_city_time(beta_c: float, t1: float, n: int) -> float:
    """First-order City time of the ``n``-th exchange when couriers travel at c.

    Only meaningful for ``beta_c << 1``; no check is made.
    """
    return t1 * (1.0 + 2.0 * (n - 1) * beta_c)


def build_relativistic_schedule(
    config: KinematicConfig,
    couriers: Iterable[CourierSpec],
    tours: int,
    year_length_days: float = DEFAULT_YEAR_LENGTH_DAYS,
) -> ScheduleTable:
    _require_relativistic(config)
    dilation_factors(config)
    couriers = tuple(couriers)
    check_tours(tours)
    records = []
    for n in range(1, tours + 1):
        for c in couriers:
            t1 = c.first_departure
            records.append(
                DepartureRecord(
                    courier_index=c.index,
                    tour=n,
                    caravan_proper=caravan_proper_departure(config, t1, n),
                    city_frame=city_frame_departure(config, t1, n),
                    courier_proper=messenger_proper_departure(config, t1, n),
                    courier_proper_at_city=messenger_proper_at_city(config, t1, n),
                )
            )
    return ScheduleTable(config, records, couriers, tours, year_length_days)
