"""Courier relay schedules between a receding caravan and a fixed city.

Closed forms for classical and relativistic clocks, plus an event-driven
simulator used as an independent check.
"""
from .core import (
    BuzzatiError,
    CourierSpec,
    DepartureRecord,
    KinematicConfig,
    Mode,
    ModeMismatchError,
    NonPositiveError,
    ScheduleTable,
    SpeedOrderError,
    SuperluminalError,
    default_couriers,
    q_factor,
    validate,
)
from .classical import build_classical_schedule, departure_time, trip_duration
from .relativistic import build_relativistic_schedule
from .simulator import simulate, verify_against_analytic

__all__ = [
    "BuzzatiError",
    "CourierSpec",
    "DepartureRecord",
    "KinematicConfig",
    "Mode",
    "ModeMismatchError",
    "NonPositiveError",
    "ScheduleTable",
    "SpeedOrderError",
    "SuperluminalError",
    "build_classical_schedule",
    "build_relativistic_schedule",
    "default_couriers",
    "departure_time",
    "q_factor",
    "simulate",
    "trip_duration",
    "validate",
    "verify_against_analytic",
]
