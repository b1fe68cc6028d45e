"""Domain types and validation shared by the schedule, clock and simulator modules.

Times are in days throughout. Speeds are dimensionless: in classical mode only
their ratio matters, in relativistic mode they are fractions of the speed of
light.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

DEFAULT_YEAR_LENGTH_DAYS = 365.0


class BuzzatiError(ValueError):
    """Base class for domain validation failures."""


class SpeedOrderError(BuzzatiError):
    """Courier is not faster than the convoy, so it can never catch up."""


class SuperluminalError(BuzzatiError):
    """A relativistic speed is at or beyond the speed of light."""


class NonPositiveError(BuzzatiError):
    """A speed, time or count that must be positive is not."""


class ModeMismatchError(BuzzatiError):
    """Operation called with a config of the wrong kinematic mode."""


class Mode(str, enum.Enum):
    CLASSICAL = "classical"
    RELATIVISTIC = "relativistic"


@dataclass(frozen=True)
class KinematicConfig:
    """Convoy and courier speeds plus the kinematic mode.

    Construction validates; see :func:`validate` for the rules.
    """

    mode: Mode
    convoy_speed: float
    courier_speed: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "mode", Mode(self.mode))
        object.__setattr__(self, "convoy_speed", float(self.convoy_speed))
        object.__setattr__(self, "courier_speed", float(self.courier_speed))
        _check(self)

    @classmethod
    def classical(cls, convoy_speed: float, courier_speed: float) -> KinematicConfig:
        return cls(Mode.CLASSICAL, convoy_speed, courier_speed)

    @classmethod
    def relativistic(cls, beta_c: float, beta_m: float) -> KinematicConfig:
        return cls(Mode.RELATIVISTIC, beta_c, beta_m)

    @classmethod
    def from_q(cls, q: float) -> KinematicConfig:
        """Classical config with unit convoy speed and the given chase ratio."""
        if not q > 0 or not math.isfinite(q):
            raise NonPositiveError(f"q must be positive and finite, got {q!r}")
        return cls(Mode.CLASSICAL, 1.0, 1.0 + 1.0 / q)

    @property
    def q(self) -> float:
        return q_factor(self)


def _check(config: KinematicConfig) -> None:
    vc, vm = config.convoy_speed, config.courier_speed
    if not (math.isfinite(vc) and math.isfinite(vm)):
        raise NonPositiveError(f"speeds must be finite, got {vc!r}, {vm!r}")
    if vc <= 0 or vm <= 0:
        raise NonPositiveError(f"speeds must be positive, got convoy={vc!r}, courier={vm!r}")
    if config.mode is Mode.RELATIVISTIC:
        if vc >= 1:
            raise SuperluminalError(f"convoy speed must be below c, got beta_c={vc!r}")
        if vm > 1:
            raise SuperluminalError(f"courier speed exceeds c, got beta_m={vm!r}")
    if vm <= vc:
        raise SpeedOrderError(
            f"courier speed {vm!r} must exceed convoy speed {vc!r}, otherwise the courier never catches up"
        )


def validate(config: KinematicConfig) -> KinematicConfig:
    """Check speed invariants and return the config unchanged.

    Raises:
        NonPositiveError: a speed is zero, negative or not finite.
        SuperluminalError: relativistic convoy speed >= 1 or courier speed > 1.
        SpeedOrderError: courier speed does not exceed convoy speed.
    """
    _check(config)
    return config


def q_factor(config: KinematicConfig) -> float:
    """Chase ratio ``V_c / (V_m - V_c)``; the progression grows by ``1 + 2q`` per tour."""
    return config.convoy_speed / (config.courier_speed - config.convoy_speed)


@dataclass(frozen=True)
class CourierSpec:
    index: int
    first_departure: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "first_departure", float(self.first_departure))
        if self.index < 1:
            raise NonPositiveError(f"courier index must be >= 1, got {self.index!r}")
        if not (self.first_departure > 0 and math.isfinite(self.first_departure)):
            raise NonPositiveError(f"first departure must be positive, got {self.first_departure!r}")

    @classmethod
    def from_index(cls, index: int) -> CourierSpec:
        """Courier ``i`` leaves the convoy for the first time ``i + 1`` days out."""
        return cls(index, float(index + 1))


def default_couriers(count: int) -> list[CourierSpec]:
    if count < 1:
        raise NonPositiveError(f"need at least one courier, got {count!r}")
    return [CourierSpec.from_index(i) for i in range(1, count + 1)]


@dataclass(frozen=True)
class DepartureRecord:
    """Four clock readings at a courier's ``tour``-th departure from the convoy.

    In classical mode the first three agree, and ``courier_proper_at_city`` is
    the (common) time the courier reaches the City on that tour.
    """

    courier_index: int
    tour: int
    caravan_proper: float
    city_frame: float
    courier_proper: float
    courier_proper_at_city: float


@dataclass(frozen=True)
class ScheduleTable:
    config: KinematicConfig
    records: tuple[DepartureRecord, ...]
    couriers: tuple[CourierSpec, ...]
    tours: int
    year_length_days: float = DEFAULT_YEAR_LENGTH_DAYS
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "records", tuple(self.records))
        object.__setattr__(self, "couriers", tuple(self.couriers))
        if self.year_length_days <= 0:
            raise NonPositiveError(f"year length must be positive, got {self.year_length_days!r}")
        if len(self.records) != len(self.couriers) * self.tours:
            raise ValueError(
                f"expected {len(self.couriers) * self.tours} records, got {len(self.records)}"
            )
        index = {(r.courier_index, r.tour): r for r in self.records}
        if len(index) != len(self.records):
            raise ValueError("duplicate (courier, tour) records")
        object.__setattr__(self, "_index", index)

    def get(self, courier_index: int, tour: int) -> DepartureRecord:
        return self._index[(courier_index, tour)]

    def column(self, courier_index: int) -> list[DepartureRecord]:
        return [self.get(courier_index, n) for n in range(1, self.tours + 1)]


def check_tours(tours: int) -> int:
    if tours < 1:
        raise NonPositiveError(f"tour count must be >= 1, got {tours!r}")
    return tours
