from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from buzzati.classical import (
    build_classical_schedule,
    city_arrival_fraction,
    departure_time,
    first_trip_duration,
    trip_duration,
)
from buzzati.core import CourierSpec, KinematicConfig, ModeMismatchError, default_couriers

from golden import CLASSICAL_DAYS, exact_classical_events, rel_err

SWEEP = [(q, t1, n) for q in (0.5, 1.0, 2.0, 5.0) for t1 in (1.0, 2.5, 8.0) for n in range(1, 11)]


def test_first_trip_duration():
    assert first_trip_duration(2, 2) == 8
    assert 2 + first_trip_duration(2, 2) == 10
    assert 8 + first_trip_duration(2, 8) == 40
    assert first_trip_duration(2, 1e-300) == pytest.approx(0, abs=1e-299)


@pytest.mark.parametrize("q, t1, n, want", [(2, 2, 1, 8), (2, 5, 3, 500), (2, 3, 2, 60)])
def test_trip_duration(q, t1, n, want):
    assert trip_duration(q, t1, n) == want


@pytest.mark.parametrize("q, t1, n, want", [(2, 2, 3, 50), (2, 8, 7, 125000), (0.37, 4.2, 1, 4.2)])
def test_departure_time(q, t1, n, want):
    assert departure_time(q, t1, n) == want


def test_departure_time_in_years():
    assert round(departure_time(2, 8, 7) / 365, 1) == 342.5


@pytest.mark.parametrize("q, want", [(2, 2 / 3), (1, 0.5)])
def test_city_arrival_fraction(q, want):
    assert city_arrival_fraction(q) == pytest.approx(want, rel=1e-15)


def test_city_arrival_fraction_limit():
    assert city_arrival_fraction(1e6) == pytest.approx(0.999999, abs=1e-9)


def test_city_arrival_fraction_is_speed_ratio():
    cfg = KinematicConfig.classical(0.5, 0.75)
    assert city_arrival_fraction(cfg.q) == pytest.approx(cfg.convoy_speed / cfg.courier_speed, rel=1e-15)


def test_overflow():
    with pytest.raises(OverflowError):
        departure_time(2.0, 1.0, 10_000)
    with pytest.raises(OverflowError):
        trip_duration(2.0, 1.0, 10_000)


def test_tour_must_be_positive():
    with pytest.raises(ValueError):
        departure_time(2.0, 1.0, 0)


@pytest.mark.parametrize("q, t1, n", SWEEP)
def test_geometric_ratio_and_telescoping(q, t1, n):
    a, b = departure_time(q, t1, n), departure_time(q, t1, n + 1)
    assert rel_err(b / a, 1 + 2 * q) <= 1e-12
    assert rel_err(b - a, trip_duration(q, t1, n)) <= 1e-12
    assert rel_err(trip_duration(q, t1, n + 1), trip_duration(q, t1, n) * (1 + 2 * q)) <= 1e-12


@given(
    q=st.floats(0.05, 20.0),
    t1=st.floats(0.1, 100.0),
    k=st.floats(0.1, 10.0),
    n=st.integers(1, 12),
)
def test_linear_in_first_departure(q, t1, k, n):
    assert rel_err(departure_time(q, k * t1, n), k * departure_time(q, t1, n)) <= 1e-12


@pytest.mark.parametrize("vc, vm", [(1, Fraction(3, 2)), (1, 3), (1, 2), (Fraction(5), 6)])
@pytest.mark.parametrize("t1", [1, Fraction(5, 2), 8])
def test_matches_exact_rational_intercepts(vc, vm, t1):
    deps, arrivals = exact_classical_events(vc, vm, t1, 10)
    q = float(Fraction(vc) / (Fraction(vm) - Fraction(vc)))
    for n, t in enumerate(deps, start=1):
        assert rel_err(departure_time(q, float(t1), n), float(t)) <= 1e-12
    for n, s in enumerate(arrivals, start=1):
        assert rel_err(departure_time(q, float(t1), n) * (1 + city_arrival_fraction(q)), float(s)) <= 1e-12


def test_schedule_full_grid():
    table = build_classical_schedule(KinematicConfig.classical(1, 1.5), default_couriers(7), 7)
    assert len(table.records) == 49
    for n, row in CLASSICAL_DAYS.items():
        for i, want in enumerate(row, start=1):
            if want is not None:
                rec = table.get(i, n)
                assert rec.city_frame == rec.caravan_proper == rec.courier_proper == want
    assert table.get(1, 1).courier_proper_at_city == pytest.approx(2 * 5 / 3, rel=1e-15)


def test_schedule_single_courier():
    table = build_classical_schedule(KinematicConfig.from_q(2), [CourierSpec(4, 5.0)], 2)
    assert [r.city_frame for r in table.column(4)] == [5, 25]


def test_schedule_one_tour():
    table = build_classical_schedule(KinematicConfig.classical(1, 1.7), default_couriers(3), 1)
    assert [r.caravan_proper for r in table.records] == [2, 3, 4]


def test_schedule_monotone_per_courier():
    table = build_classical_schedule(KinematicConfig.from_q(0.5), default_couriers(3), 6)
    for c in table.couriers:
        col = table.column(c.index)
        for a, b in zip(col, col[1:]):
            assert b.city_frame > a.city_frame and b.courier_proper_at_city > a.courier_proper_at_city


def test_schedule_rejects_relativistic():
    with pytest.raises(ModeMismatchError):
        build_classical_schedule(KinematicConfig.relativistic(0.5, 0.75), default_couriers(1), 2)
