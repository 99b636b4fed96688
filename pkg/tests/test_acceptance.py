"""End-to-end acceptance checks, one test per shipped guarantee.

Each test records a PASS/FAIL line through :mod:`acceptance_log`; the
conftest hook prints the collected lines after the run summary.
"""

import contextlib
import io
import math
import time

import pytest

import acceptance_log
from radii import (
    Family,
    SumSource,
    base_function_zeros,
    closed_form_sum,
    coefficient_sequence,
    crude_upper_bound,
    default_config,
    find_radius,
    first_rayleigh_zero_sum,
    newton_power_sums,
    radius_bracket,
)
from radii.cli import main
from radii.families import Base
from radii.verify import (
    HALF_PI_CROSSING_ORDER,
    RADIUS_STRUVE_AT_HALF,
    _pole_expansion_sides,
    grid_for,
    solve_half_pi_crossing_order,
)

CONFIG = default_config()


@pytest.fixture(scope="module")
def grids():
    return {family: grid_for(CONFIG, family) for family in Family}


@pytest.fixture(scope="module")
def radius_map(grids):
    start = time.perf_counter()
    radii = {
        (family, p): find_radius(family, p)
        for family, grid in grids.items()
        for p in grid
    }
    return radii, time.perf_counter() - start


def test_criterion_1_closed_newton_oracle(grids):
    start = time.perf_counter()
    worst = 0.0
    for family, grid in grids.items():
        for p in grid:
            newton = newton_power_sums(coefficient_sequence(family, p, 4), 4)
            for k in range(1, 5):
                closed = closed_form_sum(family, p, k)
                worst = max(worst, abs(closed - newton[k - 1]) / abs(closed))
    elapsed = time.perf_counter() - start
    ok = worst <= 1e-12 and elapsed <= 2.0
    acceptance_log.record(
        1, "closed vs newton power sums", ok,
        f"max rel diff {worst:.2e}, {elapsed:.2f}s",
    )
    assert worst <= 1e-12
    assert elapsed <= 2.0


def test_criterion_2_bracket_containment(grids, radius_map):
    radii, build_seconds = radius_map
    start = time.perf_counter()
    violations = 0
    checked = 0
    for family, grid in grids.items():
        for p in grid:
            r = radii[(family, p)].radius
            brackets = [
                radius_bracket(family, p, k, SumSource.CLOSED_FORM) for k in (1, 2, 3)
            ] + [
                radius_bracket(family, p, k, SumSource.NEWTON_RECURRENCE)
                for k in (4, 5, 6)
            ]
            for b in brackets:
                checked += 1
                if not b.lower < r < b.upper:
                    violations += 1
    elapsed = build_seconds + (time.perf_counter() - start)
    ok = violations == 0 and elapsed <= 5.0
    acceptance_log.record(
        2, "radius inside every enclosure", ok,
        f"{checked} enclosures, {violations} violations, {elapsed:.2f}s",
    )
    assert violations == 0
    assert elapsed <= 5.0


def test_criterion_3_monotone_bound_improvement(grids):
    slack = 1e-14
    worst = math.inf
    for family, grid in grids.items():
        for p in grid:
            for source, orders in (
                (SumSource.CLOSED_FORM, (1, 2, 3)),
                (SumSource.NEWTON_RECURRENCE, (1, 2, 3, 4, 5, 6)),
            ):
                brackets = [radius_bracket(family, p, k, source) for k in orders]
                for a, b in zip(brackets, brackets[1:]):
                    worst = min(worst, b.lower - a.lower, a.upper - b.upper)
    ok = worst >= -slack
    acceptance_log.record(
        3, "bounds improve monotonically", ok, f"worst step {worst:.2e}"
    )
    assert worst >= -slack


def test_criterion_4_special_constants():
    half_pi = math.pi / 2.0
    checks = [
        (
            "struve-circle radius at -1/2",
            find_radius(Family.STRUVE_CIRCLE, -0.5).radius, half_pi, 1e-10,
        ),
        (
            "struve-circle radius at +1/2",
            find_radius(Family.STRUVE_CIRCLE, 0.5).radius, RADIUS_STRUVE_AT_HALF, 1e-7,
        ),
        (
            "half-pi crossing order",
            solve_half_pi_crossing_order(), HALF_PI_CROSSING_ORDER, 1e-9,
        ),
        (
            "bessel-circle radius at +1/2",
            find_radius(Family.BESSEL_CIRCLE, 0.5).radius, half_pi, 1e-10,
        ),
    ]
    used = {name: abs(got - want) / tol for name, got, want, tol in checks}
    ok = all(frac <= 1.0 for frac in used.values())
    worst_name = max(used, key=used.get)
    acceptance_log.record(
        4, "pinned special constants", ok,
        f"worst: {worst_name} at {used[worst_name]:.1%} of tolerance",
    )
    for name, got, want, tol in checks:
        assert abs(got - want) <= tol, name


def test_criterion_5_large_order_asymptotics():
    worst_margin = math.inf
    for nu in (100.0, 300.0, 1000.0):
        r_sqrt = find_radius(Family.BESSEL_SQRT, nu).radius
        err_ratio = abs(r_sqrt / (4.0 * (nu + 1.0)) - (1.0 - 1.0 / nu))
        r_circ = find_radius(Family.BESSEL_CIRCLE, nu).radius
        err_square = abs(r_circ * r_circ / nu - 2.0)
        worst_margin = min(
            worst_margin, 10.0 / (nu * nu) - err_ratio, 10.0 / nu - err_square
        )
        assert err_ratio <= 10.0 / (nu * nu)
        assert err_square <= 10.0 / nu
    acceptance_log.record(
        5, "large-order asymptotics", worst_margin >= 0.0,
        f"worst margin {worst_margin:.2e}",
    )
    assert worst_margin >= 0.0


def test_criterion_6_monotonicity_and_cross_family(grids, radius_map):
    radii, _ = radius_map
    sqrt_radii = [radii[(Family.BESSEL_SQRT, p)].radius for p in grids[Family.BESSEL_SQRT]]
    increasing = all(b > a for a, b in zip(sqrt_radii, sqrt_radii[1:]))
    cross_ok = True
    for p in grids[Family.STRUVE_CIRCLE]:
        if not radii[(Family.STRUVE_CIRCLE, p)].radius > find_radius(Family.BESSEL_CIRCLE, p).radius:
            cross_ok = False
        if not radii[(Family.STRUVE_SQRT, p)].radius > find_radius(Family.BESSEL_SQRT, p).radius:
            cross_ok = False
    ok = increasing and cross_ok
    acceptance_log.record(
        6, "parameter monotonicity and family ordering", ok,
        f"increasing={increasing}, cross-family={cross_ok}",
    )
    assert increasing
    assert cross_ok


def test_criterion_7_crude_bounds(grids, radius_map):
    radii, _ = radius_map
    violations = sum(
        1
        for family, grid in grids.items()
        for p in grid
        if not radii[(family, p)].radius < crude_upper_bound(family, p)
    )
    acceptance_log.record(
        7, "radius below crude bound", violations == 0, f"{violations} violations"
    )
    assert violations == 0


def test_criterion_8_rayleigh_zero_sums():
    worst_ratio = 1.0
    ok = True
    for base, p in CONFIG.zero_sum_cases:
        zeros = base_function_zeros(base, p, 20)
        partial = sum(1.0 / (z * z) for z in zeros)
        closed = first_rayleigh_zero_sum(base, p)
        ratio = partial / closed
        worst_ratio = min(worst_ratio, ratio)
        if not 0.95 <= ratio < 1.0:
            ok = False
    acceptance_log.record(
        8, "20-zero partial Rayleigh sums", ok, f"smallest ratio {worst_ratio:.4f}"
    )
    assert ok


def test_criterion_9_pole_expansion_identity():
    zero_memo = {}
    worst = 0.0
    for nu, z in CONFIG.pole_pairs:
        if nu not in zero_memo:
            zero_memo[nu] = base_function_zeros(Base.STRUVE, nu, 20)
        left, right = _pole_expansion_sides(nu, z, zero_memo[nu])
        worst = max(worst, abs(left - right) / abs(right))
    ok = worst <= 0.02
    acceptance_log.record(
        9, "pole expansion within 2%", ok, f"worst rel diff {worst:.2e}"
    )
    assert ok


def test_criterion_10_verify_determinism():
    start = time.perf_counter()
    outputs = []
    codes = []
    for _ in range(2):
        buf = io.StringIO()
        with contextlib.redirect_stdout(buf):
            codes.append(main(["verify"]))
        outputs.append(buf.getvalue().encode("utf-8"))
    elapsed = time.perf_counter() - start
    ok = outputs[0] == outputs[1] and codes == [0, 0]
    acceptance_log.record(
        10, "verify reruns byte-identical", ok,
        f"{len(outputs[0])} bytes per run, exit codes {codes}, {elapsed:.2f}s",
    )
    assert codes == [0, 0]
    assert outputs[0] == outputs[1]
