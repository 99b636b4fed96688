import math

import pytest

from radii import (
    DomainError,
    Family,
    OrderError,
    VerifyConfig,
    default_config,
    explore_interlacing,
    find_radius,
    run_verify,
)
from radii.families import Base
from radii.roots import base_function_zeros
from radii.verify import (
    _grid,
    _pole_expansion_sides,
    grid_for,
    solve_half_pi_crossing_order,
)

# Trimmed-down suite used by most tests here; same structure as the default,
# two orders of magnitude fewer radius computations.
SMALL = VerifyConfig(
    bessel_grid=_grid(-0.5, 2.0, 5),
    struve_grid=_grid(-0.5, 0.5, 5),
    lommel_grid=(-0.5, -0.25, 0.25, 0.5),
    asymptotic_orders=(100.0,),
    zero_sum_cases=((Base.BESSEL, 0.0), (Base.STRUVE, 0.0), (Base.LOMMEL, 0.5)),
    pole_pairs=((0.0, 0.5), (-0.5, 1.0)),
    pole_limit_orders=(0.5,),
)


@pytest.fixture(scope="module")
def small_report():
    return run_verify(SMALL)


def count_with_prefix(report, prefix):
    return sum(o.claim_id.startswith(prefix) for o in report.outcomes)


def test_small_suite_passes_everywhere(small_report):
    assert small_report.passed
    assert small_report.failed == ()


def test_small_suite_group_counts(small_report):
    family_points = 2 * (5 + 5 + 4)  # each base grid serves two families
    assert count_with_prefix(small_report, "bracket.") == 6 * family_points
    assert count_with_prefix(small_report, "chain.") == 4 * family_points
    assert count_with_prefix(small_report, "crude.") == family_points
    assert count_with_prefix(small_report, "ceiling.") == family_points
    assert count_with_prefix(small_report, "const.") == 5
    assert count_with_prefix(small_report, "asym.") == 2
    assert count_with_prefix(small_report, "mono.") == 2
    assert count_with_prefix(small_report, "cross.") == 2 * 5
    assert count_with_prefix(small_report, "zerosum.") == 6
    assert count_with_prefix(small_report, "mle.") == 3


def test_suite_is_deterministic(small_report):
    again = run_verify(SMALL)
    assert again.outcomes == small_report.outcomes


def test_extended_domain_noted_on_negative_lommel_rows(small_report):
    flagged = [
        o
        for o in small_report.outcomes
        if o.family.startswith("lommel") and o.parameter is not None and o.parameter < 0
    ]
    assert flagged
    assert all("extended domain" in o.note for o in flagged if o.claim_id.startswith("bracket"))


def test_default_config_shape():
    config = default_config()
    assert len(config.bessel_grid) == 50
    assert config.bessel_grid[0] == -0.9
    assert config.bessel_grid[-1] == 9.0
    assert config.struve_grid[0] == -0.5
    assert config.struve_grid[-1] == 0.5
    assert len(config.lommel_grid) == 50
    assert all(abs(p) >= 0.05 for p in config.lommel_grid)
    assert config.asymptotic_orders == (100.0, 300.0, 1000.0)
    assert len(config.zero_sum_cases) == 9
    assert len(config.pole_pairs) == 10
    assert grid_for(config, Family.STRUVE_SQRT) == config.struve_grid


def test_only_filter_restricts_claim_ids():
    report = run_verify(default_config(only="const"))
    assert report.outcomes
    assert all(o.claim_id.startswith("const") for o in report.outcomes)
    assert len(report.outcomes) == 5
    assert report.passed


def test_tolerance_override_can_force_failures():
    report = run_verify(
        default_config(only="const", tolerance_overrides=(("const", 1e-18),))
    )
    assert not report.passed
    assert all(o.claim_id.startswith("const") for o in report.failed)
    # interval-style claims carry no tolerance and stay green
    assert any(o.passed for o in report.outcomes)


def test_half_pi_crossing_order_value():
    assert solve_half_pi_crossing_order() == pytest.approx(
        -0.49350341222992355, abs=5e-13
    )


def test_pole_expansion_left_side_matches_trigonometric_form():
    # At order -1/2 both Struve functions collapse to trig forms, giving the
    # quotient in closed form: (cos z - sin z / z) / (z sin z).
    zeros = base_function_zeros(Base.STRUVE, -0.5, 20)
    for z in (0.7, 1.0, 2.1):
        left, right = _pole_expansion_sides(-0.5, z, zeros)
        want = (math.cos(z) - math.sin(z) / z) / (z * math.sin(z))
        assert left == pytest.approx(want, rel=1e-12)
        assert left == pytest.approx(right, rel=0.02)


def test_interlacing_exploration_at_order_zero():
    report = explore_interlacing(0.0, count=6)
    assert report.strict
    assert len(report.struve_zeros) == 6
    assert len(report.bessel_zeros) == 6
    assert "numerical evidence only" in report.note
    # the second combination reduces to the higher-order Bessel zero set
    assert report.bessel_zeros[0] == pytest.approx(3.8317059702075123, abs=1e-8)
    assert report.bessel_zeros[1] == pytest.approx(7.0155866698156188, abs=1e-8)
    # the first combination's smallest zero is the radius itself
    radius = find_radius(Family.STRUVE_CIRCLE, 0.0).radius
    assert report.struve_zeros[0] == pytest.approx(radius, abs=1e-9)
    labels = [label for _, label in report.merged]
    assert all(a != b for a, b in zip(labels, labels[1:]))
    values = [z for z, _ in report.merged]
    assert values == sorted(values)


def test_interlacing_argument_validation():
    with pytest.raises(OrderError, match="1..20"):
        explore_interlacing(0.0, count=0)
    with pytest.raises(OrderError):
        explore_interlacing(0.0, count=21)
    with pytest.raises(DomainError):
        explore_interlacing(0.75)
