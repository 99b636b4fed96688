"""Power sums of reciprocal derivative zeros and the brackets they induce.

Write the transformed derivative of a circle family as
prod(1 - z/a_n) and of a sqrt family as prod(1 - z/b_n) (Hadamard products
over the positive zero parameters).  The power sums

    p_k = sum_n a_n^(-k)      (resp. b_n^(-k))

are computable two independent ways:

* ``NEWTON_RECURRENCE``: from the coefficients c_1..c_K via the Newton
  identity p_k = (-1)^(k-1) k c_k + sum_{i<k} (-1)^(i-1) c_i p_(k-i);
* ``CLOSED_FORM``: rational functions of the parameter, available for
  k <= 4 and transcribed below with integer Horner coefficients.

Because the zeros are positive, the power sums sandwich the smallest zero:

    p_k^(-1/k)  <  a_1  <  p_k / p_(k+1)

which translates to brackets for the radius of starlikeness through
r = 2 sqrt(a_1) (circle) and r = 4 b_1 (sqrt).
"""

from __future__ import annotations

import dataclasses
import enum
import math

from .errors import OrderError
from .families import Base, Family, Kind, check_domain
from .series import CoefficientSequence, coefficient_sequence

#: Highest order the binary64 Newton recurrence is allowed to produce.
MAX_NEWTON_ORDER = 8

#: Highest order with a transcribed closed form.
MAX_CLOSED_ORDER = 4

#: Highest bracket order exposed for the Newton route (needs p_(k+1) <= p_7).
MAX_NEWTON_BRACKET = 6

#: Highest bracket order for the closed-form route (needs p_(k+1) <= p_4).
MAX_CLOSED_BRACKET = 3


class SumSource(enum.Enum):
    """Which computation produced a set of power sums."""

    CLOSED_FORM = "closed"
    NEWTON_RECURRENCE = "newton"


@dataclasses.dataclass(frozen=True)
class SumLedger:
    """Power sums p_1..p_K for one family instance, tagged by source."""

    family: Family
    parameter: float
    source: SumSource
    values: tuple[float, ...]

    @property
    def order(self) -> int:
        return len(self.values)

    def p(self, k: int) -> float:
        if not 1 <= k <= self.order:
            raise OrderError(f"ledger holds p_1..p_{self.order}, requested p_{k}")
        return self.values[k - 1]


@dataclasses.dataclass(frozen=True)
class BracketInterval:
    """Certified enclosure lower < radius < upper of order k."""

    family: Family
    parameter: float
    k: int
    lower: float
    upper: float
    source: SumSource

    @property
    def width(self) -> float:
        return self.upper - self.lower


def newton_power_sums(coeffs: CoefficientSequence, upto: int) -> tuple[float, ...]:
    """p_1..p_upto from the coefficients through the Newton identities.

    The recurrence preserves p_1 == c_1 exactly.  Orders above
    MAX_NEWTON_ORDER are rejected: beyond that the alternating recurrence is
    not precision-certified in binary64.
    """
    if upto < 1:
        raise OrderError(f"power-sum order must be >= 1, got {upto}")
    if upto > MAX_NEWTON_ORDER:
        raise OrderError(
            f"power sums limited to order {MAX_NEWTON_ORDER}, got {upto}"
        )
    if coeffs.order < upto:
        raise OrderError(
            f"need coefficients c_0..c_{upto}, sequence stops at c_{coeffs.order}"
        )
    c = coeffs.values
    p: list[float] = []
    for k in range(1, upto + 1):
        acc = (-1.0) ** (k - 1) * k * c[k]
        for i in range(1, k):
            acc += (-1.0) ** (i - 1) * c[i] * p[k - i - 1]
        p.append(acc)
    return tuple(p)


def _poly(x: float, coeffs: tuple[int, ...]) -> float:
    """Horner evaluation; coefficients ordered highest degree first."""
    acc = 0.0
    for a in coeffs:
        acc = acc * x + a
    return acc


# Closed forms.  Numerators are integer-coefficient polynomials evaluated by
# Horner's rule; denominators are products of the linear factors shown.
# Constant-factor placement (numerator multiplier / denominator multiplier):
#
#   family         k=1      k=2       k=3       k=4
#   bessel-circle  3/1      1/1       2/1       1/1
#   bessel-sqrt    2/1      1/1       1/1       1/1
#   struve-circle  4/1      16/3      64/5      256/315
#   struve-sqrt    8/3      32/45     128/945   512/14175
#   lommel-circle  12/1     16/1      192/1     256/1
#   lommel-sqrt    8/1      32/1      128/1     512/1
#
# The fourth lommel-sqrt numerator below is a corrected transcription: the
# commonly quoted polynomial fails the Newton cross-check (relative error
# ~0.55 at mu=1/2) while this one, rederived from the generating identity,
# matches it to binary64 precision.  See the repository notes for evidence.


def _closed_bessel_circle(v: float, k: int) -> float:
    if k == 1:
        return 3.0 / (v + 1.0)
    if k == 2:
        return _poly(v, (4, 13)) / ((v + 1.0) ** 2 * (v + 2.0))
    if k == 3:
        return 2.0 * _poly(v, (4, 26, 49)) / ((v + 1.0) ** 3 * (v + 2.0) * (v + 3.0))
    return _poly(v, (16, 208, 1032, 2341, 1987)) / (
        (v + 1.0) ** 4 * (v + 2.0) ** 2 * (v + 3.0) * (v + 4.0)
    )


def _closed_bessel_sqrt(v: float, k: int) -> float:
    if k == 1:
        return 2.0 / (v + 1.0)
    if k == 2:
        return _poly(v, (1, 5)) / ((v + 1.0) ** 2 * (v + 2.0))
    if k == 3:
        return _poly(v, (1, 8, 23)) / ((v + 1.0) ** 3 * (v + 2.0) * (v + 3.0))
    return _poly(v, (1, 15, 90, 267, 287)) / (
        (v + 1.0) ** 4 * (v + 2.0) ** 2 * (v + 3.0) * (v + 4.0)
    )


def _closed_struve_circle(v: float, k: int) -> float:
    t3 = 2.0 * v + 3.0
    t5 = 2.0 * v + 5.0
    t7 = 2.0 * v + 7.0
    t9 = 2.0 * v + 9.0
    if k == 1:
        return 4.0 / t3
    if k == 2:
        return 16.0 * _poly(v, (2, 9)) / (3.0 * t3**2 * t5)
    if k == 3:
        return 64.0 * _poly(v, (4, 32, 79)) / (5.0 * t3**3 * t5 * t7)
    return 256.0 * _poly(v, (592, 9296, 56352, 159660, 171315)) / (
        315.0 * t3**4 * t5**2 * t7 * t9
    )


def _closed_struve_sqrt(v: float, k: int) -> float:
    t3 = 2.0 * v + 3.0
    t5 = 2.0 * v + 5.0
    t7 = 2.0 * v + 7.0
    t9 = 2.0 * v + 9.0
    if k == 1:
        return 8.0 / (3.0 * t3)
    if k == 2:
        return 32.0 * _poly(v, (2, 23)) / (45.0 * t3**2 * t5)
    if k == 3:
        return 128.0 * _poly(v, (20, 228, 1417)) / (945.0 * t3**3 * t5 * t7)
    return 512.0 * _poly(v, (272, 5552, 47584, 247828, 416439)) / (
        14175.0 * t3**4 * t5**2 * t7 * t9
    )


def _closed_lommel_circle(m: float, k: int) -> float:
    f = [m + 2.0, m + 3.0, m + 4.0, m + 5.0, m + 6.0, m + 7.0, m + 8.0, m + 9.0]
    if k == 1:
        return 12.0 / (f[0] * f[1])
    if k == 2:
        return 16.0 * _poly(m, (-1, 31, 120)) / (f[0] ** 2 * f[1] ** 2 * f[2] * f[3])
    if k == 3:
        return 192.0 * _poly(m, (1, -2, 175, 1842, 4032)) / (
            f[0] ** 3 * f[1] ** 3 * f[2] * f[3] * f[4] * f[5]
        )
    return 256.0 * _poly(
        m, (-1, 128, 2196, 24178, 352645, 3476958, 17744328, 44003088, 42301440)
    ) / (
        f[0] ** 4 * f[1] ** 4 * f[2] ** 2 * f[3] ** 2 * f[4] * f[5] * f[6] * f[7]
    )


def _closed_lommel_sqrt(m: float, k: int) -> float:
    f = [m + 2.0, m + 3.0, m + 4.0, m + 5.0, m + 6.0, m + 7.0, m + 8.0, m + 9.0]
    if k == 1:
        return 8.0 / (f[0] * f[1])
    if k == 2:
        return 32.0 * _poly(m, (-1, 3, 22)) / (f[0] ** 2 * f[1] ** 2 * f[2] * f[3])
    if k == 3:
        return 128.0 * _poly(m, (1, -14, -79, 320, 1308)) / (
            f[0] ** 3 * f[1] ** 3 * f[2] * f[3] * f[4] * f[5]
        )
    # corrected transcription, see the table comment above
    return 512.0 * _poly(
        m, (-1, 24, 384, -1146, -32043, -97686, 321388, 2052024, 2733696)
    ) / (
        f[0] ** 4 * f[1] ** 4 * f[2] ** 2 * f[3] ** 2 * f[4] * f[5] * f[6] * f[7]
    )


_CLOSED = {
    Family.BESSEL_CIRCLE: _closed_bessel_circle,
    Family.BESSEL_SQRT: _closed_bessel_sqrt,
    Family.STRUVE_CIRCLE: _closed_struve_circle,
    Family.STRUVE_SQRT: _closed_struve_sqrt,
    Family.LOMMEL_CIRCLE: _closed_lommel_circle,
    Family.LOMMEL_SQRT: _closed_lommel_sqrt,
}


def closed_form_sum(family: Family, parameter: float, k: int) -> float:
    """Closed-form p_k; available for k = 1..MAX_CLOSED_ORDER."""
    check_domain(family, parameter)
    if not 1 <= k <= MAX_CLOSED_ORDER:
        raise OrderError(
            f"closed forms transcribed for 1 <= k <= {MAX_CLOSED_ORDER}, got {k}"
        )
    return _CLOSED[family](float(parameter), k)


def power_sums(
    family: Family, parameter: float, upto: int, source: SumSource
) -> SumLedger:
    """p_1..p_upto for a family instance from the requested source."""
    check_domain(family, parameter)
    if source is SumSource.CLOSED_FORM:
        if upto > MAX_CLOSED_ORDER:
            raise OrderError(
                f"closed forms stop at order {MAX_CLOSED_ORDER}, got {upto}"
            )
        values = tuple(closed_form_sum(family, parameter, k) for k in range(1, upto + 1))
    else:
        coeffs = coefficient_sequence(family, parameter, upto)
        values = newton_power_sums(coeffs, upto)
    return SumLedger(family, float(parameter), source, values)


def radius_bracket(
    family: Family, parameter: float, k: int, source: SumSource = SumSource.CLOSED_FORM
) -> BracketInterval:
    """Euler-Rayleigh enclosure of order k for the radius of starlikeness.

    Closed-form brackets exist for k <= 3, Newton brackets for k <= 6 (the
    upper endpoint consumes p_(k+1)).  Circle-family radii live in the
    original variable, sqrt-family radii in the substituted one.
    """
    check_domain(family, parameter)
    if k < 1:
        raise OrderError(f"bracket order must be >= 1, got {k}")
    limit = MAX_CLOSED_BRACKET if source is SumSource.CLOSED_FORM else MAX_NEWTON_BRACKET
    if k > limit:
        raise OrderError(
            f"{source.value} brackets available for k <= {limit}, got {k}"
        )
    ledger = power_sums(family, parameter, k + 1, source)
    pk = ledger.p(k)
    pk1 = ledger.p(k + 1)
    if family.kind is Kind.CIRCLE:
        lower = 2.0 * pk ** (-0.5 / k)
        upper = 2.0 * math.sqrt(pk / pk1)
    else:
        lower = 4.0 * pk ** (-1.0 / k)
        upper = 4.0 * pk / pk1
    return BracketInterval(family, float(parameter), k, lower, upper, source)


def crude_upper_bound(family: Family, parameter: float) -> float:
    """Cheap a-priori bound the radius never reaches.

    Circle bounds are square roots of the sqrt-family bounds, reflecting the
    variable substitution.
    """
    check_domain(family, parameter)
    p = float(parameter)
    if family is Family.BESSEL_CIRCLE:
        return math.sqrt(2.0 * (p + 1.0))
    if family is Family.BESSEL_SQRT:
        return 4.0 * (p + 1.0)
    if family is Family.STRUVE_CIRCLE:
        return math.sqrt(3.0 * (p + 1.5))
    if family is Family.STRUVE_SQRT:
        return 3.0 * (2.0 * p + 3.0)
    if family is Family.LOMMEL_CIRCLE:
        return math.sqrt((p + 2.0) * (p + 3.0) / 2.0)
    return (p + 2.0) * (p + 3.0)


def first_rayleigh_zero_sum(base: Base, parameter: float) -> float:
    """sum 1/u_n^2 over the positive zeros u_n of the circle-normalized base.

    These are the classical first Rayleigh sums; they drive tail estimates
    for partial zero sums and the pole expansion check.
    """
    circle = {
        Base.BESSEL: Family.BESSEL_CIRCLE,
        Base.STRUVE: Family.STRUVE_CIRCLE,
        Base.LOMMEL: Family.LOMMEL_CIRCLE,
    }[base]
    check_domain(circle, parameter)
    p = float(parameter)
    if base is Base.BESSEL:
        return 1.0 / (4.0 * (p + 1.0))
    if base is Base.STRUVE:
        return 1.0 / (3.0 * (2.0 * p + 3.0))
    return 1.0 / ((p + 2.0) * (p + 3.0))
