"""Power-series evaluation of the normalized functions and their derivatives.

Every family shares one template.  Writing u_n for the base coefficient

* Bessel:  u_n = 1 / (n! (nu+1)_n)
* Struve:  u_n = 1 / ((3/2)_n (nu+3/2)_n)
* Lommel:  u_n = 1 / (((mu+2)/2)_n ((mu+3)/2)_n)

the circle-normalized function is   f(x) = sum (-1)^n u_n x^(2n+1) / 4^n
and the sqrt-normalized function is f(x) = sum (-1)^n u_n x^(n+1) / 4^n.

Differentiating termwise and normalizing by the constant term gives the
"transformed derivative" coefficients

    circle: c_n = (2n+1) u_n        sqrt: c_n = (n+1) u_n

with c_0 = 1 and c_n > 0 throughout each domain.  The derivative's zeros in
the substituted variable are what the root finder brackets and refines, so
these c_n feed both the series evaluators here and the zero-sum machinery in
:mod:`radii.sums`.

All arithmetic is plain binary64 using ratio recurrences; no Gamma values
are ever formed, so large orders (nu of order 10^3) stay representable.
"""

from __future__ import annotations

import dataclasses
import os

from .errors import TruncationError
from .families import Base, Family, Kind, check_domain

# Stopping rule: a term may be dropped once at least MIN_TERMS terms have been
# consumed and it is below EPS_REL times the largest partial sum seen so far.
# The series are alternating with eventually decreasing terms, so the error
# committed is bounded by the first dropped term.
EPS_REL = 1e-16
MIN_TERMS = 8
DEFAULT_MAX_TERMS = 400
MAX_TERMS_ENV = "RADII_MAX_TERMS"


def resolve_max_terms(max_terms: int | None = None) -> int:
    """Return the term budget, honoring the RADII_MAX_TERMS override.

    The environment variable is read at call time so long-running processes
    can adjust it between calls.  Budgets below 9 cannot satisfy the
    minimum-term rule and are rejected.
    """
    if max_terms is None:
        env = os.environ.get(MAX_TERMS_ENV)
        max_terms = int(env) if env is not None else DEFAULT_MAX_TERMS
    max_terms = int(max_terms)
    if max_terms < MIN_TERMS + 1:
        raise ValueError(f"term budget must be at least {MIN_TERMS + 1}, got {max_terms}")
    return max_terms


def base_coefficient_ratio(base: Base, parameter: float, n: int) -> float:
    """Ratio u_(n+1)/u_n of the base series coefficients."""
    p = float(parameter)
    if base is Base.BESSEL:
        return 1.0 / ((n + 1.0) * (p + 1.0 + n))
    if base is Base.STRUVE:
        return 1.0 / ((n + 1.5) * (p + 1.5 + n))
    # Lommel: ((mu+2)/2 + n) ((mu+3)/2 + n) in the denominator
    return 4.0 / ((2.0 * n + p + 2.0) * (2.0 * n + p + 3.0))


def coefficient_ratio(family: Family, parameter: float, n: int) -> float:
    """Ratio c_(n+1)/c_n of the transformed derivative coefficients."""
    r = base_coefficient_ratio(family.base, parameter, n)
    if family.kind is Kind.CIRCLE:
        return r * (2.0 * n + 3.0) / (2.0 * n + 1.0)
    return r * (n + 2.0) / (n + 1.0)


@dataclasses.dataclass(frozen=True)
class CoefficientSequence:
    """Transformed derivative coefficients c_0..c_N of one family instance."""

    family: Family
    parameter: float
    values: tuple[float, ...]

    @property
    def order(self) -> int:
        return len(self.values) - 1


def coefficient_sequence(family: Family, parameter: float, upto: int) -> CoefficientSequence:
    """Compute c_0..c_upto by running the ratio recurrence from c_0 = 1."""
    check_domain(family, parameter)
    if upto < 0:
        raise ValueError(f"coefficient order must be nonnegative, got {upto}")
    values = [1.0]
    c = 1.0
    for n in range(upto):
        c *= coefficient_ratio(family, parameter, n)
        values.append(c)
    return CoefficientSequence(family, float(parameter), tuple(values))


def _sum_with_stopping_rule(
    term0: float, ratio, max_terms: int, context: str
) -> tuple[float, int]:
    """Sum term0 * prod(ratio(i)) with the shared truncation policy.

    ``ratio(n)`` must return term_(n+1)/term_n.  Returns (sum, terms used).
    """
    total = term0
    run_max = abs(total)
    term = term0
    n = 0
    while True:
        nxt = term * ratio(n)
        if n + 1 >= MIN_TERMS and abs(nxt) < EPS_REL * run_max:
            return total, n + 1
        if n + 1 >= max_terms:
            raise TruncationError(
                f"{context}: stopping rule not met within {max_terms} terms"
            )
        term = nxt
        total += term
        n += 1
        if abs(total) > run_max:
            run_max = abs(total)


def eval_normalized(
    family: Family, parameter: float, x: float, *, max_terms: int | None = None
) -> float:
    """Value of the normalized function at x (at z for sqrt families).

    For sqrt families the argument is the substituted variable, i.e. the
    series sum(-1)^n u_n x^(n+1)/4^n is evaluated as given.
    """
    check_domain(family, parameter)
    budget = resolve_max_terms(max_terms)
    x = float(x)
    if x == 0.0:
        return 0.0
    if family.kind is Kind.CIRCLE:
        q = -(x * x) / 4.0
    else:
        q = -x / 4.0

    def ratio(n: int) -> float:
        return q * base_coefficient_ratio(family.base, parameter, n)

    total, _ = _sum_with_stopping_rule(x, ratio, budget, f"{family.value} value at {x!r}")
    return total


def eval_normalized_derivative(
    family: Family, parameter: float, x: float, *, max_terms: int | None = None
) -> float:
    """Derivative of the normalized function at x (d/dz at z for sqrt families).

    This is the series sum(-1)^n c_n x^(2n)/4^n (circle) or
    sum(-1)^n c_n x^n/4^n (sqrt) whose first positive zero is the radius of
    starlikeness of the family member.
    """
    check_domain(family, parameter)
    budget = resolve_max_terms(max_terms)
    x = float(x)
    if family.kind is Kind.CIRCLE:
        q = -(x * x) / 4.0
    else:
        q = -x / 4.0
    if x == 0.0:
        return 1.0

    def ratio(n: int) -> float:
        return q * coefficient_ratio(family, parameter, n)

    total, _ = _sum_with_stopping_rule(
        1.0, ratio, budget, f"{family.value} derivative at {x!r}"
    )
    return total
