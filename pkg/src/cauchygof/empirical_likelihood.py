"""Empirical likelihood ratio tests on jackknife pseudo-values.

Given pseudo-values v_1..v_m, the empirical likelihood at mean zero places
probability ``p_i = 1 / (m * (1 + lam * v_i))`` on each value, where the
multiplier ``lam`` solves ``mean(v_i / (1 + lam * v_i)) = 0``.  The log
ratio statistic

    -2 log R = 2 * sum(log(1 + lam * v_i))

is asymptotically chi-square with one degree of freedom under the null.

Two entry points are provided: the plain jackknife version, which fails
when all pseudo-values share one sign (the zero mean is outside the convex
hull), and an adjusted version that appends one artificial balancing value
so the constraint is always feasible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .distributions import chisq1_sf
from .errors import HullViolationError, NumericalError
from .ustat import KernelMode, pseudo_values

__all__ = [
    "ELSolution",
    "solve_lambda",
    "jel_test",
    "ajel_test",
    "jel_from_pseudo_values",
    "ajel_from_pseudo_values",
    "adjustment_factor",
]

_HULL_MESSAGE = (
    "empirical likelihood constraint infeasible: all pseudo-values are "
    "strictly on one side of zero"
)

_GTOL = 1e-10
_MAX_ITER = 200


def solve_lambda(values) -> float:
    """Solve ``mean(v / (1 + lam * v)) = 0`` for the EL multiplier.

    The estimating function is strictly decreasing on the feasibility
    interval ``(-1/max(v), -1/min(v))`` and diverges to +/- infinity at the
    ends, so the root is unique.  A bracketed Newton iteration (falling
    back to bisection whenever a step leaves the bracket) locates it to
    ``|mean| < 1e-10``.

    Raises
    ------
    HullViolationError
        If the values do not straddle zero (and are not all zero).
    NumericalError
        If the iteration fails to converge within 200 steps.
    """
    v = np.asarray(values, dtype=float).reshape(-1)
    if v.size == 0:
        raise NumericalError("cannot solve for the multiplier of an empty vector")
    if not np.all(np.isfinite(v)):
        raise NumericalError("pseudo-values contain non-finite entries")
    if np.all(v == 0.0):
        return 0.0
    vmin = float(v.min())
    vmax = float(v.max())
    if not (vmin < 0.0 < vmax):
        raise HullViolationError(_HULL_MESSAGE)

    lo = -1.0 / vmax
    hi = -1.0 / vmin
    margin = 1e-12 * (hi - lo)
    lo += margin
    hi -= margin

    def g_and_slope(lam):
        w = 1.0 + lam * v
        g = float(np.mean(v / w))
        slope = -float(np.mean((v / w) ** 2))
        return g, slope

    lam = 0.0 if lo < 0.0 < hi else 0.5 * (lo + hi)
    for _ in range(_MAX_ITER):
        g, slope = g_and_slope(lam)
        step_ok = slope < 0.0 and math.isfinite(slope)
        if abs(g) < _GTOL:
            # The residual tolerance alone pins lambda only to |g|/|g'|;
            # iterate until that first-order error bound is negligible too,
            # so the returned root does not depend on the search path.
            err = abs(g / slope) if step_ok else hi - lo
            if min(err, hi - lo) < 1e-12 * max(1.0, abs(lam)):
                return lam
        # g is decreasing: positive g means the root lies to the right.
        if g > 0.0:
            lo = lam
        else:
            hi = lam
        nxt = lam - g / slope if step_ok else 0.5 * (lo + hi)
        if not (lo < nxt < hi):
            nxt = 0.5 * (lo + hi)
        lam = nxt
    raise NumericalError("multiplier solve did not reach tolerance in 200 iterations")


@dataclass(frozen=True)
class ELSolution:
    """Outcome of one empirical likelihood evaluation.

    When ``hull_ok`` is False the constraint was infeasible: ``lam`` is
    nan, ``weights`` is None, the statistic is +inf and the p-value 0, so
    the configuration counts as a maximal rejection rather than an error.
    """

    lam: float
    weights: np.ndarray | None
    neg2_log_ratio: float
    p_value: float
    hull_ok: bool

    @property
    def statistic(self) -> float:
        return self.neg2_log_ratio


def _solve_el(v: np.ndarray) -> ELSolution:
    try:
        lam = solve_lambda(v)
    except HullViolationError:
        return ELSolution(
            lam=float("nan"),
            weights=None,
            neg2_log_ratio=float("inf"),
            p_value=0.0,
            hull_ok=False,
        )
    m = v.size
    log_terms = np.log1p(lam * v)
    weights = 1.0 / (m * (1.0 + lam * v))
    neg2 = max(2.0 * float(np.sum(log_terms)), 0.0)
    return ELSolution(
        lam=lam,
        weights=weights,
        neg2_log_ratio=neg2,
        p_value=float(chisq1_sf(neg2)),
        hull_ok=True,
    )


def jel_from_pseudo_values(values) -> ELSolution:
    """Empirical likelihood ratio for mean zero on the given pseudo-values."""
    v = np.asarray(values, dtype=float).reshape(-1)
    return _solve_el(v)


def adjustment_factor(n: int) -> float:
    """Balancing-point weight ``max(1, log(n) / 2)`` for the adjusted test."""
    if n < 1:
        raise NumericalError("adjustment factor requires a positive count")
    return max(1.0, math.log(n) / 2.0)


def ajel_from_pseudo_values(values) -> ELSolution:
    """Adjusted empirical likelihood: always-feasible variant.

    Appends the artificial value ``-max(1, log(n)/2) * mean(v)`` to the n
    pseudo-values before solving, which places zero inside the convex hull
    for every input, then evaluates the ratio over the n + 1 points.
    """
    v = np.asarray(values, dtype=float).reshape(-1)
    if v.size == 0:
        raise NumericalError("cannot adjust an empty pseudo-value vector")
    extra = -adjustment_factor(v.size) * float(np.mean(v))
    return _solve_el(np.append(v, extra))


def jel_test(sample, mode=KernelMode.SYM6) -> ELSolution:
    """Jackknife empirical likelihood ratio test of the C(0, 1) null.

    The p-value is the chi-square(1) survival function of the ratio
    statistic.  An infeasible constraint set (possible for data far from
    the null) is reported via ``hull_ok=False`` with a zero p-value.
    """
    pv = pseudo_values(sample, mode)
    return jel_from_pseudo_values(pv.values)


def ajel_test(sample, mode=KernelMode.SYM6) -> ELSolution:
    """Adjusted jackknife empirical likelihood ratio test of C(0, 1).

    Feasible for every sample; the p-value is the chi-square(1) survival
    function of the adjusted ratio statistic.
    """
    pv = pseudo_values(sample, mode)
    return ajel_from_pseudo_values(pv.values)
