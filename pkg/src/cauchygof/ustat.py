"""Third-order U-statistic for the Cauchy identity and its jackknife.

The statistic is built on the distributional identity that characterizes
C(0, 1): if X1, X2, X3 are iid standard Cauchy then ``(X1 - 1/X2) / 2`` is
again standard Cauchy, so the indicator

    I{ (X1 * X2 - 1) / (2 * X2) <= X3 }

has expectation 1/2 exactly under the null.  Averaging the indicator over
all index triples and subtracting 1/2 gives a degenerate-mean statistic
whose jackknife pseudo-values feed the empirical likelihood tests.

Three kernel symmetrizations are provided (see :class:`KernelMode`).  All
of them are computed by one pass over the ``C(n, 3)`` index combinations
with pure integer accumulation, so the per-observation jackknife totals
come out exact and the leave-one-out recomputation identity holds to the
last bit.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import comb

import numpy as np

from .distributions import Sample, as_sample
from .errors import ValidationError

try:
    from numba import njit
except ImportError:  # pragma: no cover - numba is a declared dependency
    def njit(**_kwargs):
        def wrap(fn):
            return fn
        return wrap

__all__ = [
    "KernelMode",
    "PseudoValues",
    "kernel_indicator",
    "symmetrized_kernel",
    "delta_star",
    "leave_one_out_deltas",
    "pseudo_values",
]


class KernelMode(str, enum.Enum):
    """How the order-sensitive indicator is symmetrized over a triple.

    LITERAL
        One indicator per combination, with the role order fixed by index
        rank: for positions a < b < c the indicator is evaluated with the
        highest-index value first, ``I{ psi(x_c, x_b) <= x_a }``.  Depends
        on the order of the input vector.
    SYM3
        Three-term average assigning each element of the (index-ordered)
        triple in turn to the conditioning role.
    SYM6
        Full average over all six argument orders; invariant under any
        permutation of the input vector.  This is the default.
    """

    LITERAL = "literal"
    SYM3 = "sym3"
    SYM6 = "sym6"


_MODE_CODE = {KernelMode.LITERAL: 0, KernelMode.SYM3: 1, KernelMode.SYM6: 2}
_MODE_TERMS = {KernelMode.LITERAL: 1, KernelMode.SYM3: 3, KernelMode.SYM6: 6}


def _coerce_mode(mode) -> KernelMode:
    if isinstance(mode, KernelMode):
        return mode
    try:
        return KernelMode(str(mode))
    except ValueError as exc:
        raise ValidationError(
            f"unknown kernel mode {mode!r}; expected one of "
            f"{[m.value for m in KernelMode]}"
        ) from exc


def _validate_values(sample, min_n: int) -> np.ndarray:
    s = as_sample(sample)
    if s.n < min_n:
        raise ValidationError(f"need at least {min_n} observations, got {s.n}")
    if np.any(s.values == 0.0):
        raise ValidationError(
            "sample contains an exact zero; the kernel divides by the "
            "conditioning observation and requires every value nonzero"
        )
    return s.values


def kernel_indicator(x1: float, x2: float, x3: float) -> int:
    """Indicator ``I{ (x1 * x2 - 1) / (2 * x2) <= x3 }`` (weak inequality).

    ``x2`` must be nonzero.  The pseudo-observation is evaluated in the
    overflow-safe form ``(x1 - 1/x2) / 2``.

    >>> kernel_indicator(1.0, 2.0, 3.0)
    1
    >>> kernel_indicator(3.0, 2.0, 1.0)
    0
    """
    vals = (float(x1), float(x2), float(x3))
    if not all(np.isfinite(v) for v in vals):
        raise ValidationError("kernel arguments must be finite")
    if vals[1] == 0.0:
        raise ValidationError(
            "kernel undefined for x2 == 0; the pseudo-observation divides by x2"
        )
    return 1 if 0.5 * (vals[0] - 1.0 / vals[1]) <= vals[2] else 0


def symmetrized_kernel(x1: float, x2: float, x3: float, mode=KernelMode.SYM6) -> float:
    """Kernel value for one triple under the given symmetrization.

    All three arguments must be nonzero (every element takes the divisor
    role in the symmetrized forms; the literal form divides by ``x2``).
    """
    mode = _coerce_mode(mode)
    vals = (float(x1), float(x2), float(x3))
    if not all(np.isfinite(v) for v in vals):
        raise ValidationError("kernel arguments must be finite")
    if any(v == 0.0 for v in vals):
        raise ValidationError(
            "kernel undefined when any argument is zero; the pseudo-observation "
            "divides by its second argument"
        )
    if mode is KernelMode.LITERAL:
        return float(kernel_indicator(*vals))
    a, b, c = vals
    if mode is KernelMode.SYM3:
        total = (
            kernel_indicator(a, b, c)
            + kernel_indicator(a, c, b)
            + kernel_indicator(b, c, a)
        )
        return total / 3.0
    total = (
        kernel_indicator(a, b, c)
        + kernel_indicator(b, a, c)
        + kernel_indicator(a, c, b)
        + kernel_indicator(c, a, b)
        + kernel_indicator(b, c, a)
        + kernel_indicator(c, b, a)
    )
    return total / 6.0


@njit(cache=True, nogil=True)
def _triple_scan(x, mode_code):  # pragma: no cover - exercised via wrappers
    """Single pass over index combinations a < b < c.

    Returns the integer grand total S of indicator hits, the per-position
    totals T (T[i] sums the hits of every combination containing i), and
    the number of combinations visited.
    """
    n = x.size
    T = np.zeros(n, dtype=np.int64)
    S = 0
    evals = 0
    for a in range(n - 2):
        xa = x[a]
        for b in range(a + 1, n - 1):
            xb = x[b]
            for c in range(b + 1, n):
                xc = x[c]
                w = 0
                if mode_code == 0:
                    # literal: highest index first, psi(x_c, x_b) vs x_a
                    if 0.5 * (xc - 1.0 / xb) <= xa:
                        w = 1
                elif mode_code == 1:
                    if 0.5 * (xa - 1.0 / xb) <= xc:
                        w += 1
                    if 0.5 * (xa - 1.0 / xc) <= xb:
                        w += 1
                    if 0.5 * (xb - 1.0 / xc) <= xa:
                        w += 1
                else:
                    if 0.5 * (xa - 1.0 / xb) <= xc:
                        w += 1
                    if 0.5 * (xb - 1.0 / xa) <= xc:
                        w += 1
                    if 0.5 * (xa - 1.0 / xc) <= xb:
                        w += 1
                    if 0.5 * (xc - 1.0 / xa) <= xb:
                        w += 1
                    if 0.5 * (xb - 1.0 / xc) <= xa:
                        w += 1
                    if 0.5 * (xc - 1.0 / xb) <= xa:
                        w += 1
                evals += 1
                S += w
                T[a] += w
                T[b] += w
                T[c] += w
    return S, T, evals


def _scan_counts(values: np.ndarray, mode: KernelMode):
    """Run the combination scan; returns ``(S, T, evals)`` as exact integers."""
    S, T, evals = _triple_scan(np.ascontiguousarray(values), _MODE_CODE[mode])
    return int(S), T, int(evals)


def _delta_from_count(count: int, n: int, terms: int) -> float:
    # One float division of exact integers keeps full- and reduced-sample
    # statistics on the identical code path.
    return count / (terms * comb(n, 3)) - 0.5


def delta_star(sample, mode=KernelMode.SYM6) -> float:
    """Centered U-statistic: mean kernel value over all triples minus 1/2.

    Lies in [-1/2, 1/2]; under C(0, 1) its expectation is 0.
    """
    mode = _coerce_mode(mode)
    x = _validate_values(sample, 3)
    S, _, _ = _scan_counts(x, mode)
    return _delta_from_count(S, x.size, _MODE_TERMS[mode])


def leave_one_out_deltas(sample, mode=KernelMode.SYM6) -> np.ndarray:
    """Vector of the statistic recomputed with each observation removed.

    Entry i equals ``delta_star`` of the sample without observation i,
    exactly: removing i discards precisely those combinations that contain
    i, whose integer hit total is tracked during the single full-sample
    pass.
    """
    mode = _coerce_mode(mode)
    x = _validate_values(sample, 4)
    S, T, _ = _scan_counts(x, mode)
    terms = _MODE_TERMS[mode]
    n = x.size
    return np.array(
        [_delta_from_count(S - int(T[i]), n - 1, terms) for i in range(n)]
    )


@dataclass(frozen=True)
class PseudoValues:
    """Jackknife pseudo-values of the centered U-statistic.

    ``values[i] = n * delta - (n - 1) * loo[i]``.  Their mean reproduces
    ``delta`` (a linear-statistic identity, exact up to float rounding),
    which is what makes them usable as approximately iid inputs to the
    empirical likelihood.
    """

    values: np.ndarray
    delta: float
    mode: KernelMode

    @property
    def n(self) -> int:
        return int(self.values.size)


def pseudo_values(sample, mode=KernelMode.SYM6) -> PseudoValues:
    """Compute jackknife pseudo-values in one pass over the triples.

    The full-sample statistic and all n leave-one-out statistics derive
    from the same integer totals, so the cost is exactly ``C(n, 3)``
    kernel-combination evaluations.
    """
    mode = _coerce_mode(mode)
    x = _validate_values(sample, 4)
    S, T, _ = _scan_counts(x, mode)
    terms = _MODE_TERMS[mode]
    n = x.size
    delta = _delta_from_count(S, n, terms)
    loo = np.array([_delta_from_count(S - int(T[i]), n - 1, terms) for i in range(n)])
    J = n * delta - (n - 1) * loo
    return PseudoValues(values=J, delta=delta, mode=mode)
