"""Monte Carlo size and power studies over the full test battery.

A study is a grid of cells (alternative distribution x sample size).  For
each cell, ``reps`` independent samples are drawn and every configured
test is applied; the output is one row per (alternative, n, test) with the
rejection count at level alpha.

Reproducibility contract: every replication's seed is a pure function of
``(master_seed, cell_id, rep_index)`` and every rejection decision is
accumulated as an integer, so results are byte-identical no matter how
many worker threads execute the replications.  Monte Carlo critical value
tables for the classical tests are generated once per (test, n) from
seeds derived from the master seed (cell id 0 is reserved for them).
"""

from __future__ import annotations

import csv
import json
import logging
import time
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .classical_tests import (
    ALL_TESTS,
    DEFAULT_TABLE_B,
    EL_TESTS,
    TableStore,
    _statistic_fn,
    mc_p_value,
    qualified_test_id,
    rejection_tail,
)
from .distributions import DistributionSpec, sample_distribution, standard_cauchy
from .empirical_likelihood import ajel_from_pseudo_values, jel_from_pseudo_values
from .errors import NumericalError, NumericalWarning, ValidationError
from .seeding import derive_rep_seed
from .ustat import KernelMode, pseudo_values

__all__ = [
    "StudyConfig",
    "StudyRow",
    "StudyResult",
    "run_study",
    "size_study",
    "power_study",
    "derive_rep_seed",
]

logger = logging.getLogger(__name__)

_TABLE_CELL = 0  # cell id reserved for critical-value-table generation


@dataclass(frozen=True)
class StudyConfig:
    """Grid and sampling parameters for one study."""

    alternatives: tuple = (standard_cauchy(),)
    sizes: tuple = (20, 40, 60, 100)
    reps: int = 2000
    alpha: float = 0.05
    tests: tuple = ALL_TESTS
    mode: KernelMode = KernelMode.SYM6
    master_seed: int = 1729
    threads: int = 1
    table_B: int = DEFAULT_TABLE_B

    def __post_init__(self):
        alts = tuple(
            a if isinstance(a, DistributionSpec) else DistributionSpec.parse(str(a))
            for a in self.alternatives
        )
        if not alts:
            raise ValidationError("study needs at least one alternative")
        sizes = tuple(int(n) for n in self.sizes)
        if not sizes:
            raise ValidationError("study needs at least one sample size")
        tests = tuple(str(t) for t in self.tests)
        unknown = [t for t in tests if t not in ALL_TESTS]
        if unknown:
            raise ValidationError(f"unknown test ids {unknown}")
        if not tests:
            raise ValidationError("study needs at least one test")
        min_n = 4 if any(t in EL_TESTS for t in tests) else 2
        if min(sizes) < min_n:
            raise ValidationError(
                f"smallest sample size {min(sizes)} is below the minimum {min_n} "
                "for the configured tests"
            )
        if int(self.reps) < 1:
            raise ValidationError("need at least one replication")
        if not 0.0 < self.alpha < 1.0:
            raise ValidationError("significance level must lie in (0, 1)")
        if int(self.threads) < 1:
            raise ValidationError("thread count must be at least 1")
        if int(self.table_B) < 100:
            raise ValidationError("need at least 100 table replications")
        object.__setattr__(self, "alternatives", alts)
        object.__setattr__(self, "sizes", sizes)
        object.__setattr__(self, "tests", tests)
        object.__setattr__(self, "reps", int(self.reps))
        object.__setattr__(self, "threads", int(self.threads))
        object.__setattr__(self, "table_B", int(self.table_B))
        object.__setattr__(self, "mode", KernelMode(self.mode))

    def echo(self) -> dict:
        """Config summary embedded in result files.

        The thread count is deliberately omitted: it changes execution,
        never results.
        """
        return {
            "alternatives": [a.label() for a in self.alternatives],
            "sizes": list(self.sizes),
            "reps": self.reps,
            "alpha": self.alpha,
            "tests": list(self.tests),
            "mode": self.mode.value,
            "master_seed": self.master_seed,
            "table_B": self.table_B,
        }


@dataclass(frozen=True)
class StudyRow:
    """Aggregated rejections for one (alternative, n, test) cell."""

    alternative: str
    n: int
    test: str
    reps: int
    rejections: int
    proportion: float
    mc_se: float
    hull_violations: int

    _FIELDS = (
        "alternative",
        "n",
        "test",
        "reps",
        "rejections",
        "proportion",
        "mc_se",
        "hull_violations",
    )

    def as_record(self) -> dict:
        return {name: getattr(self, name) for name in self._FIELDS}


@dataclass(frozen=True)
class StudyResult:
    rows: tuple
    config: StudyConfig

    def to_csv(self, path) -> Path:
        path = Path(path)
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(StudyRow._FIELDS)
            for row in self.rows:
                writer.writerow(
                    [
                        row.alternative,
                        row.n,
                        row.test,
                        row.reps,
                        row.rejections,
                        repr(row.proportion),
                        repr(row.mc_se),
                        row.hull_violations,
                    ]
                )
        return path

    def to_json(self, path) -> Path:
        path = Path(path)
        payload = {
            "config": self.config.echo(),
            "rows": [row.as_record() for row in self.rows],
        }
        with open(path, "w") as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")
        return path


class _CellPlan:
    """Resolved per-cell test plan: statistic callables and null tables."""

    def __init__(self, config: StudyConfig, n: int, store: TableStore):
        self.mode = config.mode
        self.alpha = config.alpha
        self.el_tests = [t for t in config.tests if t in EL_TESTS]
        self.classical = []
        for tid in config.tests:
            if tid in EL_TESTS:
                continue
            qid = qualified_test_id(tid)
            seed = _table_seed(config.master_seed, tid, n)
            table = store.get(qid, n, config.table_B, seed)
            self.classical.append((tid, _statistic_fn(qid), table, rejection_tail(tid)))


def _table_seed(master_seed: int, test_id: str, n: int) -> int:
    index = ALL_TESTS.index(test_id)
    return derive_rep_seed(master_seed, _TABLE_CELL, (index << 32) | n)


def _run_rep(plan: _CellPlan, sample, counts: dict):
    """Apply every planned test to one sample, updating integer tallies."""
    if plan.el_tests:
        try:
            pv = pseudo_values(sample, plan.mode)
        except (ValidationError, NumericalError):
            pv = None
            for tid in plan.el_tests:
                counts[tid][2] += 1
        if pv is not None:
            for tid in plan.el_tests:
                sol = (
                    jel_from_pseudo_values(pv.values)
                    if tid == "jel"
                    else ajel_from_pseudo_values(pv.values)
                )
                if not sol.hull_ok:
                    counts[tid][0] += 1
                    counts[tid][1] += 1
                elif sol.p_value < plan.alpha:
                    counts[tid][0] += 1
    for tid, fn, table, tail in plan.classical:
        try:
            stat = fn(sample)
        except (ValidationError, NumericalError):
            counts[tid][2] += 1
            continue
        if mc_p_value(table, stat, tail) < plan.alpha:
            counts[tid][0] += 1


def _run_cell(config: StudyConfig, plan: _CellPlan, alt: DistributionSpec,
              n: int, cell_id: int) -> dict:
    """All replications of one cell; returns {test: [rejects, hulls, failures]}."""

    def chunk(rep_range) -> dict:
        local = {tid: [0, 0, 0] for tid in config.tests}
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", NumericalWarning)
            for r in rep_range:
                seed = derive_rep_seed(config.master_seed, cell_id, r)
                sample = sample_distribution(alt, n, seed)
                _run_rep(plan, sample, local)
        return local

    if config.threads == 1:
        return chunk(range(config.reps))
    bounds = np.linspace(0, config.reps, config.threads + 1).astype(int)
    ranges = [range(bounds[k], bounds[k + 1]) for k in range(config.threads)]
    merged = {tid: [0, 0, 0] for tid in config.tests}
    with ThreadPoolExecutor(max_workers=config.threads) as pool:
        for part in pool.map(chunk, ranges):
            for tid, vals in part.items():
                for j in range(3):
                    merged[tid][j] += vals[j]
    return merged


def run_study(config: StudyConfig, store: TableStore | None = None) -> StudyResult:
    """Execute the full grid and aggregate rejection rates.

    The reported Monte Carlo standard error is the binomial standard
    error at the nominal level for null cells and at the observed
    proportion otherwise.
    """
    store = store or TableStore()
    rows = []
    cell_id = 0
    for alt in config.alternatives:
        is_null = alt.is_standard_cauchy()
        for n in config.sizes:
            cell_id += 1
            plan = _CellPlan(config, n, store)
            t0 = time.perf_counter()
            counts = _run_cell(config, plan, alt, n, cell_id)
            elapsed = time.perf_counter() - t0
            logger.info(
                "cell %s n=%d: %d reps in %.1fs", alt.label(), n, config.reps, elapsed
            )
            for tid in config.tests:
                rej, hull, fails = counts[tid]
                if fails:
                    logger.warning(
                        "%s at %s n=%d: %d replications failed validation and "
                        "count as non-rejections",
                        tid, alt.label(), n, fails,
                    )
                prop = rej / config.reps
                base = config.alpha if is_null else prop
                mc_se = float(np.sqrt(base * (1.0 - base) / config.reps))
                rows.append(
                    StudyRow(
                        alternative=alt.label(),
                        n=n,
                        test=tid,
                        reps=config.reps,
                        rejections=rej,
                        proportion=prop,
                        mc_se=mc_se,
                        hull_violations=hull,
                    )
                )
    return StudyResult(rows=tuple(rows), config=config)


def size_study(config: StudyConfig, store: TableStore | None = None) -> StudyResult:
    """Type I error study: every alternative must be the C(0, 1) null."""
    if not all(a.is_standard_cauchy() for a in config.alternatives):
        raise ValidationError(
            "size study requires the null distribution cauchy:0,1 as the only alternative"
        )
    return run_study(config, store)


def power_study(config: StudyConfig, store: TableStore | None = None) -> StudyResult:
    """Rejection-rate study under the configured alternatives."""
    return run_study(config, store)
