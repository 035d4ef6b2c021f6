"""Input parsing, report documents, and plot-data extraction.

Everything here backs the command line front end but is importable on its
own: reading a numeric column out of a delimited text file, bundling the
battery outcomes into a JSON-serializable report, and producing the Q-Q
and histogram coordinates for diagnostic plots.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from ._version import __version__
from .classical_tests import TestOutcome
from .distributions import Sample, as_sample, cauchy_pdf, cauchy_quantile, compute_returns
from .errors import ValidationError

__all__ = [
    "parse_input",
    "ReportDocument",
    "qq_points",
    "histogram_data",
    "write_qq_csv",
    "write_histogram_csv",
    "render_outcomes",
]


def _select_column(header, column):
    """Resolve a --column argument to a field index."""
    if column is None:
        return 0
    text = str(column)
    if header is not None and text in header:
        return header.index(text)
    try:
        idx = int(text)
    except ValueError:
        if header is None:
            raise ValidationError(
                f"column {column!r} is not an integer and the file has no header row"
            ) from None
        raise ValidationError(
            f"column {column!r} not found in header {header}"
        ) from None
    if idx < 0:
        raise ValidationError("column index must be nonnegative")
    return idx


def parse_input(path, column=None, has_header: bool = False, prices: bool = False) -> Sample:
    """Read one numeric column from a delimited text file.

    Accepts comma-separated files as well as the degenerate one-value-
    per-line form.  ``column`` selects a field by integer position or, if
    ``has_header``, by name.  Rows that are entirely empty are skipped;
    any row whose selected field does not parse as a finite float aborts
    the read with a message listing the offending (1-based) line numbers.

    With ``prices=True`` the column is interpreted as a price path and
    converted to simple returns.
    """
    path = Path(path)
    if not path.exists():
        raise ValidationError(f"input file not found: {path}")
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    line_numbers = range(1, len(rows) + 1)
    pairs = [(ln, row) for ln, row in zip(line_numbers, rows) if any(f.strip() for f in row)]
    header = None
    if has_header:
        if not pairs:
            raise ValidationError(f"{path} is empty")
        header = [f.strip() for f in pairs[0][1]]
        pairs = pairs[1:]
    if not pairs:
        raise ValidationError(f"{path} contains no data rows")
    idx = _select_column(header, column)

    values = []
    bad_lines = []
    for ln, row in pairs:
        if idx >= len(row):
            bad_lines.append(ln)
            continue
        text = row[idx].strip()
        try:
            v = float(text)
        except ValueError:
            bad_lines.append(ln)
            continue
        if not np.isfinite(v):
            bad_lines.append(ln)
            continue
        values.append(v)
    if bad_lines:
        shown = ", ".join(str(b) for b in bad_lines[:10])
        more = "" if len(bad_lines) <= 10 else f" (and {len(bad_lines) - 10} more)"
        raise ValidationError(
            f"{path}: non-numeric or missing values on line(s) {shown}{more}"
        )
    if prices:
        return compute_returns(values)
    return Sample(np.asarray(values))


@dataclass(frozen=True)
class ReportDocument:
    """Full record of one battery run, round-trippable through JSON.

    Non-finite statistics serialize as the JSON extensions ``Infinity`` /
    ``NaN`` that the standard library reads back natively.
    """

    dataset: dict
    outcomes: tuple
    config: dict
    version: str = __version__

    def to_dict(self) -> dict:
        return {
            "dataset": dict(self.dataset),
            "outcomes": [o.as_dict() for o in self.outcomes],
            "config": dict(self.config),
            "version": self.version,
        }

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, payload: dict) -> "ReportDocument":
        outcomes = tuple(
            TestOutcome(
                test_id=o["test_id"],
                statistic=float(o["statistic"]),
                p_value=float(o["p_value"]),
                p_method=o["p_method"],
                alpha=float(o["alpha"]),
                reject=bool(o["reject"]),
                warnings=tuple(o.get("warnings", ())),
                n=int(o.get("n", 0)),
            )
            for o in payload["outcomes"]
        )
        return cls(
            dataset=dict(payload["dataset"]),
            outcomes=outcomes,
            config=dict(payload["config"]),
            version=payload.get("version", __version__),
        )

    @classmethod
    def from_json(cls, text: str) -> "ReportDocument":
        return cls.from_dict(json.loads(text))


def qq_points(sample):
    """Quantile-quantile coordinates against the C(0, 1) null.

    Returns ``(theoretical, empirical)`` where the theoretical values are
    the null quantiles at the plotting positions ``(i - 0.5) / n`` and the
    empirical values are the sorted sample.
    """
    s = as_sample(sample)
    emp = np.sort(s.values)
    probs = (np.arange(1, s.n + 1) - 0.5) / s.n
    return cauchy_quantile(probs), emp


def histogram_data(sample, bins: int = 30):
    """Histogram counts plus the null density at the bin midpoints.

    Returns ``(counts, edges, pdf_mid)``; ``edges`` has one more entry
    than ``counts``.
    """
    s = as_sample(sample)
    bins = int(bins)
    if bins < 1:
        raise ValidationError("need at least one histogram bin")
    counts, edges = np.histogram(s.values, bins=bins)
    mids = 0.5 * (edges[:-1] + edges[1:])
    return counts, edges, cauchy_pdf(mids)


def write_qq_csv(sample, path) -> Path:
    theo, emp = qq_points(sample)
    path = Path(path)
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["theoretical", "empirical"])
        for t, e in zip(theo, emp):
            writer.writerow([repr(float(t)), repr(float(e))])
    return path


def write_histogram_csv(sample, path, bins: int = 30) -> Path:
    counts, edges, pdf_mid = histogram_data(sample, bins)
    path = Path(path)
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["count", "left", "right", "pdf_mid"])
        for k in range(counts.size):
            writer.writerow(
                [
                    int(counts[k]),
                    repr(float(edges[k])),
                    repr(float(edges[k + 1])),
                    repr(float(pdf_mid[k])),
                ]
            )
    return path


def render_outcomes(outcomes, title: str = "") -> str:
    """Fixed-width text table of battery outcomes for terminal output."""
    lines = []
    if title:
        lines.append(title)
    lines.append(f"{'test':<6} {'statistic':>12} {'p-value':>10} {'method':>12} {'decision':>10}")
    for o in outcomes:
        stat = f"{o.statistic:.6g}" if np.isfinite(o.statistic) else str(o.statistic)
        p = f"{o.p_value:.4f}" if np.isfinite(o.p_value) else str(o.p_value)
        decision = "reject" if o.reject else "retain"
        lines.append(f"{o.test_id:<6} {stat:>12} {p:>10} {o.p_method:>12} {decision:>10}")
        for w in o.warnings:
            lines.append(f"       note: {w}")
    return "\n".join(lines)
