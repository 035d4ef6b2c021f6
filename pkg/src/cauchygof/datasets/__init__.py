"""Bundled example data."""

from importlib import resources
from pathlib import Path

import numpy as np

from ..distributions import Sample

__all__ = ["dax_returns", "dax_returns_path"]


def dax_returns_path() -> Path:
    """Filesystem path of the bundled DAX returns file (one value per line)."""
    return Path(str(resources.files(__package__).joinpath("dax_returns.csv")))


def dax_returns() -> Sample:
    """Thirty daily simple returns of the German DAX stock index.

    Computed from the daily closing prices starting January 1, 1991
    (weekends and holidays excluded) of the classic EuStockMarkets series
    shipped with R, rounded to seven decimal places.  A standard small
    heavy-tailed example: 30 values, one extreme negative day.
    """
    return Sample(np.loadtxt(dax_returns_path()))
