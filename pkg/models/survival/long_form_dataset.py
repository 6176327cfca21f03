from dataclasses import dataclass
from functools import cached_property
from typing import List, Optional, Sequence

import numpy as np

from app.errors import DimensionMismatchError, InvalidParameterValueError
from models.survival.interval_grid import IntervalGrid
from models.survival.survival_dataset import SurvivalDataset


@dataclass(frozen=True)
class LongFormDataset:
    """
    Interval-expanded (Poisson) representation of a survival dataset.

    One row per subject and interval with positive exposure. Covariate rows are not
    copied; they are looked up in ``source.covariates`` through ``subject``.

    Attributes:
    ----------
    source : SurvivalDataset
        Subject-level data the rows were expanded from.
    grid : IntervalGrid
        Cut points used for the expansion.
    subject : np.ndarray
        Subject index (row of ``source``) per long-form row.
    interval : np.ndarray
        0-based interval index j per row.
    exposure : np.ndarray
        Time at risk t* > 0 spent in the interval.
    death : np.ndarray
        Death indicator d per row.
    """
    source: SurvivalDataset
    grid: IntervalGrid
    subject: np.ndarray
    interval: np.ndarray
    exposure: np.ndarray
    death: np.ndarray

    def __post_init__(self):
        n = self.subject.shape[0]
        if not (self.interval.shape == self.exposure.shape == self.death.shape == (n,)):
            raise DimensionMismatchError("Long-form row arrays must have equal length.")
        for name in ("subject", "interval", "exposure", "death"):
            getattr(self, name).setflags(write=False)

    @property
    def n_rows(self) -> int:
        return int(self.subject.shape[0])

    @property
    def n_intervals(self) -> int:
        return self.grid.n_intervals

    @property
    def n_subjects(self) -> int:
        return self.source.n_subjects

    @cached_property
    def group(self) -> np.ndarray:
        return self.source.groups[self.subject]

    @cached_property
    def offset(self) -> np.ndarray:
        return np.log(self.exposure)

    @cached_property
    def covariates(self) -> np.ndarray:
        return self.source.covariates[self.subject]

    @cached_property
    def interval_dummies(self) -> np.ndarray:
        """Reference-coded indicators v: a leading 1 for every row plus a 1 in column j for j > 1."""
        dummies = np.zeros((self.n_rows, self.n_intervals))
        dummies[:, 0] = 1.0
        later = self.interval > 0
        dummies[np.flatnonzero(later), self.interval[later]] = 1.0
        return dummies

    @cached_property
    def group_rows(self) -> List[np.ndarray]:
        """Row indices per group code, in group-code order (empty arrays for absent codes)."""
        order = np.argsort(self.group, kind="stable")
        counts = np.bincount(self.group, minlength=len(self.source.group_labels))
        return np.split(order, np.cumsum(counts)[:-1])

    def present_groups(self) -> List[int]:
        return [code for code, rows in enumerate(self.group_rows) if rows.size]

    def random_design(self, random_columns: Optional[Sequence[int]] = None) -> np.ndarray:
        """Random-effect design z = (1, x[random_columns]) per row; all predictors when not given."""
        columns = self.resolve_random_columns(random_columns)
        z = np.empty((self.n_rows, 1 + len(columns)))
        z[:, 0] = 1.0
        if columns:
            z[:, 1:] = self.covariates[:, columns]
        return z

    def resolve_random_columns(self, random_columns: Optional[Sequence[int]] = None) -> List[int]:
        p = self.source.n_predictors
        columns = list(range(p)) if random_columns is None else [int(c) for c in random_columns]
        if any(c < 0 or c >= p for c in columns) or len(set(columns)) != len(columns):
            raise InvalidParameterValueError(f"random_columns must be distinct indices in [0, {p}), got {columns}.")
        return columns

    def events_per_interval(self, rows: Optional[np.ndarray] = None) -> np.ndarray:
        rows = slice(None) if rows is None else rows
        return np.bincount(self.interval[rows], weights=self.death[rows], minlength=self.n_intervals)

    def exposure_per_interval(self, rows: Optional[np.ndarray] = None) -> np.ndarray:
        rows = slice(None) if rows is None else rows
        return np.bincount(self.interval[rows], weights=self.exposure[rows], minlength=self.n_intervals)
