from services.transformers.base_transformer import Transformer
from dataclasses import dataclass, field
from typing import Optional
import logging

import numpy as np

from app.errors import TooFewEventsError, DegenerateQuantilesError, InvalidParameterValueError
from models.survival import SurvivalDataset, IntervalGrid, LongFormDataset

logger = logging.getLogger(__name__)


def compute_cutpoints(times, status, n_intervals: int) -> IntervalGrid:
    """
    Cut points at the j/J linear-interpolation quantiles of the event times, so that the
    J intervals hold roughly equal numbers of events.
    """
    if n_intervals < 2:
        raise InvalidParameterValueError(f"At least 2 intervals are required, got {n_intervals}.")
    times = np.asarray(times, dtype=np.float64)
    events = times[np.asarray(status) == 1]
    if events.size < n_intervals:
        raise TooFewEventsError(int(events.size), n_intervals)

    quantiles = np.quantile(events, np.arange(1, n_intervals) / n_intervals)
    cutpoints = np.unique(quantiles)
    if cutpoints.size < n_intervals - 1:
        raise DegenerateQuantilesError(
            f"Tied event times collapse {n_intervals - 1} quantiles into {cutpoints.size} cut points."
        )
    if cutpoints[0] <= 0:
        raise DegenerateQuantilesError("The first event-time quantile is not positive.")

    grid = IntervalGrid(cutpoints)
    per_interval = np.bincount(grid.locate(events), minlength=n_intervals)
    if np.any(per_interval == 0):
        raise DegenerateQuantilesError(
            f"Intervals {np.flatnonzero(per_interval == 0).tolist()} hold no events under cut points {grid.to_list()}."
        )
    logger.debug(f"Cut points {grid.to_list()} with events per interval {per_interval.tolist()}")
    return grid


def expand_long_form(data: SurvivalDataset, grid: IntervalGrid) -> LongFormDataset:
    """
    One row per subject and interval with positive exposure t* = max(min(y, tau_j) - tau_{j-1}, 0).
    The death indicator sits on the interval (tau_{j-1}, tau_j] holding y.
    """
    times = data.times
    last = grid.locate(times)
    counts = np.where(times > 0, last + 1, 0)

    subject = np.repeat(np.arange(data.n_subjects), counts)
    starts = np.cumsum(counts) - counts
    interval = np.arange(subject.size) - np.repeat(starts, counts)

    exposure = np.minimum(times[subject], grid.upper[interval]) - grid.lower[interval]
    death = ((interval == last[subject]) & (data.status[subject] == 1)).astype(np.int64)

    return LongFormDataset(
        source=data,
        grid=grid,
        subject=subject,
        interval=interval.astype(np.int64),
        exposure=exposure,
        death=death,
    )


@dataclass
class LongFormExpander(Transformer):
    """
    Builds the event-balanced interval grid of a dataset and expands it to long form.

    Attributes:
    ----------
    n_intervals : int
        Number of intervals J.
    grid : IntervalGrid, optional
        Fixed grid; computed from the data by ``prepare_transformation`` when not given.
    """
    n_intervals: int = 8
    grid: Optional[IntervalGrid] = field(default=None)

    def __post_init__(self):
        self.logger = logging.getLogger(__name__)
        self.logger.debug(f"Initialized LongFormExpander with n_intervals={self.n_intervals}")

    def prepare_transformation(self, data: SurvivalDataset):
        if self.grid is None:
            self.grid = compute_cutpoints(data.times, data.status, self.n_intervals)
            self.logger.info(f"Computed {self.grid.n_intervals} intervals, cut points {self.grid.to_list()}")

    def transform(self, data: SurvivalDataset) -> LongFormDataset:
        if self.grid is None:
            self.prepare_transformation(data)
        long_form = expand_long_form(data, self.grid)
        self.logger.debug(f"Expanded {data.n_subjects} subjects into {long_form.n_rows} rows.")
        return long_form
