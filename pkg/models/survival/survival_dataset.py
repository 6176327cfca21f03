from dataclasses import dataclass, field, replace
from typing import Optional, Sequence, Tuple
import logging

import numpy as np
import pandas as pd

from app.errors import InvalidSurvivalDataError, DimensionMismatchError, DataSchemaError

logger = logging.getLogger(__name__)

REQUIRED_COLUMNS = ("group", "time", "status")


def _frozen(values, dtype) -> np.ndarray:
    array = np.array(values, dtype=dtype, copy=True)
    array.setflags(write=False)
    return array


@dataclass(frozen=True)
class SurvivalDataset:
    """
    Right-censored survival data for subjects nested in groups.

    Attributes:
    ----------
    groups : np.ndarray
        Integer group code per subject (0..K-1); ``group_labels[code]`` is the original label.
    times : np.ndarray
        Observed time y = min(T, C) per subject.
    status : np.ndarray
        Event indicator per subject (1 = event observed, 0 = censored).
    covariates : np.ndarray
        N x p covariate matrix, column j is predictor j.
    group_labels : tuple
        Original group labels in code order.
    covariate_names : tuple
        Column names of ``covariates``.
    standardized : bool
        Whether ``covariates`` are centered and scaled.
    centers, scales : np.ndarray, optional
        Standardization constants, present when ``standardized`` is True.
    min_groups : int
        Minimum number of groups this dataset must hold (2 for model fits, 1 for group-specific views).
    """
    groups: np.ndarray
    times: np.ndarray
    status: np.ndarray
    covariates: np.ndarray
    group_labels: Tuple = ()
    covariate_names: Tuple[str, ...] = ()
    standardized: bool = False
    centers: Optional[np.ndarray] = None
    scales: Optional[np.ndarray] = None
    min_groups: int = field(default=2, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "groups", _frozen(self.groups, np.int64))
        object.__setattr__(self, "times", _frozen(self.times, np.float64))
        object.__setattr__(self, "status", _frozen(self.status, np.int64))
        object.__setattr__(self, "covariates", _frozen(np.atleast_2d(self.covariates), np.float64))
        n = self.times.shape[0]
        if self.covariates.shape[0] != n and self.covariates.size == 0:
            object.__setattr__(self, "covariates", _frozen(np.zeros((n, 0)), np.float64))

        if not self.covariate_names:
            object.__setattr__(self, "covariate_names", tuple(f"x{j + 1}" for j in range(self.covariates.shape[1])))
        if not self.group_labels:
            object.__setattr__(self, "group_labels", tuple(range(int(self.groups.max()) + 1 if n else 0)))
        if self.centers is not None:
            object.__setattr__(self, "centers", _frozen(self.centers, np.float64))
            object.__setattr__(self, "scales", _frozen(self.scales, np.float64))
        self._validate()

    def _validate(self):
        n = self.times.shape[0]
        if self.groups.shape != (n,) or self.status.shape != (n,) or self.covariates.shape[0] != n:
            raise DimensionMismatchError(
                f"groups {self.groups.shape}, times {self.times.shape}, status {self.status.shape} "
                f"and covariates {self.covariates.shape} must describe the same {n} subjects."
            )
        if len(self.covariate_names) != self.covariates.shape[1]:
            raise DimensionMismatchError("covariate_names must name every covariate column.")
        if not np.all(np.isfinite(self.times)) or np.any(self.times < 0):
            raise InvalidSurvivalDataError("All observed times must be finite and nonnegative.")
        if not np.all(np.isin(self.status, (0, 1))):
            raise InvalidSurvivalDataError("Event indicators must be 0 or 1.")
        if not np.any(self.status == 1):
            raise InvalidSurvivalDataError("At least one event must be observed.")
        if np.any((self.status == 1) & (self.times == 0)):
            raise InvalidSurvivalDataError("Events at time 0 carry no exposure and cannot be modeled.")
        if not np.all(np.isfinite(self.covariates)):
            raise InvalidSurvivalDataError("Covariates must be finite; missing values are not imputed.")
        if np.any(self.groups < 0) or np.any(self.groups >= len(self.group_labels)):
            raise InvalidSurvivalDataError("Group codes must index group_labels.")
        if self.n_groups < self.min_groups:
            raise InvalidSurvivalDataError(f"At least {self.min_groups} groups are required, got {self.n_groups}.")
        if self.standardized and (self.centers is None or self.scales is None):
            raise InvalidSurvivalDataError("Standardized data must carry centers and scales.")

    @classmethod
    def build(cls, groups: Sequence, times, status, covariates, covariate_names: Sequence[str] = None,
              min_groups: int = 2) -> "SurvivalDataset":
        """Builds a dataset from raw group labels, factorizing them in sorted label order."""
        labels, codes = np.unique(np.asarray(groups), return_inverse=True)
        covariates = np.asarray(covariates, dtype=np.float64)
        if covariates.ndim == 1:
            covariates = covariates.reshape(len(codes), -1)
        return cls(
            groups=codes,
            times=times,
            status=status,
            covariates=covariates,
            group_labels=tuple(label.item() if hasattr(label, "item") else label for label in labels),
            covariate_names=tuple(covariate_names or ()),
            min_groups=min_groups,
        )

    @classmethod
    def from_frame(cls, frame: pd.DataFrame, min_groups: int = 2) -> "SurvivalDataset":
        """Builds a dataset from a frame with ``group``, ``time``, ``status`` and covariate columns in order."""
        missing = [column for column in REQUIRED_COLUMNS if column not in frame.columns]
        if missing:
            raise DataSchemaError(f"The following required columns are missing: {missing}")
        covariate_names = [column for column in frame.columns if column not in REQUIRED_COLUMNS]
        try:
            covariates = frame[covariate_names].to_numpy(dtype=np.float64) if covariate_names \
                else np.zeros((len(frame), 0))
            times = frame["time"].to_numpy(dtype=np.float64)
            status = frame["status"].to_numpy(dtype=np.float64)
        except (TypeError, ValueError) as e:
            raise DataSchemaError(f"Non-numeric values in time, status or covariate columns: {e}")
        if np.any(status != np.round(status)):
            raise DataSchemaError("The status column must hold integers 0 or 1.")
        return cls.build(
            groups=frame["group"].to_numpy(),
            times=times,
            status=status.astype(np.int64),
            covariates=covariates,
            covariate_names=covariate_names,
            min_groups=min_groups,
        )

    def to_frame(self) -> pd.DataFrame:
        """Returns the dataset as a frame in the CSV column layout."""
        frame = pd.DataFrame({
            "group": [self.group_labels[code] for code in self.groups],
            "time": self.times,
            "status": self.status,
        })
        covariates = pd.DataFrame(self.covariates, columns=list(self.covariate_names))
        return pd.concat([frame, covariates], axis=1)

    @property
    def n_subjects(self) -> int:
        return int(self.times.shape[0])

    @property
    def n_groups(self) -> int:
        return int(np.unique(self.groups).size)

    @property
    def n_predictors(self) -> int:
        return int(self.covariates.shape[1])

    @property
    def n_events(self) -> int:
        return int(self.status.sum())

    def group_sizes(self) -> np.ndarray:
        return np.bincount(self.groups, minlength=len(self.group_labels))

    def event_times(self) -> np.ndarray:
        return self.times[self.status == 1]

    def with_covariates(self, covariates: np.ndarray, centers: np.ndarray, scales: np.ndarray) -> "SurvivalDataset":
        """Returns a copy carrying standardized covariates and their constants."""
        return replace(self, covariates=covariates, standardized=True, centers=centers, scales=scales)

    def subset_groups(self, codes: Sequence[int]) -> "SurvivalDataset":
        """Returns a dataset restricted to the given group codes, keeping the original labels and codes."""
        mask = np.isin(self.groups, np.asarray(codes))
        if not np.any(mask):
            raise InvalidSurvivalDataError(f"No subjects in groups {list(codes)}.")
        if not np.any(self.status[mask] == 1):
            raise InvalidSurvivalDataError(f"No events in groups {list(codes)}.")
        return replace(
            self,
            groups=self.groups[mask],
            times=self.times[mask],
            status=self.status[mask],
            covariates=self.covariates[mask],
            min_groups=1,
        )

    def take(self, indices: Sequence[int], min_groups: int = None) -> "SurvivalDataset":
        """Returns the subjects at ``indices``, in that order."""
        indices = np.asarray(indices, dtype=np.int64)
        return replace(
            self,
            groups=self.groups[indices],
            times=self.times[indices],
            status=self.status[indices],
            covariates=self.covariates[indices],
            min_groups=self.min_groups if min_groups is None else min_groups,
        )

    def permute(self, order: Sequence[int]) -> "SurvivalDataset":
        """Returns the same subjects in a different row order."""
        if sorted(np.asarray(order).tolist()) != list(range(self.n_subjects)):
            raise InvalidSurvivalDataError("A permutation must list every subject exactly once.")
        return self.take(order)

    def destandardize_coefficients(self, beta: np.ndarray) -> np.ndarray:
        """Maps log hazard ratios per standardized unit back to per original unit."""
        beta = np.asarray(beta, dtype=np.float64)
        if not self.standardized:
            return beta.copy()
        return beta / self.scales

    def standardize_coefficients(self, beta: np.ndarray) -> np.ndarray:
        """Maps log hazard ratios per original unit to per standardized unit."""
        beta = np.asarray(beta, dtype=np.float64)
        if not self.standardized:
            return beta.copy()
        return beta * self.scales

    def baseline_shift(self, beta: np.ndarray) -> float:
        """Log baseline hazard shift that moves a standardized-scale fit to the original covariate scale."""
        if not self.standardized:
            return 0.0
        return float(-np.sum(self.destandardize_coefficients(beta) * self.centers))
