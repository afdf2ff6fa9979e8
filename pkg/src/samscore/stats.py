"""Correlation statistics between metric scores and human judgements.

Thin validation wrappers around standard estimators: Pearson's r and
Kendall's tau with tie correction on both variables.  Inputs that make a
coefficient undefined raise DegenerateInputError instead of silently
returning a value.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy import stats as _scipy_stats

from samscore.errors import DegenerateInputError


def _validate(x: Sequence[float], y: Sequence[float]):
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.ndim != 1 or y.ndim != 1:
        raise ValueError("inputs must be one-dimensional sequences")
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")
    if len(x) < 2:
        raise DegenerateInputError(
            f"need at least 2 paired observations, got {len(x)}")
    return x, y


def pearson(x: Sequence[float], y: Sequence[float]) -> float:
    """Pearson correlation coefficient of two equal-length sequences.

    Raises ValueError on a length mismatch and DegenerateInputError when
    either sequence is constant or shorter than 2.
    """
    x, y = _validate(x, y)
    if np.ptp(x) == 0.0 or np.ptp(y) == 0.0:
        raise DegenerateInputError("constant sequence has no defined correlation")
    r = float(_scipy_stats.pearsonr(x, y).statistic)
    return min(max(r, -1.0), 1.0)


def kendall_tau(x: Sequence[float], y: Sequence[float]) -> float:
    """Kendall rank correlation with tie correction on both variables.

    Raises ValueError on a length mismatch and DegenerateInputError when
    either sequence is all ties or shorter than 2.
    """
    x, y = _validate(x, y)
    if np.ptp(x) == 0.0 or np.ptp(y) == 0.0:
        raise DegenerateInputError("all-tied sequence has no defined rank correlation")
    tau = float(_scipy_stats.kendalltau(x, y, variant="b").statistic)
    return min(max(tau, -1.0), 1.0)


@dataclass(frozen=True)
class CorrelationReport:
    """Correlation of one metric variant against human judgements."""

    metric_name: str
    variant: str  # "raw" or "sam_adjusted"
    pearson_r: float
    abs_pearson: float
    kendall_tau: float
    abs_kendall: float
    n_segments: int


def correlation_report(metric_name: str, variant: str,
                       human: Sequence[float],
                       scores: Sequence[float]) -> CorrelationReport:
    """Build a CorrelationReport for one metric variant.

    Statistical errors are re-raised annotated with the metric name so a
    caller evaluating many metrics can tell which one failed.
    """
    try:
        r = pearson(scores, human)
        tau = kendall_tau(scores, human)
    except DegenerateInputError as exc:
        raise DegenerateInputError(f"{metric_name} ({variant}): {exc}") from None
    return CorrelationReport(
        metric_name=metric_name,
        variant=variant,
        pearson_r=r,
        abs_pearson=abs(r),
        kendall_tau=tau,
        abs_kendall=abs(tau),
        n_segments=len(human),
    )
