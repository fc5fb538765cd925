"""Absolute percentage errors and their windowed summaries."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, ShapeError
from .series import RawSeries

STATISTICS = ("rms", "mean")


@dataclass(frozen=True, eq=False)
class MetricsReport:
    """APE vector (percent) with its prior-sample, post-sample and overall summaries.

    ``rmsepo`` is ``None`` when there is no hold-out window.
    """

    ape: np.ndarray
    rmsepr: float
    rmsepo: float | None
    rmse: float
    l: int  # noqa: E741
    m: int
    statistic: str = "rms"

    def as_tuple(self):
        return (self.rmsepr, self.rmsepo, self.rmse)


def ape(actual, predicted) -> np.ndarray:
    """``|x_k - x_hat_k| / x_k * 100`` elementwise."""
    x = actual.values if isinstance(actual, RawSeries) else np.asarray(actual, dtype=float)
    p = np.asarray(predicted, dtype=float)
    if x.shape != p.shape:
        raise ShapeError(f"actual has shape {x.shape}, predicted {p.shape}")
    if np.any(x <= 0):
        raise DomainError("APE needs strictly positive actual values")
    return np.abs(x - p) / x * 100.0


def _summary(e, statistic):
    if statistic == "rms":
        return float(np.sqrt(np.mean(e**2)))
    return float(np.mean(e))


def rmse_windows(ape_values, l: int, statistic: str = "rms"):
    """Summaries of ``ape_values`` over ``k = 2..l``, ``l+1..m`` and ``2..m``.

    The first point is excluded from every window: it is anchored to the
    observation and always has zero error. ``statistic="rms"`` gives the
    root mean square; ``"mean"`` gives the mean absolute percentage error,
    the summary some published tables report under the same labels.
    """
    if statistic not in STATISTICS:
        raise DomainError(f"statistic must be one of {STATISTICS}")
    e = np.asarray(ape_values, dtype=float)
    m = e.size
    if not 2 <= l <= m:
        raise DomainError(f"train length {l} outside 2..{m}")
    rmsepr = _summary(e[1:l], statistic)
    rmsepo = _summary(e[l:], statistic) if m > l else None
    rmse = _summary(e[1:], statistic)
    return rmsepr, rmsepo, rmse


def evaluate(actual, predicted, l: int, statistic: str = "rms") -> MetricsReport:
    e = ape(actual, predicted)
    pr, po, overall = rmse_windows(e, l, statistic)
    return MetricsReport(e, pr, po, overall, l, e.size, statistic)


def window_score(e, l, window="full", statistic="rms"):
    """Score used as an optimisation target; rows of ``e`` are candidates."""
    e = np.atleast_2d(np.asarray(e, dtype=float))
    part = e[:, 1:] if window == "full" else e[:, 1:l]
    if statistic == "rms":
        return np.sqrt(np.mean(part**2, axis=1))
    return np.mean(part, axis=1)
