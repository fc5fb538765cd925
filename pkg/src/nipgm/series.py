"""Series containers and the new-information-priority accumulation operators."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, InsufficientData, ShapeError

MIN_OBSERVATIONS = 4


@dataclass(frozen=True, eq=False)
class RawSeries:
    """Strictly positive observations on a unit-step time grid.

    ``train`` is the number of leading observations used for estimation; the
    remaining ``m - train`` points are held out.
    """

    labels: np.ndarray
    values: np.ndarray
    train: int | None = None
    name: str = ""

    def __post_init__(self):
        values = np.array(self.values, dtype=float)
        labels = np.array(self.labels)
        if values.ndim != 1 or labels.shape != values.shape:
            raise ShapeError("labels and values must be 1-D arrays of equal length")
        if values.size < MIN_OBSERVATIONS:
            raise InsufficientData(
                f"grey modelling needs at least {MIN_OBSERVATIONS} observations, got {values.size}"
            )
        if not np.all(np.isfinite(values)) or np.any(values <= 0):
            raise DomainError("observations must be finite and strictly positive")
        if np.any(np.diff(labels) != 1):
            raise DomainError("labels must increase with a unit step")
        train = values.size if self.train is None else int(self.train)
        if not 1 <= train <= values.size:
            raise DomainError(f"train length {train} outside 1..{values.size}")
        values.setflags(write=False)
        labels.setflags(write=False)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "train", train)

    @property
    def m(self) -> int:
        return self.values.size

    @property
    def l(self) -> int:  # noqa: E743
        return self.train

    def __len__(self):
        return self.values.size

    def with_train(self, train: int) -> RawSeries:
        return RawSeries(self.labels, self.values, train, self.name)

    def head(self, n: int) -> RawSeries:
        """First ``n`` observations; ``train`` is clipped to ``n``."""
        return RawSeries(self.labels[:n], self.values[:n], min(self.train, n), self.name)


@dataclass(frozen=True, eq=False)
class AccumulatedSeries:
    lam: float
    values: np.ndarray
    source: RawSeries | None = field(default=None, repr=False)

    def __len__(self):
        return self.values.size


@dataclass(frozen=True, eq=False)
class BackgroundSeries:
    """Consecutive-neighbour means ``h_k`` for ``k = 2..m`` (length ``m - 1``)."""

    values: np.ndarray

    def __len__(self):
        return self.values.size


def _check_lambda(lam):
    lam = float(lam)
    if not 0.0 <= lam <= 1.0:
        raise DomainError(f"accumulation parameter must lie in [0, 1], got {lam}")
    return lam


def accumulate(values, lam) -> np.ndarray:
    """Weighted accumulation ``s_k = sum_v lam**(k-v) x_v`` on a plain array."""
    lam = _check_lambda(lam)
    x = np.asarray(values, dtype=float)
    out = np.empty_like(x)
    acc = 0.0
    for k, v in enumerate(x):
        acc = lam * acc + v
        out[k] = acc
    return out


def deaccumulate(values, lam) -> np.ndarray:
    """Inverse of :func:`accumulate`: ``x_1 = s_1``, ``x_k = s_k - lam * s_{k-1}``."""
    lam = _check_lambda(lam)
    s = np.asarray(values, dtype=float)
    out = s.copy()
    out[1:] = s[1:] - lam * s[:-1]
    return out


def nipago(raw: RawSeries | np.ndarray, lam: float) -> AccumulatedSeries:
    """First-order new-information-priority accumulation of ``raw``.

    ``lam = 1`` is the ordinary cumulative sum and ``lam = 0`` the identity.
    Smaller ``lam`` discounts older observations geometrically.

    >>> nipago(np.array([1.0, 2.0, 3.0]), 0.5).values
    array([1.  , 2.5 , 4.25])
    """
    if isinstance(raw, RawSeries):
        return AccumulatedSeries(_check_lambda(lam), accumulate(raw.values, lam), raw)
    return AccumulatedSeries(_check_lambda(lam), accumulate(raw, lam))


def nipiago(acc: AccumulatedSeries) -> np.ndarray:
    """Recover the original values from an accumulated series."""
    return deaccumulate(acc.values, acc.lam)


def background(acc: AccumulatedSeries | np.ndarray) -> BackgroundSeries:
    s = acc.values if isinstance(acc, AccumulatedSeries) else np.asarray(acc, dtype=float)
    if s.size < 2:
        raise InsufficientData("background values need at least two accumulated points")
    return BackgroundSeries(0.5 * s[1:] + 0.5 * s[:-1])
