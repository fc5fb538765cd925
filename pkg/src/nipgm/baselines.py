"""Polynomial trend regression, the non-grey comparator."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, InsufficientData
from .linalg import DesignSystem, solve_least_squares
from .series import RawSeries


@dataclass(frozen=True, eq=False)
class PolyFit:
    degree: int
    coefficients: np.ndarray  # ascending powers of the time index k = 1, 2, ...

    def __call__(self, k):
        return horner(self.coefficients, k)


def horner(coefficients, k):
    k = np.asarray(k, dtype=float)
    out = np.zeros_like(k)
    for c in coefficients[::-1]:
        out = out * k + c
    return out


def fit_poly(raw: RawSeries, degree: int) -> PolyFit:
    """Least-squares polynomial of ``degree`` in ``k = 1..l`` over the training window."""
    if degree < 1:
        raise DomainError("degree must be >= 1")
    L = raw.train
    if L < degree + 1:
        raise InsufficientData(f"degree {degree} needs at least {degree + 1} training points")
    k = np.arange(1, L + 1, dtype=float)
    V = np.vander(k, degree + 1, increasing=True)
    coef = solve_least_squares(DesignSystem(V, raw.values[:L]))
    return PolyFit(degree, coef)


def predict_poly(fit: PolyFit, k_from: int, k_to: int) -> np.ndarray:
    """Evaluate ``fit`` at the integer indices ``k_from..k_to`` inclusive."""
    if k_from > k_to:
        raise ValueError("k_from must not exceed k_to")
    return horner(fit.coefficients, np.arange(k_from, k_to + 1))
