"""Small dense least squares and the trapezoid kernels of the time response."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NearSingular, Overflow, RankDeficient, ShapeError

RANK_RTOL = 1e-10


@dataclass(frozen=True, eq=False)
class DesignSystem:
    """Overdetermined linear system ``F r ~ G``."""

    F: np.ndarray
    G: np.ndarray

    def __post_init__(self):
        F = np.atleast_2d(np.asarray(self.F, dtype=float))
        G = np.asarray(self.G, dtype=float).ravel()
        if F.shape[0] != G.size:
            raise ShapeError(f"F has {F.shape[0]} rows but G has {G.size} entries")
        if F.shape[0] < F.shape[1]:
            raise RankDeficient(
                f"{F.shape[0]} equations cannot determine {F.shape[1]} unknowns"
            )
        object.__setattr__(self, "F", F)
        object.__setattr__(self, "G", G)

    @property
    def p(self) -> int:
        return self.F.shape[1]


def solve_least_squares_batch(F, G, rtol=RANK_RTOL):
    """Solve a stack of least-squares problems ``F[i] r[i] ~ G[i]``.

    Columns are scaled to unit norm before an SVD so the rank decision does
    not depend on the units of the data. Returns ``(r, ok)`` where ``ok`` flags
    the systems that passed the rank test; rows of ``r`` with ``ok == False``
    are NaN.
    """
    F = np.asarray(F, dtype=float)
    G = np.asarray(G, dtype=float)
    norms = np.linalg.norm(F, axis=-2, keepdims=True)
    norms = np.where(norms > 0, norms, 1.0)
    with np.errstate(invalid="ignore", over="ignore"):
        Fs = F / norms
        finite = np.all(np.isfinite(Fs), axis=(-2, -1)) & np.all(np.isfinite(G), axis=-1)
        Fs = np.where(finite[..., None, None], Fs, 0.0)
        U, s, Vt = np.linalg.svd(Fs, full_matrices=False)
        ok = finite & (s[..., -1] > rtol * s[..., 0])
        s_inv = np.where(ok[..., None], 1.0 / np.where(s > 0, s, 1.0), 0.0)
        Gs = np.where(finite[..., None], G, 0.0)
        coef = np.einsum("...ji,...j->...i", U, Gs) * s_inv
        r = np.einsum("...ij,...i->...j", Vt, coef) / norms[..., 0, :]
    r = np.where(ok[..., None], r, np.nan)
    return r, ok


def solve_least_squares(sys: DesignSystem, rtol=RANK_RTOL) -> np.ndarray:
    """Least-squares solution of ``sys`` via an orthogonal factorisation.

    Raises :class:`RankDeficient` when the smallest singular value of the
    column-equilibrated design falls below ``rtol`` times the largest.
    """
    r, ok = solve_least_squares_batch(sys.F[None], sys.G[None], rtol)
    if not ok[0]:
        raise RankDeficient("design matrix is numerically rank deficient")
    return r[0]


def trapezoid_terms(a, alpha, n):
    """Cumulative trapezoid sums ``T_1..T_n`` (``T_1 = 0``) as an array.

    ``T_k = sum_{g=1}^{k-1} g**alpha e^{a(g-1)} + (g+1)**alpha e^{a g}``;
    ``a`` and ``alpha`` broadcast against each other, the trailing axis is k.
    """
    a = np.asarray(a, dtype=float)[..., None]
    alpha = np.asarray(alpha, dtype=float)[..., None]
    g = np.arange(1, n, dtype=float)
    with np.errstate(over="ignore", invalid="ignore"):
        terms = g**alpha * np.exp(a * (g - 1)) + (g + 1) ** alpha * np.exp(a * g)
        cum = np.cumsum(terms, axis=-1)
    zero = np.zeros(cum.shape[:-1] + (1,))
    return np.concatenate([zero, cum], axis=-1)


def trapezoid_power_exp_sum(a: float, alpha: float, k: int) -> float:
    """Unit-step trapezoid sum approximating ``2 * int_1^k u**alpha e^{a(u-1)} du``."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if k == 1:
        return 0.0
    value = float(trapezoid_terms(a, alpha, k)[-1])
    if not np.isfinite(value):
        raise Overflow(f"trapezoid sum overflowed for a={a}, alpha={alpha}, k={k}")
    return value


def exact_power_integral_alpha1(a: float, t: float) -> float:
    """Closed form of ``int_1^t u e^{a(u-1)} du``."""
    if abs(a) <= 1e-12:
        raise NearSingular("closed form is singular at a = 0")
    return ((a * t - 1.0) * np.exp(a * (t - 1.0)) + (1.0 - a)) / a**2
