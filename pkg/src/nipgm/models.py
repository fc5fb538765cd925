"""Grey models: the unified time-power model and the special cases it contains.

Every kind is estimated from the first ``train`` observations of a
:class:`~nipgm.series.RawSeries`. The unified kinds (``nipgm``,
``gm_talpha``, ``ngm_kc``, ``ngm_k``) share one design matrix::

    s1_k - s1_{k-1} = -a h_k + b * w_k(alpha) + c,   k = 2..l

where ``w_k`` is the grey-action column. Two forms of ``w_k`` are supported:

``"integral"``
    ``(k**(1+alpha) - (k-1)**(1+alpha)) / (1+alpha)``, the exact integral of
    ``t**alpha`` over ``[k-1, k]``.
``"power"``
    ``k**alpha``, the grey difference equation taken literally. The published
    GM(1,1,t^alpha) comparator columns were computed with this form.

Predictions come from the trapezoid-discretised time response and are mapped
back to the original scale with the inverse accumulation for the kind's
``lam``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DomainError,
    FitFailed,
    InsufficientData,
    NearSingular,
    NotFound,
)
from .linalg import (
    DesignSystem,
    solve_least_squares,
    solve_least_squares_batch,
    trapezoid_terms,
)
from .series import (
    MIN_OBSERVATIONS,
    AccumulatedSeries,
    BackgroundSeries,
    RawSeries,
    background,
    deaccumulate,
    nipago,
)

SINGULAR_TOL = 1e-12

KIND_NAMES = ("nipgm", "gm_talpha", "ngm_kc", "ngm_k", "gm11", "dgm11")
UNIFIED_KINDS = ("nipgm", "gm_talpha", "ngm_kc", "ngm_k")
ACTIONS = ("integral", "power")


@dataclass(frozen=True)
class ModelKind:
    """Which grey model to build, with its hyperparameters.

    Prefer the named constructors (:meth:`nipgm`, :meth:`gm11`, ...) over
    calling the class directly.
    """

    name: str
    lam: float | None = None
    alpha: float | None = None
    action: str = "integral"
    response: str = "trapezoid"
    estimator: str = "grey"

    def __post_init__(self):
        if self.name not in KIND_NAMES:
            raise NotFound(f"unknown model kind {self.name!r}")
        if self.action not in ACTIONS:
            raise DomainError(f"unknown grey action form {self.action!r}")
        if self.response not in ("trapezoid", "exact"):
            raise DomainError(f"unknown response form {self.response!r}")
        if self.estimator not in ("grey", "ols"):
            raise DomainError(f"unknown DGM estimator {self.estimator!r}")
        needs_lam = self.name == "nipgm"
        needs_alpha = self.name in ("nipgm", "gm_talpha")
        if needs_lam != (self.lam is not None):
            raise DomainError(f"{self.name}: lambda is {'required' if needs_lam else 'not accepted'}")
        if needs_alpha != (self.alpha is not None):
            raise DomainError(f"{self.name}: alpha is {'required' if needs_alpha else 'not accepted'}")
        if self.lam is not None:
            object.__setattr__(self, "lam", float(self.lam))
            if not 0.0 <= self.lam <= 1.0:
                raise DomainError(f"lambda must lie in [0, 1], got {self.lam}")
        if self.alpha is not None:
            object.__setattr__(self, "alpha", float(self.alpha))
            if not self.alpha >= 0.0:
                raise DomainError(f"alpha must be non-negative, got {self.alpha}")

    @classmethod
    def nipgm(cls, lam, alpha, action="integral"):
        return cls("nipgm", lam=lam, alpha=alpha, action=action)

    @classmethod
    def gm_talpha(cls, alpha, action="integral"):
        return cls("gm_talpha", alpha=alpha, action=action)

    @classmethod
    def ngm_kc(cls, response="trapezoid"):
        return cls("ngm_kc", response=response)

    @classmethod
    def ngm_k(cls, response="trapezoid"):
        return cls("ngm_k", response=response)

    @classmethod
    def gm11(cls):
        return cls("gm11")

    @classmethod
    def dgm11(cls, estimator="grey"):
        return cls("dgm11", estimator=estimator)

    @property
    def effective_lam(self) -> float:
        return 1.0 if self.lam is None else self.lam

    @property
    def effective_alpha(self) -> float:
        if self.alpha is not None:
            return self.alpha
        return 0.0 if self.name == "gm11" else 1.0

    @property
    def label(self) -> str:
        return {
            "nipgm": "NIPGM(1,1,t^a)",
            "gm_talpha": "GM(1,1,t^a)",
            "ngm_kc": "NGM(1,1,k,c)",
            "ngm_k": "NGM(1,1,k)",
            "gm11": "GM(1,1)",
            "dgm11": "DGM(1,1)",
        }[self.name]

    def hyper(self) -> dict:
        out = {}
        if self.lam is not None:
            out["lambda"] = self.lam
        if self.alpha is not None:
            out["alpha"] = self.alpha
        return out


@dataclass(frozen=True, eq=False)
class GreyFit:
    """A fitted grey model.

    ``a``, ``b``, ``c`` are the development coefficient and grey-action
    parameters. ``c`` is ``None`` for the two-parameter kinds; for ``gm11``
    ``b`` is the constant action and for ``dgm11`` ``(a, b)`` store the
    discrete coefficients ``(beta1, beta2)``.
    """

    kind: ModelKind
    a: float
    b: float
    c: float | None
    first_value: float
    m_fit: int
    source: RawSeries | None = field(default=None, repr=False)

    @property
    def params(self) -> tuple:
        return (self.a, self.b) if self.c is None else (self.a, self.b, self.c)

    @property
    def beta(self) -> tuple:
        if self.kind.name != "dgm11":
            raise AttributeError("beta is only defined for DGM(1,1) fits")
        return (self.a, self.b)

    @property
    def fitted(self) -> np.ndarray:
        return restore(self, 0)


def grey_action_column(k, alpha, action="integral"):
    k = np.asarray(k, dtype=float)
    if action == "power":
        return k**alpha
    return (k ** (1.0 + alpha) - (k - 1.0) ** (1.0 + alpha)) / (1.0 + alpha)


def build_design(
    acc: AccumulatedSeries,
    bg: BackgroundSeries,
    alpha: float,
    action: str = "integral",
    train: int | None = None,
) -> DesignSystem:
    """Assemble ``F`` (rows ``[-h_k, w_k, 1]``) and ``G`` (``s1_k - s1_{k-1}``)."""
    if alpha < 0:
        raise DomainError("alpha must be non-negative")
    if train is None:
        train = acc.source.train if acc.source is not None else len(acc)
    if train < MIN_OBSERVATIONS:
        raise InsufficientData(f"estimation needs at least {MIN_OBSERVATIONS} training points")
    s = acc.values[:train]
    h = bg.values[: train - 1]
    k = np.arange(2, train + 1)
    F = np.column_stack([-h, grey_action_column(k, alpha, action), np.ones(train - 1)])
    return DesignSystem(F, np.diff(s))


def _train_length(raw: RawSeries) -> int:
    if raw.train < MIN_OBSERVATIONS:
        raise InsufficientData(
            f"estimation needs at least {MIN_OBSERVATIONS} training points, got {raw.train}"
        )
    return raw.train


def _fit_gm11_params(x):
    s = np.cumsum(x)
    h = 0.5 * (s[1:] + s[:-1])
    return solve_least_squares(DesignSystem(np.column_stack([-h, np.ones(x.size - 1)]), x[1:]))


def fit(kind: ModelKind, raw: RawSeries) -> GreyFit:
    """Estimate the linear parameters of ``kind`` on the training window of ``raw``."""
    L = _train_length(raw)
    x = raw.values[:L]
    c = None
    if kind.name == "gm11":
        a, b = _fit_gm11_params(x)
    elif kind.name == "dgm11":
        if kind.estimator == "grey":
            # discrete solution of the GM(1,1) grey difference equation
            ga, gb = _fit_gm11_params(x)
            if abs(1.0 + 0.5 * ga) <= SINGULAR_TOL:
                raise NearSingular("1 + a/2 vanishes; discrete coefficients undefined")
            a = (1.0 - 0.5 * ga) / (1.0 + 0.5 * ga)
            b = gb / (1.0 + 0.5 * ga)
        else:
            s = np.cumsum(x)
            a, b = solve_least_squares(DesignSystem(np.column_stack([s[:-1], np.ones(L - 1)]), s[1:]))
    else:
        acc = nipago(x, kind.effective_lam)
        sys = build_design(acc, background(acc), kind.effective_alpha, kind.action, L)
        if kind.name == "ngm_k":
            a, b = solve_least_squares(DesignSystem(sys.F[:, :2], sys.G))
            c = 0.0
        else:
            a, b, c = solve_least_squares(sys)
    params = (a, b) if c is None else (a, b, c)
    if not np.all(np.isfinite(params)):
        raise FitFailed(f"{kind.label}: non-finite parameters {params}")
    return GreyFit(
        kind,
        float(a),
        float(b),
        None if c is None else float(c),
        float(x[0]),
        L,
        raw,
    )


def _check_a(a):
    if abs(a) <= SINGULAR_TOL:
        raise NearSingular(f"development coefficient a={a} is too close to zero")


def _response(fit: GreyFit, n: int) -> np.ndarray:
    """Accumulated-scale time response for ``k = 1..n``."""
    kind = fit.kind
    s1 = fit.first_value
    k = np.arange(1, n + 1, dtype=float)
    with np.errstate(over="ignore", invalid="ignore"):
        if kind.name == "dgm11":
            b1, b2 = fit.a, fit.b
            if abs(b1 - 1.0) <= SINGULAR_TOL:
                raise NearSingular("beta1 is too close to one")
            p = b1 ** (k - 1.0)
            out = p * s1 + b2 * (p - 1.0) / (b1 - 1.0)
        elif kind.name == "gm11":
            a, b = fit.a, fit.b
            _check_a(a)
            out = (s1 - b / a) * np.exp(-a * (k - 1.0)) + b / a
        elif kind.name in ("ngm_kc", "ngm_k") and kind.response == "exact":
            a, b, c = fit.a, fit.b, fit.c
            _check_a(a)
            # exact integral of (b t + c) e^{-a (k - t)} over [1, k]; equals s1 at k = 1
            out = (
                (s1 - c / a + b * (1.0 - a) / a**2) * np.exp(-a * (k - 1.0))
                + b / a * k
                - b / a**2
                + c / a
            )
        else:
            a, b, c = fit.a, fit.b, fit.c
            _check_a(a)
            decay = np.exp(-a * (k - 1.0))
            T = trapezoid_terms(a, kind.effective_alpha, n)
            out = (s1 - c / a) * decay + 0.5 * b * decay * T + c / a
    out[0] = s1
    return out


def time_response(fit: GreyFit, k: int) -> float:
    """Time response ``s1_hat_k`` on the accumulated scale (``k >= 1``)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return float(_response(fit, k)[-1])


def restore(fit: GreyFit, horizon: int = 0) -> np.ndarray:
    """Predictions on the original scale for ``k = 1..m_fit + horizon``.

    Obtained by inverse accumulation of the time response, so the first
    value always equals the first observation.
    """
    if horizon < 0:
        raise ValueError("horizon must be >= 0")
    n = fit.m_fit + horizon
    s_hat = _response(fit, n)
    lam = 1.0 if fit.kind.name in ("gm11", "dgm11") else fit.kind.effective_lam
    out = deaccumulate(s_hat, lam)
    if not np.all(np.isfinite(out)):
        raise FitFailed(f"{fit.kind.label}: non-finite predictions")
    return out


def restore_closed_form(fit: GreyFit, horizon: int = 0) -> np.ndarray:
    """Original-scale predictions from the direct closed forms.

    Independent of :func:`restore` (no time response is differenced); used to
    cross-check it. For the unified kinds with ``T_k`` the trapezoid sum::

        x_{k+1} = e^{-a(k-1)} (e^{-a} - lam) (x_1 - c/a + b/2 T_k)
                  + b/2 (k**alpha e^{-a} + (k+1)**alpha) + (1 - lam) c/a
    """
    kind = fit.kind
    n = fit.m_fit + horizon
    x1 = fit.first_value
    k = np.arange(1, n, dtype=float)  # predicts x_{k+1}
    with np.errstate(over="ignore", invalid="ignore"):
        if kind.name == "dgm11":
            b1, b2 = fit.a, fit.b
            tail = (b1 - 1.0) * (x1 + b2 / (b1 - 1.0)) * b1 ** (k - 1.0)
        elif kind.name == "gm11":
            a, b = fit.a, fit.b
            _check_a(a)
            tail = (1.0 - np.exp(a)) * (x1 - b / a) * np.exp(-a * k)
        elif kind.name in ("ngm_kc", "ngm_k") and kind.response == "exact":
            a, b, c = fit.a, fit.b, fit.c
            _check_a(a)
            tail = (1.0 - np.exp(a)) * (x1 - (a * b + a * c - b) / a**2) * np.exp(-a * k) + b / a
        else:
            a, b, c = fit.a, fit.b, fit.c
            _check_a(a)
            lam = kind.effective_lam
            alpha = kind.effective_alpha
            T = trapezoid_terms(a, alpha, n - 1)
            tail = (
                np.exp(-a * (k - 1.0)) * (np.exp(-a) - lam) * (x1 - c / a + 0.5 * b * T)
                + 0.5 * b * (k**alpha * np.exp(-a) + (k + 1.0) ** alpha)
                + (1.0 - lam) * c / a
            )
    return np.concatenate([[x1], tail])


def fit_predict(kind: ModelKind, raw: RawSeries, horizon: int | None = None):
    """Fit on the training window and predict every point of ``raw`` plus ``horizon``.

    ``horizon`` defaults to the number of held-out points.
    """
    f = fit(kind, raw)
    if horizon is None:
        horizon = raw.m - f.m_fit
    return f, restore(f, horizon)


def unified_predict_batch(x, train, n_out, lam, alpha, action="integral"):
    """Vectorised fit-and-restore of the unified model over many ``(lam, alpha)``.

    Returns ``(pred, ok)`` with ``pred`` of shape ``(P, n_out)``. Any
    candidate that would raise in :func:`fit`/:func:`restore` has ``ok``
    False. Used by the swarm optimiser, where thousands of candidates are
    scored per iteration.
    """
    x = np.asarray(x, dtype=float)[:train]
    lam = np.atleast_1d(np.asarray(lam, dtype=float))
    alpha = np.atleast_1d(np.asarray(alpha, dtype=float))
    lam, alpha = np.broadcast_arrays(lam, alpha)
    P = lam.size
    s = np.empty((P, train))
    acc = np.zeros(P)
    for i in range(train):
        acc = lam * acc + x[i]
        s[:, i] = acc
    h = 0.5 * (s[:, 1:] + s[:, :-1])
    k = np.arange(2, train + 1, dtype=float)
    w = grey_action_column(k[None, :], alpha[:, None], action)
    F = np.stack([-h, w, np.ones_like(h)], axis=-1)
    r, ok = solve_least_squares_batch(F, np.diff(s, axis=1))
    a, b, c = r[:, 0], r[:, 1], r[:, 2]
    ok &= np.abs(a) > SINGULAR_TOL
    a = np.where(ok, a, 1.0)
    kk = np.arange(1, n_out + 1, dtype=float)
    with np.errstate(over="ignore", invalid="ignore"):
        decay = np.exp(-a[:, None] * (kk - 1.0))
        T = trapezoid_terms(a, alpha, n_out)
        ca = (c / a)[:, None]
        s_hat = (x[0] - ca) * decay + 0.5 * b[:, None] * decay * T + ca
        s_hat[:, 0] = x[0]
        pred = s_hat.copy()
        pred[:, 1:] = s_hat[:, 1:] - lam[:, None] * s_hat[:, :-1]
    ok &= np.all(np.isfinite(pred), axis=1)
    pred[~ok] = np.nan
    return pred, ok
