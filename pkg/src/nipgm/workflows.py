"""End-to-end workflows: fitting model sets, reproducing case studies, forecasting."""
from __future__ import annotations

import numpy as np

from .baselines import fit_poly, predict_poly
from .data_io import ARIMA_NOTE, Dataset, ModelResult, Report, dataset_for_case
from .errors import NotFound
from .metrics import evaluate
from .models import ModelKind, fit, restore
from .series import RawSeries

CASES = ("case1", "case2", "case3", "europe", "north_america", "asia", "world")
VALIDATION_CASES = CASES[:3]
WIND_CASES = CASES[3:]
REPRODUCED = ("pr", "arima", "gm11", "dgm11", "ngm_kc", "gm_talpha", "nipgm")


def _result(name, label, hyper, params, pred, raw, statistic, note=""):
    m = raw.m
    rep = evaluate(raw.values, pred[:m], raw.train, statistic)
    return ModelResult(
        name=name,
        label=label,
        hyper=hyper,
        params=[float(p) for p in params],
        fitted=[float(v) for v in pred],
        ape=[float(v) for v in rep.ape],
        rmsepr=rep.rmsepr,
        rmsepo=rep.rmsepo,
        rmse=rep.rmse,
        note=note,
    )


def grey_result(kind: ModelKind, raw: RawSeries, statistic="rms", horizon=0, name=None):
    """Fit ``kind`` on the training window and score it on every observation."""
    f = fit(kind, raw)
    pred = restore(f, raw.m - f.m_fit + horizon)
    return _result(name or kind.name, kind.label, kind.hyper(), f.params, pred, raw, statistic)


def poly_result(raw: RawSeries, degree: int, statistic="rms", horizon=0):
    pf = fit_poly(raw, degree)
    pred = predict_poly(pf, 1, raw.m + horizon)
    return _result("pr", f"PR({degree})", {"degree": degree}, pf.coefficients, pred, raw, statistic)


def reference_result(name, label, column, raw: RawSeries, statistic="rms", metrics=None):
    """Score a published column. ``metrics`` (rmsepr, rmsepo, rmse) replaces the
    recomputed summaries when the source reports its own."""
    res = _result(name, label, {}, [], np.asarray(column, dtype=float), raw, statistic, ARIMA_NOTE)
    if metrics is not None:
        res.rmsepr, res.rmsepo, res.rmse = (float(v) for v in metrics)
    return res


def published_kinds(ds: Dataset) -> dict:
    """Model kinds configured with the hyperparameters reported for ``ds``."""
    r = ds.recipe
    return {
        "gm11": ModelKind.gm11(),
        "dgm11": ModelKind.dgm11(),
        "ngm_kc": ModelKind.ngm_kc(),
        # the published GM(1,1,t^a) columns use the k**alpha grey action
        "gm_talpha": ModelKind.gm_talpha(r["gm_talpha"]["alpha"], action="power"),
        "nipgm": ModelKind.nipgm(r["nipgm"]["lambda"], r["nipgm"]["alpha"]),
    }


def _labels(raw: RawSeries, horizon: int):
    last = int(raw.labels[-1])
    return [int(v) for v in raw.labels] + list(range(last + 1, last + horizon + 1))


def reproduce_case(case: str) -> Report:
    """Recompute every in-scope comparator of a bundled case study."""
    if case not in CASES:
        raise NotFound(f"unknown case {case!r}; choose from {', '.join(CASES)}")
    ds = dataset_for_case(case)
    raw, stat = ds.raw, ds.recipe["statistic"]
    models = [
        poly_result(raw, ds.recipe["pr_degree"], stat),
        reference_result("arima", ds.recipe["arima_order"], ds.reference["arima"], raw, stat,
                         ds.recipe["published_metrics"]["arima"]),
    ]
    for name, kind in published_kinds(ds).items():
        models.append(grey_result(kind, raw, stat, name=name))
    return Report(ds.name, _labels(raw, 0), raw.values.tolist(), raw.train, raw.m, stat, models,
                  {"case": case, "title": ds.recipe["title"], "unit": ds.recipe["unit"]})


def rank_summary(reports) -> dict:
    """Average the three summaries per model across ``reports`` and rank them.

    Rank 1 is the smallest average. Returns ``{model: {"rmsepr": ..,
    "rmsepr_rank": .., ...}}``.
    """
    names = [mr.name for mr in reports[0].models]
    out = {n: {} for n in names}
    for metric in ("rmsepr", "rmsepo", "rmse"):
        avg = {n: float(np.mean([getattr(r.model(n), metric) for r in reports])) for n in names}
        order = sorted(names, key=lambda n: avg[n])
        for n in names:
            out[n][metric] = avg[n]
            out[n][metric + "_rank"] = order.index(n) + 1
    return out


def reproduce_ranks() -> dict:
    return {
        "validation": rank_summary([reproduce_case(c) for c in VALIDATION_CASES]),
        "wind": rank_summary([reproduce_case(c) for c in WIND_CASES]),
    }


def growth_rates(values) -> np.ndarray:
    """Period-on-period increase ``v_t / v_{t-1} - 1`` in percent (length ``n - 1``)."""
    v = np.asarray(values, dtype=float)
    return (v[1:] / v[:-1] - 1.0) * 100.0


def forecast(kind: ModelKind, raw: RawSeries, horizon: int, statistic="rms") -> Report:
    """Fit ``kind`` and extend its predictions ``horizon`` steps past the last observation.

    ``extra["forecast"]`` holds the out-of-sample values; ``extra["growth"]``
    holds increase rates of the series made of the observations followed by
    the forecasts, starting at the last observed label.
    """
    res = grey_result(kind, raw, statistic, horizon)
    labels = _labels(raw, horizon)
    report = Report(raw.name, labels, raw.values.tolist(), raw.train, raw.m, statistic, [res])
    if horizon > 0:
        ahead = res.fitted[raw.m:]
        spliced = np.concatenate([raw.values, ahead])
        rates = growth_rates(spliced[raw.m - 2:])
        report.extra = {
            "forecast": {"labels": labels[raw.m:], "values": ahead},
            "growth": {"labels": labels[raw.m - 1:], "values": rates.tolist(),
                       "mean": float(np.mean(rates))},
        }
    return report


def forecast_case(case: str, until: int | None = None) -> Report:
    """NIPGM forecast of a wind case with the published hyperparameters."""
    ds = dataset_for_case(case)
    fc = ds.recipe.get("forecast")
    if until is None:
        if fc is None:
            raise NotFound(f"case {case!r} has no published forecast horizon")
        until = fc["labels"][-1]
    horizon = int(until) - int(ds.raw.labels[-1])
    return forecast(published_kinds(ds)["nipgm"], ds.raw, horizon, ds.recipe["statistic"])

