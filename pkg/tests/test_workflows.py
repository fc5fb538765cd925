import numpy as np
import pytest

from nipgm.errors import NotFound
from nipgm.models import ModelKind
from nipgm.workflows import forecast, growth_rates, reproduce_case, reproduce_ranks

GREY = ("gm11", "dgm11", "ngm_kc", "gm_talpha", "nipgm")


def test_growth_rates():
    np.testing.assert_allclose(growth_rates([100.0, 110.0, 121.0]), [10.0, 10.0])


def test_reproduce_structure(case):
    name, ds = case
    rep = reproduce_case(name)
    assert [m.name for m in rep.models] == ["pr", "arima", *GREY]
    for mr in rep.models:
        assert len(mr.fitted) == ds.raw.m


def test_grey_columns_match_published(case):
    """Reference values: fitted and predicted columns of every grey model."""
    name, ds = case
    rep = reproduce_case(name)
    for model in GREY:
        np.testing.assert_allclose(rep.model(model).fitted, ds.reference[model], rtol=1e-3, err_msg=model)


def test_metric_footers(case):
    """Reference values: summary rows of every case, within 0.05 points."""
    name, ds = case
    rep = reproduce_case(name)
    for model in GREY + ("pr",):
        mr = rep.model(model)
        got = (mr.rmsepr, mr.rmsepo, mr.rmse)
        np.testing.assert_allclose(got, ds.recipe["published_metrics"][model], atol=0.05, err_msg=model)


def test_arima_is_reference_data(case):
    name, ds = case
    mr = reproduce_case(name).model("arima")
    assert np.array_equal(mr.fitted, ds.reference["arima"])


def test_ranks():
    ranks = reproduce_ranks()
    assert ranks["wind"]["nipgm"]["rmse_rank"] == 1
    assert ranks["validation"]["nipgm"]["rmse_rank"] == 1
    assert sorted(r["rmse_rank"] for r in ranks["wind"].values()) == list(range(1, 8))


def test_forecast_shapes(synthetic):
    rep = forecast(ModelKind.nipgm(0.8, 0.5), synthetic, 3)
    assert len(rep.labels) == synthetic.m + 3
    assert len(rep.extra["forecast"]["values"]) == 3
    # the first rate is the last observed step
    assert len(rep.extra["growth"]["values"]) == 4


def test_unknown_case():
    with pytest.raises(NotFound):
        reproduce_case("case9")
