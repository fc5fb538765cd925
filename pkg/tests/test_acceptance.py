"""Acceptance checks at the contract tolerances, one PASS/FAIL line each."""
import numpy as np
import pytest

from conftest import ACCEPTANCE_LINES
from nipgm.data_io import dataset_for_case
from nipgm.metrics import rmse_windows
from nipgm.models import ModelKind, fit, restore, restore_closed_form
from nipgm.pso import Objective, PsoConfig, Template, optimize, with_overrides
from nipgm.series import RawSeries, nipago, nipiago
from nipgm.workflows import CASES, WIND_CASES, forecast_case, reproduce_case

# printed accumulated Europe series at lambda = 0.9649
EUROPE_S1 = [56748.8850, 119703.1115, 192527.0720, 272500.2666,
             359551.2611, 456832.5442, 561813.5647, 676035.3844]
PSO_SLACK = {"case1": 0.05, "case2": 3.5, "case3": 1.1, "europe": 0.5,
             "north_america": 2.6, "asia": 3.5, "world": 1.6}
PSO_TRIALS = 10


def record(criterion, what, ok, detail=""):
    line = f"{'PASS' if ok else 'FAIL'}  [{criterion}] {what}" + (f"  ({detail})" if detail else "")
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


def rel_err(got, want):
    got, want = np.asarray(got, float), np.asarray(want, float)
    return float(np.max(np.abs(got - want) / np.abs(want)))


def test_1_accumulation_fidelity():
    raw = dataset_for_case("europe").raw
    err = rel_err(nipago(raw.values[:8], 0.9649).values, EUROPE_S1)
    assert record(1, "Europe accumulated series within 1e-3 relative", err <= 1e-3, f"max rel {err:.2e}")


PARAMETER_CASES = [
    ("GM(1,1) (a, b)", ModelKind.gm11(), (-0.1148, 57660.2383), 1e-3),
    ("DGM(1,1) (beta1, beta2)", ModelKind.dgm11(), (1.1218, 61171.4813), 1e-3),
    ("NGM(1,1,k,c) (a, b, c)", ModelKind.ngm_kc(), (-0.0384, 7583.1441, 50768.5848), 1e-2),
]


@pytest.mark.parametrize("what, kind, expected, tol", PARAMETER_CASES, ids=[c[0] for c in PARAMETER_CASES])
def test_2_parameter_recovery(what, kind, expected, tol):
    got = fit(kind, dataset_for_case("europe").raw).params
    err = rel_err(got, expected)
    assert record(2, f"Europe {what} within {tol:g}", err <= tol, f"max rel {err:.2e}")


def _nipgm_europe():
    return fit(ModelKind.nipgm(0.9649, 0.0206), dataset_for_case("europe").raw).params


@pytest.mark.parametrize("index, name, expected", [(0, "a", -0.0737), (2, "c", -291896.7690)])
def test_2_nipgm_parameters(index, name, expected):
    err = rel_err(_nipgm_europe()[index], expected)
    assert record(2, f"Europe NIPGM {name} within 1e-2", err <= 1e-2, f"rel {err:.2e}")


@pytest.mark.xfail(strict=True, reason="printed b has the opposite sign of the least-squares solution")
def test_2_nipgm_b_signed():
    b = _nipgm_europe()[1]
    err = rel_err(b, -345863.1636)
    mag = rel_err(abs(b), 345863.1636)
    assert record(2, "Europe NIPGM b within 1e-2 (signed)", err <= 1e-2,
                  f"got {b:.4f}; magnitude rel {mag:.2e}")


@pytest.mark.parametrize("case", CASES)
def test_3_fitted_tables(case):
    ds = dataset_for_case(case)
    rep = reproduce_case(case)
    worst = {}
    for name, tol in (("gm11", 1e-3), ("dgm11", 1e-3), ("ngm_kc", 1e-3), ("gm_talpha", 5e-3), ("nipgm", 5e-3)):
        worst[name] = (rel_err(rep.model(name).fitted, ds.reference[name]), tol)
    ok = all(e <= t for e, t in worst.values())
    detail = ", ".join(f"{n} {e:.1e}" for n, (e, _) in worst.items())
    assert record(3, f"{case} grey columns within 0.1%/0.5%", ok, detail)


@pytest.mark.parametrize("case", CASES)
def test_4_metric_tables(case):
    ds = dataset_for_case(case)
    rep = reproduce_case(case)
    worst = 0.0
    for name in ("pr", "gm11", "dgm11", "ngm_kc", "gm_talpha", "nipgm"):
        mr = rep.model(name)
        worst = max(worst, float(np.max(np.abs(
            np.subtract((mr.rmsepr, mr.rmsepo, mr.rmse), ds.recipe["published_metrics"][name])))))
    assert record(4, f"{case} summaries within 0.05 points", worst <= 0.05, f"max abs {worst:.4f}")


@pytest.mark.parametrize(
    "case, model, expected",
    [("case1", "gm11", (7.1476, 13.1303, 8.5525)), ("europe", "nipgm", (0.4815, 0.1432, 0.3800))],
)
def test_4_named_footers(case, model, expected):
    mr = reproduce_case(case).model(model)
    err = float(np.max(np.abs(np.subtract((mr.rmsepr, mr.rmsepo, mr.rmse), expected))))
    assert record(4, f"{case} {model} summaries", err <= 0.05, f"max abs {err:.4f}")


@pytest.mark.slow
@pytest.mark.parametrize("case", CASES)
def test_5_pso_effectiveness(case):
    ds = dataset_for_case(case)
    stat = ds.recipe["statistic"]
    cfg = PsoConfig(statistic=stat, seed=20240601)
    res = optimize(ds.raw, Template("nipgm"), cfg, trials=PSO_TRIALS)
    lam, alpha = np.meshgrid(np.linspace(0, 1, 50), np.linspace(1e-6, 10, 50))
    grid = Objective(ds.raw, Template("nipgm"), cfg)(np.column_stack([lam.ravel(), alpha.ravel()])).min()
    ok_slack = res.fitness <= PSO_SLACK[case]
    ok_grid = res.fitness <= grid + 0.1
    record(5, f"{case} PSO best <= {PSO_SLACK[case]}", ok_slack,
           f"best {res.fitness:.4f} at {res.hyper}, published {ds.recipe['nipgm']['rmse']}")
    record(5, f"{case} PSO best <= grid + 0.1", ok_grid, f"grid {grid:.4f}")
    assert ok_slack and ok_grid


def test_6_property_suites():
    rng = np.random.default_rng(2024)
    raw = dataset_for_case("europe").raw

    x = rng.uniform(1, 1e5, size=12)
    rt = max(rel_err(nipiago(nipago(x, lam)), x) for lam in rng.uniform(0, 1, 50))
    record(6, "accumulation round trip 1e-10", rt <= 1e-10, f"{rt:.1e}")

    cf = 0.0
    for lam, alpha in rng.uniform([0.3, 0.05], [1.0, 3.0], size=(20, 2)):
        f = fit(ModelKind.nipgm(lam, alpha), raw)
        cf = max(cf, rel_err(restore_closed_form(f, 3), restore(f, 3)))
    record(6, "closed form vs composition 1e-9", cf <= 1e-9, f"{cf:.1e}")

    eq = 0.0
    for alpha in rng.uniform(0.05, 4.0, 20):
        a = restore(fit(ModelKind.nipgm(1.0, alpha), raw), 3)
        b = restore(fit(ModelKind.gm_talpha(alpha), raw), 3)
        eq = max(eq, rel_err(a, b))
    record(6, "NIPGM(lambda=1) equals GM(1,1,t^a) 1e-12", eq <= 1e-12, f"{eq:.1e}")

    part = 0.0
    for _ in range(50):
        e = rng.uniform(0, 20, 11)
        pr, po, all_ = rmse_windows(e, 8)
        part = max(part, abs(7 * pr**2 + 3 * po**2 - 10 * all_**2) / (10 * all_**2))
    record(6, "metric partition identity 1e-9", part <= 1e-9, f"{part:.1e}")

    a, b, c, lam, alpha = -0.12, 4.0, 2.5, 0.85, 0.6
    s = [10.0]
    for k in range(2, 11):
        w = (k ** (1 + alpha) - (k - 1) ** (1 + alpha)) / (1 + alpha)
        s.append((s[-1] * (1 - a / 2) + b * w + c) / (1 + a / 2))
    s = np.array(s)
    synth = RawSeries(range(10), np.r_[s[0], s[1:] - lam * s[:-1]])
    rec = rel_err(fit(ModelKind.nipgm(lam, alpha), synth).params, (a, b, c))
    record(6, "exact recovery 1e-6", rec <= 1e-6, f"{rec:.1e}")

    cfg = PsoConfig(n=30, iter_max=60, seed=9)
    s1 = optimize(raw, "nipgm", cfg, trials=2)
    s4 = optimize(raw, "nipgm", with_overrides(cfg, workers=4), trials=2)
    det = s1.position.tobytes() == s4.position.tobytes() and s1.trace.tobytes() == s4.trace.tobytes()
    record(6, "seeded optimize identical serial vs 4 workers", det)

    assert rt <= 1e-10 and cf <= 1e-9 and eq <= 1e-12 and part <= 1e-9 and rec <= 1e-6 and det


@pytest.mark.parametrize("case", WIND_CASES)
def test_7_forecast_extension(case):
    ds = dataset_for_case(case)
    published = ds.recipe["forecast"]
    rep = forecast_case(case)
    values = rep.extra["forecast"]["values"]
    growth = rep.extra["growth"]
    err_v = rel_err(values, published["values"][1:])
    err_g = float(np.max(np.abs(np.subtract(growth["values"], published["growth"]))))
    err_mean = abs(growth["mean"] - published["mean_growth"])
    ok_v = err_v <= 5e-3
    ok_g = max(err_g, err_mean) <= 0.5
    record(7, f"{case} forecasts within 0.5%", ok_v, f"max rel {err_v:.1e}")
    record(7, f"{case} growth rates within 0.5 points", ok_g, f"max abs {max(err_g, err_mean):.3f}")
    assert ok_v and ok_g
