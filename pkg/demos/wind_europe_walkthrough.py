"""
Europe wind capacity, step by step
==================================

Accumulate the series, build the least-squares system, fit the
time-power grey model and project three years ahead.
"""

import numpy as np

from nipgm import ModelKind, bundled_dataset, evaluate, fit, restore
from nipgm.models import build_design
from nipgm.series import background, nipago

ds = bundled_dataset("wind_europe")
raw = ds.raw
print(raw.labels, raw.values, f"train on first {raw.l} of {raw.m}", sep="\n")

# recent years weigh more when lam < 1
lam, alpha = 0.9649, 0.0206
acc = nipago(raw.values[: raw.l], lam)
print("accumulated:", np.round(acc.values, 4))

# rows [-h_k, w_k, 1] against the accumulated increments
system = build_design(acc, background(acc), alpha, train=raw.l)
print("first design row:", system.F[0], "target:", system.G[0])

f = fit(ModelKind.nipgm(lam, alpha), raw)
print("a, b, c =", f.params)

horizon = raw.m - raw.l + 3
pred = restore(f, horizon)
rep = evaluate(raw.values, pred[: raw.m], raw.l, statistic="mean")
print("in-sample / hold-out / overall MAPE:", np.round(rep.as_tuple(), 4))

for year, value in zip(range(2018, 2021), pred[raw.m:]):
    print(year, round(value, 1))
