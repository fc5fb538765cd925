"""
Tuning lam and alpha with a particle swarm
==========================================

The swarm scores each candidate by the error of the fitted model, so any
candidate that cannot be fitted is simply priced out by the penalty.
"""

import numpy as np

from nipgm import PsoConfig, Template, bundled_dataset, optimize
from nipgm.pso import Objective

raw = bundled_dataset("grain").raw

config = PsoConfig(n=60, iter_max=300, seed=7)
result = optimize(raw, Template("nipgm"), config, trials=3)
print("best fitness per trial:", np.round(result.trial_fitness, 4))
print("chosen:", result.hyper, "fitness", round(result.fitness, 4))

# gbest only ever improves
trace = result.trace
print("trace at 0, 10, 50, 300:", np.round(trace[[0, 10, 50, 300]], 4))

# a coarse grid over the same box, for comparison
lam, alpha = np.meshgrid(np.linspace(0, 1, 41), np.linspace(1e-6, 10, 41))
grid = Objective(raw, Template("nipgm"), config)(np.column_stack([lam.ravel(), alpha.ravel()]))
print("grid best:", round(grid.min(), 4))

# alpha alone, with ordinary accumulation
single = optimize(raw, "gm_talpha", config)
print("GM(1,1,t^a):", single.hyper, round(single.fitness, 4))
