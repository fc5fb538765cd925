"""Particle swarm search for the nonlinear hyperparameters of the unified model.

The swarm minimises the fit error of :class:`~nipgm.models.ModelKind` over
``(lambda, alpha)`` (template ``"nipgm"``) or ``alpha`` alone (template
``"gm_talpha"``). Infeasible positions are kept in the swarm and pay a penalty
``M`` per violated bound; fits that fail numerically pay ``M`` per dimension.

Random numbers for iteration ``t`` of trial ``j`` come from a generator seeded
by ``SeedSequence(seed, spawn_key=(j, t))``; particle ``i`` always consumes row
``i`` of that draw. Fitness evaluation may be split across threads without
changing any trajectory.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace

import numpy as np

from .errors import DomainError, NumericalError
from .metrics import STATISTICS, window_score
from .models import ModelKind, fit, restore, unified_predict_batch
from .series import RawSeries


@dataclass(frozen=True)
class Inertia:
    """Inertia weight, either fixed or decaying linearly from ``w_max`` to ``w_min``."""

    kind: str = "fixed"
    w: float = 0.6
    w_min: float = 0.4
    w_max: float = 0.9

    @classmethod
    def fixed(cls, w):
        return cls("fixed", w=float(w))

    @classmethod
    def decay(cls, w_min, w_max):
        return cls("decay", w_min=float(w_min), w_max=float(w_max))

    @classmethod
    def parse(cls, text: str) -> Inertia:
        """Parse ``fixed:<w>`` or ``decay:<min>,<max>``."""
        kind, _, rest = text.partition(":")
        try:
            if kind == "fixed":
                return cls.fixed(float(rest))
            if kind == "decay":
                lo, hi = rest.split(",")
                return cls.decay(float(lo), float(hi))
        except ValueError:
            pass
        raise DomainError(f"cannot parse inertia {text!r}; use fixed:<w> or decay:<min>,<max>")

    def at(self, iteration: int, iter_max: int) -> float:
        if self.kind == "fixed":
            return self.w
        return self.w_max - (self.w_max - self.w_min) * iteration / iter_max


@dataclass(frozen=True)
class Template:
    """Which hyperparameters the swarm searches and how positions map to a model."""

    name: str = "nipgm"
    action: str = "integral"

    def __post_init__(self):
        if self.name not in ("nipgm", "gm_talpha"):
            raise DomainError(f"no search template for {self.name!r}")

    @property
    def dim(self) -> int:
        return 2 if self.name == "nipgm" else 1

    @property
    def default_bounds(self):
        alpha = (1e-6, 10.0)
        return ((0.0, 1.0), alpha) if self.name == "nipgm" else (alpha,)

    def split(self, positions):
        """Return ``(lam, alpha)`` arrays for an ``(n, dim)`` position array."""
        positions = np.atleast_2d(positions)
        if self.name == "nipgm":
            return positions[:, 0], positions[:, 1]
        return np.ones(positions.shape[0]), positions[:, 0]

    def kind(self, position) -> ModelKind:
        position = np.ravel(position)
        if self.name == "nipgm":
            return ModelKind.nipgm(position[0], position[1], self.action)
        return ModelKind.gm_talpha(position[0], self.action)


@dataclass(frozen=True)
class PsoConfig:
    c1: float = 2.0
    c2: float = 2.0
    inertia: Inertia = field(default_factory=Inertia)
    n: int = 100
    iter_max: int = 1000
    penalty: float = 10000.0
    bounds: tuple | None = None
    seed: int = 0
    fitness_window: str = "full"
    statistic: str = "rms"
    workers: int = 1

    def __post_init__(self):
        if not (self.c1 > 0 and self.c2 > 0):
            raise DomainError("acceleration constants must be positive")
        if self.n < 2 or self.iter_max < 1:
            raise DomainError("need at least 2 particles and 1 iteration")
        if not self.penalty > 0:
            raise DomainError("penalty must be positive")
        if self.fitness_window not in ("full", "prior"):
            raise DomainError("fitness_window must be 'full' or 'prior'")
        if self.statistic not in STATISTICS:
            raise DomainError(f"statistic must be one of {STATISTICS}")
        if self.bounds is not None:
            b = tuple((float(lo), float(hi)) for lo, hi in self.bounds)
            if any(not lo < hi for lo, hi in b):
                raise DomainError("each bound needs lo < hi")
            object.__setattr__(self, "bounds", b)

    def bounds_for(self, template: Template) -> np.ndarray:
        b = self.bounds if self.bounds is not None else template.default_bounds
        if len(b) != template.dim:
            raise DomainError(f"template {template.name} needs {template.dim} bounds, got {len(b)}")
        return np.array(b, dtype=float)


@dataclass
class SwarmState:
    positions: np.ndarray
    velocities: np.ndarray
    fitness: np.ndarray
    pbest: np.ndarray
    pbest_fitness: np.ndarray
    gbest: np.ndarray
    gbest_fitness: float
    iteration: int = 0

    def copy(self) -> SwarmState:
        return SwarmState(
            self.positions.copy(),
            self.velocities.copy(),
            self.fitness.copy(),
            self.pbest.copy(),
            self.pbest_fitness.copy(),
            self.gbest.copy(),
            self.gbest_fitness,
            self.iteration,
        )


class Objective:
    """Vectorised penalised fitness for one dataset and template."""

    def __init__(self, raw: RawSeries, template: Template, config: PsoConfig):
        self.raw = raw
        self.template = template
        self.config = config
        self.bounds = config.bounds_for(template)

    def __call__(self, positions) -> np.ndarray:
        positions = np.atleast_2d(np.asarray(positions, dtype=float))
        workers = self.config.workers
        if workers <= 1 or positions.shape[0] < 2 * workers:
            return self._evaluate(positions)
        chunks = np.array_split(positions, workers)
        with ThreadPoolExecutor(workers) as pool:
            return np.concatenate(list(pool.map(self._evaluate, chunks)))

    def _evaluate(self, positions):
        lo, hi = self.bounds[:, 0], self.bounds[:, 1]
        violations = np.sum((positions < lo) | (positions > hi), axis=1)
        clamped = np.clip(positions, lo, hi)
        lam, alpha = self.template.split(clamped)
        raw = self.raw
        pred, ok = unified_predict_batch(
            raw.values, raw.train, raw.m, lam, alpha, self.template.action
        )
        with np.errstate(invalid="ignore"):
            e = np.abs(raw.values - pred) / raw.values * 100.0
            score = window_score(e, raw.train, self.config.fitness_window, self.config.statistic)
        ok &= np.isfinite(score)
        base = np.where(ok, score, self.config.penalty * self.template.dim)
        return base + violations * self.config.penalty


def penalized_fitness(position, raw: RawSeries, template: Template, config: PsoConfig) -> float:
    """Penalised fitness of a single position via the scalar fit/restore path."""
    position = np.ravel(np.asarray(position, dtype=float))
    bounds = config.bounds_for(template)
    if position.size != template.dim:
        raise DomainError(f"position has {position.size} coordinates, template needs {template.dim}")
    violations = int(np.sum((position < bounds[:, 0]) | (position > bounds[:, 1])))
    clamped = np.clip(position, bounds[:, 0], bounds[:, 1])
    try:
        f = fit(template.kind(clamped), raw)
        pred = restore(f, raw.m - f.m_fit)
        e = np.abs(raw.values - pred) / raw.values * 100.0
        score = float(window_score(e, raw.train, config.fitness_window, config.statistic)[0])
        if not np.isfinite(score):
            raise NumericalError("non-finite score")
    except (NumericalError, DomainError):
        score = config.penalty * template.dim
    return score + violations * config.penalty


def _rng(seed, trial, iteration):
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(trial, iteration)))


def init_swarm(objective, config: PsoConfig, rng, bounds=None) -> SwarmState:
    """Uniform positions inside the bounds, zero velocities.

    ``bounds`` defaults to ``objective.bounds``, then to ``config.bounds``.
    """
    if bounds is None:
        bounds = getattr(objective, "bounds", config.bounds)
    if bounds is None:
        raise DomainError("no search bounds given")
    bounds = np.asarray(bounds, dtype=float)
    D = bounds.shape[0]
    u = rng.random((config.n, D))
    positions = bounds[:, 0] + u * (bounds[:, 1] - bounds[:, 0])
    fitness = objective(positions)
    best = int(np.argmin(fitness))
    return SwarmState(
        positions,
        np.zeros_like(positions),
        fitness,
        positions.copy(),
        fitness.copy(),
        positions[best].copy(),
        float(fitness[best]),
    )


def pso_step(state: SwarmState, config: PsoConfig, objective, rng) -> SwarmState:
    """One velocity/position update followed by the personal and global best updates.

    ``rng`` is a :class:`numpy.random.Generator` or a pair ``(r1, r2)`` of
    arrays shaped like ``state.positions`` holding the uniform draws.
    """
    if isinstance(rng, np.random.Generator):
        r1, r2 = rng.random((2,) + state.positions.shape)
    else:
        r1, r2 = (np.broadcast_to(np.asarray(r, dtype=float), state.positions.shape) for r in rng)
    w = config.inertia.at(state.iteration, config.iter_max)
    p = state.positions
    v = w * state.velocities + config.c1 * r1 * (state.pbest - p) + config.c2 * r2 * (state.gbest - p)
    p = p + v
    fitness = objective(p)
    improved = fitness < state.pbest_fitness
    pbest = np.where(improved[:, None], p, state.pbest)
    pbest_fitness = np.where(improved, fitness, state.pbest_fitness)
    best = int(np.argmin(pbest_fitness))
    gbest, gbest_fitness = state.gbest, state.gbest_fitness
    if pbest_fitness[best] < gbest_fitness:
        gbest, gbest_fitness = pbest[best].copy(), float(pbest_fitness[best])
    return SwarmState(p, v, fitness, pbest, pbest_fitness, gbest, gbest_fitness, state.iteration + 1)


@dataclass
class OptimizeResult:
    template: Template
    position: np.ndarray
    fitness: float
    trace: np.ndarray
    trial: int = 0
    trial_fitness: list = field(default_factory=list)

    @property
    def kind(self) -> ModelKind:
        return self.template.kind(self.position)

    @property
    def hyper(self) -> dict:
        return self.kind.hyper()


def run_swarm(objective, config: PsoConfig, trial: int = 0, bounds=None):
    """Run one seeded trial; returns the final state and the gbest-fitness trace."""
    state = init_swarm(objective, config, _rng(config.seed, trial, 0), bounds)
    trace = [state.gbest_fitness]
    for t in range(1, config.iter_max + 1):
        state = pso_step(state, config, objective, _rng(config.seed, trial, t))
        trace.append(state.gbest_fitness)
    return state, np.array(trace)


def optimize(
    raw: RawSeries,
    template: Template | str = "nipgm",
    config: PsoConfig | None = None,
    trials: int = 1,
    objective=None,
) -> OptimizeResult:
    """Search the template's hyperparameters; the best of ``trials`` runs is returned.

    ``objective`` overrides the default penalised fit error (any callable
    mapping an ``(n, dim)`` position array to ``n`` fitness values).
    """
    if isinstance(template, str):
        template = Template(template)
    config = config or PsoConfig()
    if trials < 1:
        raise DomainError("trials must be >= 1")
    objective = objective or Objective(raw, template, config)
    bounds = config.bounds_for(template)
    best = None
    fitnesses = []
    for j in range(trials):
        state, trace = run_swarm(objective, config, j, bounds)
        fitnesses.append(state.gbest_fitness)
        if best is None or state.gbest_fitness < best.fitness:
            best = OptimizeResult(template, state.gbest.copy(), state.gbest_fitness, trace, j)
    best.trial_fitness = fitnesses
    return best


def with_overrides(config: PsoConfig, **kw) -> PsoConfig:
    """Copy of ``config`` with the non-``None`` keyword overrides applied."""
    return replace(config, **{k: v for k, v in kw.items() if v is not None})
