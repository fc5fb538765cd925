"""Grey prediction models with a time-power term and a fractional-style accumulation.

The central model accumulates a short positive series with a weight ``lam``,
fits a linear grey equation whose forcing term grows like ``k**alpha``, and
restores predictions by inverting the accumulation. ``pso`` tunes
``(lam, alpha)``; ``workflows`` bundles end-to-end reproductions.
"""
from .errors import (
    DomainError,
    FitFailed,
    FormatError,
    GreyError,
    InsufficientData,
    NearSingular,
    NotFound,
    NumericalError,
    Overflow,
    RankDeficient,
    ShapeError,
)
from .series import RawSeries, accumulate, background, deaccumulate, nipago, nipiago
from .linalg import DesignSystem, solve_least_squares, trapezoid_power_exp_sum
from .models import GreyFit, ModelKind, fit, fit_predict, restore, restore_closed_form, time_response
from .metrics import MetricsReport, ape, evaluate, rmse_windows
from .baselines import PolyFit, fit_poly, predict_poly
from .pso import Inertia, OptimizeResult, PsoConfig, Template, optimize
from .data_io import Dataset, Report, bundled_dataset, dataset_names, load_csv, parse_csv, write_report
from .workflows import forecast, forecast_case, reproduce_case, reproduce_ranks

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
