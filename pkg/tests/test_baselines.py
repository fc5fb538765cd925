import numpy as np
import pytest

from nipgm.baselines import fit_poly, horner, predict_poly
from nipgm.errors import DomainError, InsufficientData
from nipgm.series import RawSeries


def test_exact_quadratic_recovery():
    k = np.arange(1, 9)
    raw = RawSeries(k, 5 + 2 * k + 0.5 * k**2, train=6)
    pf = fit_poly(raw, 2)
    np.testing.assert_allclose(pf.coefficients, [5, 2, 0.5], rtol=1e-9)
    np.testing.assert_allclose(predict_poly(pf, 7, 8), raw.values[6:], rtol=1e-10)


def test_matches_numpy_polyfit(synthetic):
    pf = fit_poly(synthetic, 3)
    ref = np.polynomial.polynomial.polyfit(np.arange(1, 9), synthetic.values[:8], 3)
    np.testing.assert_allclose(pf.coefficients, ref, rtol=1e-8)


def test_horner():
    assert horner([1.0, 0.0, 2.0], 3.0) == pytest.approx(19.0)


def test_degree_checks(synthetic):
    with pytest.raises(DomainError):
        fit_poly(synthetic, 0)
    with pytest.raises(InsufficientData):
        fit_poly(synthetic.with_train(3), 3)


def test_published_pr_columns(case):
    """Reference values: polynomial comparator columns of every case."""
    name, ds = case
    pf = fit_poly(ds.raw, ds.recipe["pr_degree"])
    np.testing.assert_allclose(predict_poly(pf, 1, ds.raw.m), ds.reference["pr"], rtol=5e-4)
