"""Detection filter shapes and normalization."""

import math

import numpy as np
import pytest

from parampstats import (
    FILTER_SHAPES,
    FilterSpec,
    eval_filter,
    experiment_bandpass,
    filter_norm_squared,
    filter_support,
    integration_window,
)


@pytest.mark.parametrize("shape", FILTER_SHAPES)
@pytest.mark.parametrize("width,center", [(1.0, 0.0), (0.37, 0.0), (2.5, 1.2),
                                          (0.05, -3.0), (10.0, 0.4)])
def test_unit_norm(shape, width, center):
    f = FilterSpec(shape, width, center)
    res = filter_norm_squared(f)
    assert res.value == pytest.approx(1.0, rel=1e-10), (shape, width, center)


def test_rectangular_profile():
    f = FilterSpec("rectangular", 2.0, 0.0)
    nu = np.array([-1.5, -1.0, 0.0, 0.99, 1.01])
    vals = eval_filter(f, nu)
    inside = 1.0 / math.sqrt(2.0)
    assert np.allclose(vals, [0.0, inside, inside, inside, 0.0])
    assert filter_support(f) == (-1.0, 1.0)


def test_rectangular_support_tracks_center():
    f = FilterSpec("rectangular", 1.0, 5.0)
    assert filter_support(f) == (4.5, 5.5)
    assert integration_window(f) == (4.5, 5.5)


def test_unbounded_shapes_have_no_support():
    for shape in ("lorentzian", "gaussian", "sinc"):
        assert filter_support(FilterSpec(shape, 1.0)) is None


def test_gaussian_window_covers_mass():
    f = FilterSpec("gaussian", 0.5, 1.0)
    lo, hi = integration_window(f)
    assert lo < 1.0 < hi
    # window wide enough that the excluded tails are negligible
    assert hi - 1.0 > 5 * 0.5


def test_filters_are_real_and_even_about_center():
    for shape in FILTER_SHAPES:
        f = FilterSpec(shape, 1.3, 0.7)
        nu = 0.7 + np.linspace(-3.0, 3.0, 41)
        vals = eval_filter(f, nu)
        assert np.isrealobj(vals)
        assert np.allclose(vals, vals[::-1], atol=1e-14)


def test_sinc_filter_oscillates():
    f = FilterSpec("sinc", 1.0, 0.0)
    vals = eval_filter(f, np.array([0.0, 0.5, 1.0, 1.5]))
    assert vals[0] > 0.0
    assert vals[2] == pytest.approx(0.0, abs=1e-14)
    assert vals[3] < 0.0


def test_experiment_bandpass_preset():
    f = experiment_bandpass()
    assert f.shape == "rectangular"
    assert f.width == pytest.approx(336.0)
    scaled = experiment_bandpass(unit_mhz=0.5)
    assert scaled.width == pytest.approx(168.0)


def test_invalid_specs_rejected():
    with pytest.raises(ValueError):
        FilterSpec("triangular", 1.0)
    with pytest.raises(ValueError):
        FilterSpec("rectangular", 0.0)
    with pytest.raises(ValueError):
        FilterSpec("gaussian", -1.0)
