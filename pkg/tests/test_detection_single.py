"""Single-mode counting moments and the wideband voltage variant."""

import math

import numpy as np
import pytest

from parampstats import (
    FilterExceedsBand,
    FilterSpec,
    MomentSet,
    ParampParams,
    integral_I1,
    integral_I2,
    integral_I3,
    integrate_interval,
    moments_single,
    moments_wideband,
    photon_flux_density,
    squeezed_vacuum_reference,
    validate_params,
    wideband_effective_filter,
)

RIDGE = validate_params(ParampParams(gamma=1.0, xi_mag=0.5))
NARROW = FilterSpec("rectangular", 1e-3)


def test_narrow_filter_samples_the_peak():
    assert integral_I1(RIDGE, NARROW) == pytest.approx(16.0 / 9.0, rel=1e-5)


def test_i2_offsets_i1_by_filter_norm():
    for shape, width in (("rectangular", 0.8), ("gaussian", 0.5),
                         ("lorentzian", 0.3), ("sinc", 1.0)):
        f = FilterSpec(shape, width)
        assert integral_I2(RIDGE, f) - integral_I1(RIDGE, f) == pytest.approx(
            1.0, abs=1e-8
        )


def test_i2_direct_quadrature_route():
    # same quantity through one integral of |h|^2 (n + 1) instead of
    # the sum of two separately computed pieces
    f = FilterSpec("rectangular", 2.0)
    direct = integrate_interval(
        lambda nu: 0.5 * (photon_flux_density(RIDGE, nu) + 1.0), -1.0, 1.0
    )
    assert integral_I2(RIDGE, f) == pytest.approx(direct.value, rel=1e-10)


def test_i3_narrow_limit():
    got = integral_I3(RIDGE, NARROW)
    assert got == pytest.approx(400.0 / 81.0, rel=1e-5)


def test_i3_detached_filter_vanishes():
    # filter far off-center: h(nu) h(-nu) has no common support
    f = FilterSpec("rectangular", 1.0, 8.0)
    assert integral_I3(RIDGE, f) == 0.0
    assert integral_I1(RIDGE, f) > 0.0


def test_narrow_filter_moments_match_reference():
    ms = moments_single(RIDGE, NARROW)
    assert ms.scheme == "single_mode"
    assert ms.mean == pytest.approx(16.0 / 9.0, rel=1e-5)
    assert ms.variance == pytest.approx(800.0 / 81.0, rel=1e-5)
    assert ms.third_central == pytest.approx(65600.0 / 729.0, rel=1e-5)


def test_reference_values():
    ref = squeezed_vacuum_reference(1.0)
    assert (ref.mean, ref.variance, ref.third_central) == (1.0, 4.0, 24.0)
    ref = squeezed_vacuum_reference(16.0 / 9.0)
    assert ref.variance == pytest.approx(800.0 / 81.0, rel=1e-15)
    assert ref.third_central == pytest.approx(65600.0 / 729.0, rel=1e-15)
    assert squeezed_vacuum_reference(0.0).variance == 0.0


@pytest.mark.parametrize("eta0,width", [(2.0, 0.05), (3.0, 0.02)])
def test_deep_squeezing_still_single_mode(eta0, width):
    x = math.tanh(eta0 / 2.0)
    p = validate_params(ParampParams(gamma=1.0, xi_mag=x))
    ms = moments_single(p, FilterSpec("rectangular", width))
    ref = squeezed_vacuum_reference(ms.mean)
    assert ms.variance == pytest.approx(ref.variance, rel=1e-3)
    assert ms.third_central == pytest.approx(ref.third_central, rel=1e-3)


def test_wide_filter_breaks_the_single_mode_bound():
    # averaging over the spectrum makes the state multimode: the
    # variance drops strictly below the squeezed-vacuum curve
    ms = moments_single(RIDGE, FilterSpec("rectangular", 4.0))
    ref = squeezed_vacuum_reference(ms.mean)
    assert ms.variance < ref.variance
    assert ms.variance > 0.0


def test_cauchy_schwarz_everywhere():
    rng = np.random.default_rng(2741)
    shapes = ("rectangular", "gaussian", "lorentzian")
    for _ in range(24):
        g = float(10.0 ** rng.uniform(-0.5, 0.5))
        x = float(rng.uniform(0.05, 0.9)) * g
        d = float(rng.uniform(-1.0, 1.0)) * g
        if x * x >= g * g + d * d:
            continue
        p = validate_params(ParampParams(gamma=g, xi_mag=x, delta=d))
        shape = shapes[int(rng.integers(len(shapes)))]
        f = FilterSpec(shape, float(rng.uniform(0.05, 3.0)) * g,
                       float(rng.uniform(-1.0, 1.0)) * g)
        i1, i2, i3 = (integral_I1(p, f), integral_I2(p, f), integral_I3(p, f))
        assert i3 <= i1 * i2 + 1e-10
        ms = moments_single(p, f)
        assert ms.variance <= 2.0 * ms.mean * (ms.mean + 1.0) + 1e-8


def test_moment_set_rejects_negative_mean():
    with pytest.raises(ValueError):
        MomentSet(mean=-0.5, variance=1.0, third_central=None, scheme="x")


class TestWideband:
    def test_effective_norm_closed_form(self):
        f = FilterSpec("rectangular", 2.0, 3.0)
        eff = wideband_effective_filter(f, 50.0)
        assert eff.norm_squared == pytest.approx(1.0 + 3.0 / 50.0, rel=1e-14)
        assert eff.scale == pytest.approx(math.sqrt(50.0), rel=1e-15)

    def test_norm_numeric_route_agrees(self):
        f = FilterSpec("rectangular", 2.0, 3.0)
        ms = moments_wideband(RIDGE, f, 50.0)
        assert ms.components["norm_squared"] == pytest.approx(
            ms.components["norm_squared_closed_form"], rel=1e-10
        )
        assert ms.components["third_is_extrapolated"] is True

    def test_unbounded_filter_rejected(self):
        for shape in ("gaussian", "lorentzian", "sinc"):
            with pytest.raises(FilterExceedsBand):
                wideband_effective_filter(FilterSpec(shape, 1.0), 50.0)

    def test_filter_below_band_edge_rejected(self):
        # support reaching nu <= -nu0 crosses zero absolute frequency
        with pytest.raises(FilterExceedsBand):
            wideband_effective_filter(FilterSpec("rectangular", 4.0), 1.5)

    def test_invalid_carrier_rejected(self):
        with pytest.raises(ValueError):
            wideband_effective_filter(FilterSpec("rectangular", 1.0), 0.0)

    def test_large_carrier_recovers_single_mode(self):
        f = FilterSpec("rectangular", 1.0, 0.5)
        wide = moments_wideband(RIDGE, f, 1e8)
        plain = moments_single(RIDGE, f)
        assert wide.mean == pytest.approx(plain.mean, rel=1e-7)
        assert wide.variance == pytest.approx(plain.variance, rel=1e-7)

    def test_tilt_raises_the_mean(self):
        # sqrt(1 + nu/nu0) weights the upper sideband more
        f = FilterSpec("rectangular", 1.0, 1.0)
        wide = moments_wideband(RIDGE, f, 10.0)
        plain = moments_single(RIDGE, f)
        assert wide.mean > plain.mean
        assert wide.scheme == "wideband_voltage"
