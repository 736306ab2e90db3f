"""Adaptive quadrature against integrals with known closed forms."""

import math

import numpy as np
import pytest

from parampstats import (
    NonFiniteIntegrand,
    ParampParams,
    QuadratureSpec,
    ToleranceNotMet,
    integrate,
    integrate_even,
    integrate_interval,
    photon_flux_density,
    validate_params,
)
from parampstats.quadrature import (
    RationalCompactification,
    TangentMap,
    TruncatedWindow,
    sinc_pair_overlap,
)

RIDGE = validate_params(ParampParams(gamma=1.0, xi_mag=0.5))


def lorentzian(width):
    return lambda nu: (width / (2.0 * math.pi)) / (nu**2 + width**2 / 4.0)


def test_lorentzian_norm():
    for width in (0.01, 1.0, 250.0):
        res = integrate(lorentzian(width), scale=width)
        assert res.value == pytest.approx(1.0, rel=1e-10)
        assert res.error_estimate < 1e-8


def test_flux_integral_closed_form():
    # contour integration of the ridge density: 2 pi x^2 / (1 - x^2)
    res = integrate(lambda nu: photon_flux_density(RIDGE, nu), scale=1.0)
    assert res.value == pytest.approx(2.0 * math.pi / 3.0, rel=1e-12)


def test_flux_squared_closed_form():
    res = integrate_even(lambda nu: photon_flux_density(RIDGE, nu) ** 2, scale=1.0)
    expect = math.pi * 0.5**4 * (5.0 - 0.25) / (1.0 - 0.25) ** 3
    assert res.value == pytest.approx(expect, rel=1e-12)
    # cross-route: dense trapezoid on a wide window
    nu = np.linspace(-80.0, 80.0, 1_600_001)
    crude = np.trapezoid(photon_flux_density(RIDGE, nu) ** 2, nu)
    assert res.value == pytest.approx(crude, rel=1e-8)


def test_partial_fraction_product():
    # int dnu / ((nu^2+a^2)(nu^2+b^2)) = pi / (a b (a+b))
    a, b = 0.35, 2.2
    res = integrate(lambda nu: 1.0 / ((nu**2 + a * a) * (nu**2 + b * b)), scale=1.0)
    assert res.value == pytest.approx(math.pi / (a * b * (a + b)), rel=1e-12)


def test_linearity_and_scale_covariance():
    f = lorentzian(1.0)
    base = integrate(f, scale=1.0).value
    doubled = integrate(lambda nu: 2.0 * f(nu), scale=1.0).value
    assert doubled == pytest.approx(2.0 * base, rel=1e-12)
    # stretching frequencies leaves the normalization alone
    stretched = integrate(lambda nu: 5.0 * lorentzian(5.0)(5.0 * nu), scale=1.0)
    assert stretched.value == pytest.approx(base, rel=1e-10)


def test_near_threshold_peak_is_resolved():
    p = validate_params(ParampParams(gamma=1.0, xi_mag=0.999))
    x = p.xi_mag
    res = integrate_even(lambda nu: photon_flux_density(p, nu), scale=1.0)
    expect = 2.0 * math.pi * x * x / (1.0 - x * x)
    assert res.value == pytest.approx(expect, rel=1e-9)


def test_interval_with_breakpoints():
    # piecewise integrand: panels aligned on the jump converge immediately
    f = lambda nu: np.where(np.abs(nu) <= 0.5, 1.0, 0.0)  # noqa: E731
    res = integrate_interval(f, -2.0, 2.0, breakpoints=(-0.5, 0.5))
    assert res.value == pytest.approx(1.0, rel=1e-13)


def test_evenness_guard():
    with pytest.raises(ValueError):
        integrate_even(lambda nu: nu + 1.0, scale=1.0)


def test_budget_exhaustion_reported():
    spec = QuadratureSpec(rel_tol=1e-14, abs_tol=1e-300, max_subdivisions=4)
    rough = lambda nu: np.abs(np.sin(50.0 * nu)) / (1.0 + nu * nu)  # noqa: E731
    with pytest.raises(ToleranceNotMet) as err:
        integrate(rough, spec, scale=1.0)
    assert err.value.error_estimate is not None


def test_nonfinite_integrand_rejected():
    f = lambda nu: 1.0 / nu  # noqa: E731  pole at the origin
    quiet = np.errstate(divide="ignore", over="ignore")
    with quiet, pytest.raises(NonFiniteIntegrand):
        integrate_interval(f, -1.0, 1.0, breakpoints=(0.0,))


def test_mapping_agreement():
    f = lorentzian(1.0)
    for mapping in (RationalCompactification(), TangentMap(), TruncatedWindow(1e7)):
        spec = QuadratureSpec(mapping=mapping)
        assert integrate(f, spec, scale=1.0).value == pytest.approx(
            1.0, rel=1e-7
        )


def test_complex_integrand():
    f = lambda nu: lorentzian(1.0)(nu) * np.exp(1j * np.arctan(nu))  # noqa: E731
    res = integrate(f, scale=1.0)
    assert isinstance(res.value, complex)
    assert res.value.imag == pytest.approx(0.0, abs=1e-12)  # odd imaginary part


def test_tightened_spec():
    spec = QuadratureSpec(rel_tol=1e-6, abs_tol=1e-10)
    tight = spec.tightened(10.0)
    assert tight.rel_tol == pytest.approx(1e-7)
    assert tight.abs_tol == pytest.approx(1e-11)
    assert tight.mapping is spec.mapping


class TestSincOverlap:
    """Overlaps of unit-spacing sinc pulses, exact tails included."""

    def test_orthonormality(self):
        for sep in range(0, 6):
            got = sinc_pair_overlap(1.0, 0.0, float(sep)).value
            expect = 1.0 if sep == 0 else 0.0
            assert got == pytest.approx(expect, abs=1e-10)

    def test_scaled_width(self):
        got = sinc_pair_overlap(0.25, 0.5, 0.5).value
        assert got == pytest.approx(1.0, abs=1e-10)
        got = sinc_pair_overlap(0.25, 0.0, 0.25).value
        assert got == pytest.approx(0.0, abs=1e-10)

    def test_incommensurate_centers(self):
        # centers not on a common lattice: compare against a long plain
        # trapezoid (tail truncation dominates its error budget)
        width, ca, cb = 1.0, 0.0, 0.4
        got = sinc_pair_overlap(width, ca, cb).value
        nu = np.linspace(-4000.0, 4000.0, 8_000_001)
        f = np.sinc((nu - ca) / width) * np.sinc((nu - cb) / width) / width
        assert got == pytest.approx(np.trapezoid(f, nu), abs=2e-4)
