"""Photocount statistics of one filtered detection mode.

The detected mode is B = integral of h(nu) B_out(nu) dnu for a
normalized filter h.  For the Gaussian output state of the driven
cavity, the counting statistics of B close on three spectral integrals:

    I1 = integral |h(nu)|^2 n(nu) dnu
    I2 = integral |h(nu)|^2 (n(nu) + 1) dnu
    I3 = | integral h(nu) h*(-nu) sqrt(n(-nu) (n(nu) + 1)) dnu |^2

    mean      = I1
    variance  = I1 I2 + I3
    third     = (I1 + I2) (I1 I2 + 3 I3)   (central)

For a normalized filter I2 = I1 + 1, and Cauchy-Schwarz bounds
I3 <= I1 I2, so the variance never exceeds the squeezed-vacuum value
2 <n> (<n> + 1); a narrow filter centered on nu = 0 saturates it.

``I2`` is evaluated as the photon part plus the numerically
re-derived filter norm: the two pieces have very different tails
(algebraic-times-n versus the bare profile) and are each integrated by
the strategy that suits them, keeping the normalization identity an
actual numerical statement instead of an assumption.

Wideband (voltage-mode) detection reuses the same integrals with the
effective profile g(nu) = sqrt(1 + nu/nu0) h(nu), which is deliberately
NOT renormalized; its norm and the global sqrt(nu0) amplitude scale are
reported separately so either bookkeeping convention can be recovered.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .core import ValidatedParams, photon_flux_density, spectral_peaks
from .errors import FilterExceedsBand
from .filters import (
    FilterSpec,
    eval_filter,
    filter_breakpoints,
    filter_norm_squared,
    filter_support,
    integration_window,
)
from .quadrature import DEFAULT_QUADRATURE, integrate, integrate_interval

__all__ = [
    "MomentSet",
    "integral_I1",
    "integral_I2",
    "integral_I3",
    "moments_single",
    "squeezed_vacuum_reference",
    "EffectiveFilter",
    "wideband_effective_filter",
    "moments_wideband",
]


@dataclass(frozen=True)
class MomentSet:
    """Photocount mean, variance and third central moment.

    ``third_central`` is None for schemes that only resolve two moments.
    ``components`` records the ingredients (I integrals, norms, largest
    quadrature error estimate, provenance flags) used to build the set.
    """

    mean: float
    variance: float
    third_central: float | None
    scheme: str
    components: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.mean < -1e-9:
            raise ValueError(f"negative mean photocount: {self.mean}")
        if self.variance < -1e-9:
            raise ValueError(f"negative photocount variance: {self.variance}")


def _spectral_breakpoints(p: ValidatedParams):
    locations, width = spectral_peaks(p)
    pts = []
    for loc in locations:
        pts += [loc - width, loc, loc + width]
    pts += [-3.0 * p.gamma, 3.0 * p.gamma]
    return pts


def _weighted_integral(p, integrand, window, breakpoints, spec):
    if window is not None:
        lo, hi = window
        if not hi > lo:
            from .quadrature import QuadratureResult

            return QuadratureResult(0.0, 0.0, 0)
        return integrate_interval(integrand, lo, hi, spec, breakpoints=breakpoints)
    return integrate(integrand, spec, scale=p.gamma, breakpoints=breakpoints)


def _i1(p: ValidatedParams, f: FilterSpec, spec):
    def integrand(nu):
        h = eval_filter(f, nu)
        return h * h * photon_flux_density(p, nu)

    bps = filter_breakpoints(f) + _spectral_breakpoints(p)
    return _weighted_integral(p, integrand, integration_window(f), bps, spec)


def _i3_window(f: FilterSpec):
    """Window for the h(nu) h(-nu) integrand, or None if unbounded."""
    win = integration_window(f)
    if win is None:
        return None
    lo = max(win[0], -win[1])
    hi = min(win[1], -win[0])
    return (lo, hi)


def _i3(p: ValidatedParams, f: FilterSpec, spec):
    def integrand(nu):
        amp = eval_filter(f, nu) * eval_filter(f, -nu)
        n = photon_flux_density(p, nu)
        return amp * np.sqrt(n * (n + 1.0))

    bps = filter_breakpoints(f) + [-b for b in filter_breakpoints(f)]
    bps += _spectral_breakpoints(p)
    window = _i3_window(f)
    res = _weighted_integral(p, integrand, window, bps, spec)
    value = abs(res.value) ** 2
    # d|A|^2 = 2 |A| dA
    err = 2.0 * abs(res.value) * res.error_estimate
    from .quadrature import QuadratureResult

    return QuadratureResult(value, err, res.evaluations)


def integral_I1(p: ValidatedParams, f: FilterSpec, spec=None) -> float:
    """Mean photocount integral of the filtered mode."""
    return _i1(p, f, spec or DEFAULT_QUADRATURE).value


def integral_I2(p: ValidatedParams, f: FilterSpec, spec=None) -> float:
    """Antinormal-order companion integral; I1 plus the filter norm."""
    spec = spec or DEFAULT_QUADRATURE
    return _i1(p, f, spec).value + filter_norm_squared(f, spec).value


def integral_I3(p: ValidatedParams, f: FilterSpec, spec=None) -> float:
    """Squared pair-correlation integral across (nu, -nu)."""
    return _i3(p, f, spec or DEFAULT_QUADRATURE).value


def moments_single(p: ValidatedParams, f: FilterSpec, spec=None) -> MomentSet:
    """Mean, variance and third central moment for one filtered mode."""
    spec = spec or DEFAULT_QUADRATURE
    r1 = _i1(p, f, spec)
    rnorm = filter_norm_squared(f, spec)
    r3 = _i3(p, f, spec)
    i1 = r1.value
    i2 = i1 + rnorm.value
    i3 = r3.value
    mean = i1
    variance = i1 * i2 + i3
    third = (i1 + i2) * (i1 * i2 + 3.0 * i3)
    quad_err = max(r1.error_estimate, rnorm.error_estimate, r3.error_estimate)
    return MomentSet(
        mean=mean,
        variance=variance,
        third_central=third,
        scheme="single_mode",
        components={
            "I1": i1,
            "I2": i2,
            "I3": i3,
            "norm_squared": rnorm.value,
            "quad_err": quad_err,
            "evaluations": r1.evaluations + rnorm.evaluations + r3.evaluations,
        },
    )


def squeezed_vacuum_reference(mean: float) -> MomentSet:
    """Ideal squeezed-vacuum counting statistics at the given mean.

    variance = 2 m (m + 1), third = 2 m (2 m + 1)(2 m + 2).  This is the
    narrow-centered-filter limit of ``moments_single`` and the analytic
    reference curve for the variance-versus-mean figure.
    """
    if mean < 0.0:
        raise ValueError(f"mean must be >= 0, got {mean}")
    m = float(mean)
    return MomentSet(
        mean=m,
        variance=2.0 * m * (m + 1.0),
        third_central=2.0 * m * (2.0 * m + 1.0) * (2.0 * m + 2.0),
        scheme="squeezed_vacuum_reference",
        components={},
    )


# ---------------------------------------------------------------------------
# Wideband (voltage-mode) detection
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EffectiveFilter:
    """Voltage-mode profile g(nu) = sqrt(1 + nu/nu0) h(nu).

    ``norm_squared`` is the closed-form integral of |g|^2 (equal to
    1 + center/nu0 for a rectangular base filter); ``scale`` is the
    global sqrt(nu0) amplitude prefactor, reported separately rather
    than folded into the profile.
    """

    base: FilterSpec
    nu0: float
    norm_squared: float
    scale: float


def wideband_effective_filter(f: FilterSpec, nu0: float) -> EffectiveFilter:
    """Build the effective voltage-mode profile for carrier ``nu0``.

    Requires a filter of compact support lying strictly above -nu0,
    where the square root is real; unbounded shapes always overflow the
    band and are rejected.
    """
    if not nu0 > 0.0:
        raise ValueError(f"nu0 must be > 0, got {nu0}")
    support = filter_support(f)
    if support is None:
        raise FilterExceedsBand(
            f"{f.shape} filter has unbounded support and reaches nu <= -nu0"
        )
    lo, hi = support
    if lo <= -nu0:
        raise FilterExceedsBand(
            f"filter support [{lo}, {hi}] reaches nu <= -nu0 = {-nu0}"
        )
    # integral (1 + nu/nu0) |h|^2 = 1 + <nu>_h / nu0; symmetric shapes
    # have <nu>_h = center.
    norm_sq = 1.0 + f.center / nu0
    return EffectiveFilter(base=f, nu0=nu0, norm_squared=norm_sq, scale=math.sqrt(nu0))


def _eval_effective(eff: EffectiveFilter, nu):
    nu = np.asarray(nu, dtype=float)
    band = 1.0 + nu / eff.nu0
    amp = np.sqrt(np.clip(band, 0.0, None))
    out = np.where(band > 0.0, amp * eval_filter(eff.base, nu), 0.0)
    return out if out.shape else float(out)


def moments_wideband(
    p: ValidatedParams, f: FilterSpec, nu0: float, spec=None
) -> MomentSet:
    """Counting moments of the voltage-mode profile g(nu).

    The moment formulas are those of the narrowband theory with g
    substituted for h.  They are exact for the mean and variance of the
    quadratic voltage-power observable; the third moment extends the
    substitution beyond its derivation and is flagged as an
    extrapolation in ``components``.
    """
    spec = spec or DEFAULT_QUADRATURE
    eff = wideband_effective_filter(f, nu0)
    lo, hi = filter_support(f)

    def g2n(nu):
        g = _eval_effective(eff, nu)
        return g * g * photon_flux_density(p, nu)

    def g2(nu):
        g = _eval_effective(eff, nu)
        return g * g

    bps = filter_breakpoints(f) + _spectral_breakpoints(p)
    r1 = integrate_interval(g2n, lo, hi, spec, breakpoints=bps)
    rnorm = integrate_interval(g2, lo, hi, spec, breakpoints=bps)

    ilo, ihi = max(lo, -hi), min(hi, -lo)
    if ihi > ilo:

        def pair(nu):
            amp = _eval_effective(eff, nu) * _eval_effective(eff, -nu)
            n = photon_flux_density(p, nu)
            return amp * np.sqrt(n * (n + 1.0))

        sym_bps = bps + [-b for b in bps]
        rp = integrate_interval(pair, ilo, ihi, spec, breakpoints=sym_bps)
        i3 = abs(rp.value) ** 2
        i3_err = 2.0 * abs(rp.value) * rp.error_estimate
        evals3 = rp.evaluations
    else:
        i3, i3_err, evals3 = 0.0, 0.0, 0

    i1 = r1.value
    i2 = i1 + rnorm.value
    mean = i1
    variance = i1 * i2 + i3
    third = (i1 + i2) * (i1 * i2 + 3.0 * i3)
    return MomentSet(
        mean=mean,
        variance=variance,
        third_central=third,
        scheme="wideband_voltage",
        components={
            "I1": i1,
            "I2": i2,
            "I3": i3,
            "norm_squared": rnorm.value,
            "norm_squared_closed_form": eff.norm_squared,
            "scale_sqrt_nu0": eff.scale,
            "third_is_extrapolated": True,
            "quad_err": max(r1.error_estimate, rnorm.error_estimate, i3_err),
            "evaluations": r1.evaluations + rnorm.evaluations + evals3,
        },
    )
