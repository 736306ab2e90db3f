"""Detection filter profiles for single-mode photocounting.

A detection filter is a real, square-integrable profile h(nu) with
integral of |h|^2 equal to one.  Four shapes are provided, each
normalized in closed form:

* ``rectangular`` with bandwidth B: 1/sqrt(B) on [c - B/2, c + B/2];
* ``lorentzian`` with half-width g: sqrt(2 g^3 / pi) / ((nu-c)^2 + g^2);
* ``gaussian`` with std s: |h|^2 is the normal density of std s;
* ``sinc`` with main-lobe half-width w: sinc(pi (nu-c)/w) / sqrt(w).

``filter_norm_squared`` re-derives the norm numerically; the detection
integrals use it so the normalization is verified rather than assumed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .quadrature import (
    DEFAULT_QUADRATURE,
    QuadratureResult,
    integrate,
    integrate_interval,
    sinc_pair_overlap,
)

__all__ = [
    "FilterSpec",
    "FILTER_SHAPES",
    "eval_filter",
    "filter_norm_squared",
    "filter_support",
    "integration_window",
    "filter_breakpoints",
    "experiment_bandpass",
]

FILTER_SHAPES = ("rectangular", "lorentzian", "gaussian", "sinc")

# Half-width, in units of the gaussian std, beyond which the profile is
# numerically zero (exp(-36) squared is far below double precision).
_GAUSSIAN_CUT = 12.0


@dataclass(frozen=True)
class FilterSpec:
    """Shape, width parameter, and center of a detection filter."""

    shape: str
    width: float
    center: float = 0.0

    def __post_init__(self):
        if self.shape not in FILTER_SHAPES:
            raise ValueError(
                f"unknown filter shape {self.shape!r}; expected one of {FILTER_SHAPES}"
            )
        if not self.width > 0.0:
            raise ValueError(f"filter width must be > 0, got {self.width}")


def experiment_bandpass(unit_mhz: float = 1.0) -> FilterSpec:
    """Measured-setup preset: 336 MHz full band centered on nu = 0.

    The physical chain passes 0.1 to 168 MHz on either side of the
    half-pump frequency after downconversion, which acts on the
    symmetrized spectrum as a rectangular filter of full width
    2 x 168 MHz about zero (the 0.1 MHz inner cutoff is negligible at
    this bandwidth).  ``unit_mhz`` converts to the caller's frequency
    unit: pass 1.0 to work in MHz, 1e-3 to work in GHz, and so on.
    """
    return FilterSpec(shape="rectangular", width=336.0 * unit_mhz, center=0.0)


def eval_filter(f: FilterSpec, nu):
    """Evaluate h(nu); accepts scalars or ndarrays, always real."""
    x = np.asarray(nu, dtype=float) - f.center
    w = f.width
    if f.shape == "rectangular":
        out = np.where(np.abs(x) <= 0.5 * w, 1.0 / math.sqrt(w), 0.0)
    elif f.shape == "lorentzian":
        out = math.sqrt(2.0 * w**3 / math.pi) / (x * x + w * w)
    elif f.shape == "gaussian":
        out = (2.0 * math.pi * w * w) ** (-0.25) * np.exp(-x * x / (4.0 * w * w))
    else:  # sinc
        out = np.sinc(x / w) / math.sqrt(w)
    return out if out.shape else float(out)


def filter_support(f: FilterSpec):
    """Exact support as (lo, hi), or None for unbounded shapes."""
    if f.shape == "rectangular":
        return (f.center - 0.5 * f.width, f.center + 0.5 * f.width)
    return None


def integration_window(f: FilterSpec):
    """Finite window outside which |h|^2 is negligible, or None.

    Rectangular support is exact; the gaussian window is generous enough
    to truncate below double-precision resolution.  Lorentzian and sinc
    profiles have algebraic tails and return None (the caller integrates
    on the compactified axis instead).
    """
    if f.shape == "rectangular":
        return filter_support(f)
    if f.shape == "gaussian":
        return (f.center - _GAUSSIAN_CUT * f.width, f.center + _GAUSSIAN_CUT * f.width)
    return None


def filter_breakpoints(f: FilterSpec):
    """Frequencies where the profile has structure; quadrature hints."""
    c, w = f.center, f.width
    if f.shape == "rectangular":
        return [c - 0.5 * w, c, c + 0.5 * w]
    if f.shape == "sinc":
        return [c - 2.0 * w, c - w, c, c + w, c + 2.0 * w]
    return [c - 2.0 * w, c - 0.5 * w, c, c + 0.5 * w, c + 2.0 * w]


@lru_cache(maxsize=512)
def _norm_squared_cached(f: FilterSpec, spec) -> QuadratureResult:
    if f.shape == "sinc":
        # Plain bisection cannot chase the oscillating 1/nu^2 tail of
        # sinc^2 to 1e-10; the overlap routine attaches the exact tail.
        return sinc_pair_overlap(f.width, f.center, f.center, spec)

    def h2(nu):
        h = eval_filter(f, nu)
        return h * h

    window = integration_window(f)
    if window is not None:
        return integrate_interval(
            h2, window[0], window[1], spec, breakpoints=filter_breakpoints(f)
        )
    scale = max(f.width, abs(f.center), 1e-30)
    return integrate(h2, spec, scale=scale, breakpoints=filter_breakpoints(f))


def filter_norm_squared(f: FilterSpec, spec=None) -> QuadratureResult:
    """Numerical integral of |h|^2; equals 1 to quadrature accuracy.

    Recomputed from the profile rather than read off the closed-form
    normalization, so a mis-normalized shape would be caught by the
    moment pipeline and its tests.
    """
    return _norm_squared_cached(f, spec or DEFAULT_QUADRATURE)
