"""Input-output spectrum of a driven single-sided cavity.

A flux-pumped Josephson parametric amplifier is modeled as one cavity
mode coupled to a transmission line at rate ``gamma`` and driven by a
two-tone pump that produces an effective quadratic interaction of
strength ``xi = xi_mag * exp(i xi_arg)``, with ``delta`` the pump
detuning from twice the cavity frequency.  Solving the linear
Heisenberg-Langevin dynamics in frequency space turns each incoming
mode pair (nu, -nu) into an outgoing two-mode squeezed pair:

    B_out(nu) = u(nu) b_nu + v(nu) b_dag(-nu),

    u = ((gamma - i delta)^2 + nu^2 + xi_mag^2) / d,
    v = 2 gamma xi / d,
    d = (gamma - i nu)^2 + delta^2 - xi_mag^2.

Unitarity of the mode transformation fixes |u|^2 - |v|^2 = 1, so the
pair is parameterized by a squeezing parameter eta(nu) with
|v| = sinh(eta); the emitted photon flux density is n(nu) = sinh^2(eta).

Conventions
-----------
* All frequencies, rates and couplings share one linear-frequency unit;
  no 2 pi factors are inserted internally.
* ``nu`` is measured from half the pump frequency.
* Stability of the linearized dynamics requires
  xi_mag^2 < gamma^2 + delta^2 (strict); the boundary is rejected.

Every function accepts scalar or ndarray ``nu`` and is safe to call
concurrently (pure functions of immutable inputs).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import NonPositiveCoupling, NonPositivePower, OutOfStabilityRange

__all__ = [
    "ParampParams",
    "ValidatedParams",
    "BogoliubovCoefficients",
    "SpectralPoint",
    "validate_params",
    "bogoliubov_coefficients",
    "intracavity_coefficients",
    "eta",
    "phases",
    "photon_flux_density",
    "bare_cavity_output_phase",
    "pump_detuning",
    "spectral_peaks",
    "spectral_point",
]


@dataclass(frozen=True)
class ParampParams:
    """Raw operating point of the amplifier.

    Attributes
    ----------
    gamma : float
        Cavity linewidth (coupling rate to the line), > 0.
    xi_mag : float
        Pump-induced coupling magnitude |xi| >= 0.
    xi_arg : float
        Pump phase arg(xi), radians.
    delta : float
        Pump detuning from twice the cavity frequency.
    nu0 : float or None
        Carrier frequency used by wideband (voltage-mode) detection;
        ignored by narrowband observables.
    """

    gamma: float
    xi_mag: float
    xi_arg: float = 0.0
    delta: float = 0.0
    nu0: float | None = None


@dataclass(frozen=True)
class ValidatedParams:
    """Operating point that passed the stability and positivity checks.

    Construct through :func:`validate_params`; downstream physics
    functions accept only this type, so a stability check cannot be
    skipped by accident.
    """

    gamma: float
    xi_mag: float
    xi_arg: float
    delta: float
    nu0: float | None

    @property
    def xi(self) -> complex:
        return self.xi_mag * cmath.exp(1j * self.xi_arg)

    @property
    def stability_margin(self) -> float:
        """gamma^2 + delta^2 - xi_mag^2, strictly positive by contract."""
        return self.gamma**2 + self.delta**2 - self.xi_mag**2


def validate_params(p) -> ValidatedParams:
    """Check positivity and the parametric stability bound.

    Raises
    ------
    NonPositiveCoupling
        If gamma <= 0, xi_mag < 0, or nu0 <= 0 when given.
    OutOfStabilityRange
        If xi_mag^2 >= gamma^2 + delta^2 (the threshold itself counts
        as unstable: the steady state does not exist there).
    """
    if isinstance(p, ValidatedParams):
        return p
    if not p.gamma > 0.0:
        raise NonPositiveCoupling(f"gamma must be > 0, got {p.gamma}")
    if p.xi_mag < 0.0:
        raise NonPositiveCoupling(f"xi_mag must be >= 0, got {p.xi_mag}")
    if p.nu0 is not None and not p.nu0 > 0.0:
        raise NonPositiveCoupling(f"nu0 must be > 0 when set, got {p.nu0}")
    if not p.xi_mag**2 < p.gamma**2 + p.delta**2:
        raise OutOfStabilityRange(
            f"unstable operating point: |xi|^2 = {p.xi_mag**2} >= "
            f"gamma^2 + delta^2 = {p.gamma**2 + p.delta**2}"
        )
    return ValidatedParams(
        gamma=float(p.gamma),
        xi_mag=float(p.xi_mag),
        xi_arg=float(p.xi_arg),
        delta=float(p.delta),
        nu0=None if p.nu0 is None else float(p.nu0),
    )


@dataclass(frozen=True)
class BogoliubovCoefficients:
    """Coefficient pair of one output (or intracavity) mode relation."""

    u: complex
    v: complex

    def unitarity_defect(self) -> float:
        """| |u|^2 - |v|^2 - 1 |; zero for the output-line coefficients."""
        return abs(abs(self.u) ** 2 - abs(self.v) ** 2 - 1.0)


@dataclass(frozen=True)
class SpectralPoint:
    """Spectral quantities of the output field at one frequency."""

    nu: float
    eta: float
    n: float
    phi_c: float
    phi_s: float


def _denominator(p: ValidatedParams, nu):
    return (p.gamma - 1j * np.asarray(nu, dtype=float)) ** 2 + (
        p.delta**2 - p.xi_mag**2
    )


def _uv_arrays(p: ValidatedParams, nu):
    """Vectorized (u, v) on an ndarray of frequencies."""
    nu = np.asarray(nu, dtype=float)
    d = _denominator(p, nu)
    u = ((p.gamma - 1j * p.delta) ** 2 + nu * nu + p.xi_mag**2) / d
    v = (2.0 * p.gamma * p.xi) / d
    return u, v


def bogoliubov_coefficients(p: ValidatedParams, nu: float) -> BogoliubovCoefficients:
    """Output-line coefficients (u, v) at frequency ``nu``.

    These satisfy |u|^2 - |v|^2 = 1 for every stable operating point
    and every real frequency.
    """
    u, v = _uv_arrays(p, nu)
    return BogoliubovCoefficients(u=complex(u), v=complex(v))


def intracavity_coefficients(p: ValidatedParams, nu: float) -> BogoliubovCoefficients:
    """Coefficients of the intracavity field on (b_nu, b_dag(-nu)).

    The intracavity mode density carries the 1/sqrt(pi) line density of
    states, so this pair is NOT unit-normalized; at xi = 0 the
    squared magnitude of ``u`` is the Lorentzian
    (gamma/pi) / (gamma^2 + nu^2), which integrates to one.
    """
    d = complex(_denominator(p, nu))
    pref = math.sqrt(p.gamma / math.pi)
    u = (p.gamma - 1j * (nu + p.delta)) * pref / d
    v = p.xi * pref / d
    return BogoliubovCoefficients(u=u, v=v)


def _big_s(p: ValidatedParams, nu):
    """sqrt((gamma^2 + nu^2 + |xi|^2 - delta^2)^2 + 4 delta^2 gamma^2)."""
    nu = np.asarray(nu, dtype=float)
    a = p.gamma**2 + nu * nu + p.xi_mag**2 - p.delta**2
    return np.hypot(a, 2.0 * p.delta * p.gamma)


def eta(p: ValidatedParams, nu):
    """Squeezing parameter eta(nu) >= 0 of the output pair (nu, -nu).

    Implemented as

        eta = (1/2) log( (S + 2 gamma |xi|) / (S - 2 gamma |xi|) ),
        S   = sqrt((gamma^2 + nu^2 + |xi|^2 - delta^2)^2
                   + 4 delta^2 gamma^2),

    written through log1p so small eta keeps full relative precision at
    large frequency.  On the zero-detuning ridge this reduces to
    (1/2) log( ((gamma+|xi|)^2 + nu^2) / ((gamma-|xi|)^2 + nu^2) ).
    """
    nu_arr = np.asarray(nu, dtype=float)
    s = _big_s(p, nu_arr)
    t = 2.0 * p.gamma * p.xi_mag
    out = 0.5 * np.log1p(2.0 * t / (s - t))
    return out if out.shape else float(out)


def phases(p: ValidatedParams, nu: float) -> tuple[float, float]:
    """(phi_c, phi_s): arguments of u(nu) and v(nu).

    Computed from the exact complex coefficients with a quadrant-aware
    argument, not from arctan quotients, so no branch bookkeeping is
    needed when the real parts change sign.
    """
    u, v = _uv_arrays(p, nu)
    return float(np.angle(u)), float(np.angle(v))


def photon_flux_density(p: ValidatedParams, nu):
    """Output photon flux density n(nu) = sinh^2(eta(nu)).

    Even in nu, decays as 4 gamma^2 |xi|^2 / nu^4 at large frequency,
    and integrates to 2 pi gamma |xi|^2 / (gamma^2 - |xi|^2) on the
    zero-detuning ridge.
    """
    s = np.sinh(eta(p, nu))
    return s * s


def bare_cavity_output_phase(gamma: float, nu):
    """Reflection phase -2 arctan(nu / gamma) of the undriven cavity.

    This is the conventional single-port scattering phase.  The xi -> 0
    limit of the output coefficients gives u = (gamma + i nu)/(gamma - i nu),
    whose argument is +2 arctan(nu / gamma); the two conventions differ
    by complex conjugation of the scattering amplitude and carry no
    observable consequence for photon counting.  Tests pin only |u| = 1
    and the magnitude of the phase.
    """
    if not gamma > 0.0:
        raise NonPositiveCoupling(f"gamma must be > 0, got {gamma}")
    nu = np.asarray(nu, dtype=float)
    out = -2.0 * np.arctan(nu / gamma)
    return out if out.shape else float(out)


def pump_detuning(phi: float, power_1: float, power_2: float, xi_mag: float) -> float:
    """Effective detuning delta = phi + |xi| (P1 + P2) / sqrt(P1 P2).

    ``phi`` is the geometric detuning of the pump tones; the second term
    is the power-dependent cavity pull.  Both powers must be positive.
    """
    if not (power_1 > 0.0 and power_2 > 0.0):
        raise NonPositivePower(
            f"pump powers must be > 0, got ({power_1}, {power_2})"
        )
    return phi + xi_mag * (power_1 + power_2) / math.sqrt(power_1 * power_2)


def spectral_peaks(p: ValidatedParams) -> tuple[tuple[float, ...], float]:
    """Locations and characteristic width of the maxima of n(nu).

    n(nu) peaks at nu = 0 for |delta|^2 <= gamma^2 + |xi|^2 and splits
    into two symmetric maxima beyond that.  The returned width is the
    distance of the response pole from the real axis, which collapses
    like gamma - |xi| near threshold on the ridge; quadrature callers
    use these as subdivision hints.
    """
    split = p.delta**2 - p.gamma**2 - p.xi_mag**2
    if split > 0.0:
        nu_pk = math.sqrt(split)
        locations = (-nu_pk, nu_pk)
    else:
        locations = (0.0,)
    inner = p.xi_mag**2 - p.delta**2
    if inner > 0.0:
        width = p.gamma - math.sqrt(inner)
    else:
        width = p.gamma
    width = max(width, 1e-12 * p.gamma)
    return locations, width


def spectral_point(p: ValidatedParams, nu: float) -> SpectralPoint:
    """Bundle (eta, n, phi_c, phi_s) at one frequency for tabulation."""
    e = float(eta(p, nu))
    phi_c, phi_s = phases(p, nu)
    return SpectralPoint(
        nu=float(nu), eta=e, n=math.sinh(e) ** 2, phi_c=phi_c, phi_s=phi_s
    )
