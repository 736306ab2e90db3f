"""Frequency-resolved photocounting over a comb of detection modes.

The output field is decomposed into orthonormal modes of spacing
``delta`` (a boxcar window per bin, or the band-limited sinc basis on
the same lattice) and every mode is counted.  With the mode matrices

    J1[n, m] = integral g_n(nu) g_m(nu) n(nu) dnu
    J2[n, m] = J1[n, m] + overlap(n, m)
    J3[n, m] = | integral g_n(nu) g_m(-nu) sqrt(n(nu)(n(nu)+1)) dnu |^2

the mode-sum totals of the counting distribution are

    mean sum      = sum_n J1[n, n]
    variance sum  = sum_{n,m} ( J1[n, m] J2[m, n] + J3[n, -m] )

and the photons counted in an accumulation interval ``tau`` are the
sums scaled by tau * delta.  For the window basis the matrices are
diagonal in the required
combinations, so the double sum collapses to one sum over bins; that
path is evaluated with batched fixed Kronrod panels and a dynamic
outward truncation.  The sinc basis keeps genuine off-diagonal terms
and is summed over an explicit mode cutoff.

As delta -> 0 the counted moments converge (quadratically) to the
resolved limit

    tau delta * mean sum      -> tau * integral n(nu) dnu
    tau delta * variance sum  -> tau * integral 2 n(nu) (n(nu) + 1) dnu

so the Fano factor tends to 2 + 2 * integral n^2 / integral n >= 2:
resolved counting never reaches the coherent-state floor, and its
variance exceeds the single-filtered-mode value at matched mean except
at very long accumulation times.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .core import ParampParams, photon_flux_density, spectral_peaks, validate_params
from .detection_single import MomentSet
from .errors import TailNotConverged, ZeroMean
from .quadrature import (
    DEFAULT_QUADRATURE,
    QuadratureSpec,
    integrate_even,
    integrate_interval,
    panel_rule,
    sinc_pair_overlap,
)

__all__ = [
    "ModeGenerator",
    "MultimodeConfig",
    "eval_generator",
    "mode_overlap",
    "integral_J",
    "moments_multimode_finite",
    "LimitRates",
    "limit_rates",
    "moments_multimode_limit",
    "fano_factor",
    "universal_F",
    "padurariu_reference",
    "FigureSVData",
    "figure_sv_dataset",
    "canonical_tau_list",
    "DEFAULT_SV_XI_GRID",
]

GENERATOR_KINDS = ("window", "sinc")

_PANEL_X, _PANEL_WK, _PANEL_WG = panel_rule()

# Relative size below which an outward bin pair no longer matters.
_TAIL_REL = 1e-12
_WINDOW_BLOCK = 8192
_MAX_WINDOW_PAIRS = 2_000_000


@dataclass(frozen=True)
class ModeGenerator:
    """Orthonormal detection-mode family on the lattice nu = n * delta.

    kind "window": g_n = delta^{-1/2} on [n delta - delta/2, n delta + delta/2].
    kind "sinc":   g_n = delta^{-1/2} sinc(pi (nu - n delta) / delta).
    """

    kind: str
    delta: float

    def __post_init__(self):
        if self.kind not in GENERATOR_KINDS:
            raise ValueError(
                f"unknown generator kind {self.kind!r}; expected one of "
                f"{GENERATOR_KINDS}"
            )
        if not self.delta > 0.0:
            raise ValueError(f"mode spacing must be > 0, got {self.delta}")


@dataclass(frozen=True)
class MultimodeConfig:
    """Mode family, accumulation time, and optional truncation override.

    ``mode_cutoff`` bounds |n|.  For the window basis None means dynamic
    outward truncation until the tail is negligible; for the sinc basis
    None selects the default cutoff of 16.
    """

    generator: ModeGenerator
    tau: float
    mode_cutoff: int | None = None

    def __post_init__(self):
        if not self.tau > 0.0:
            raise ValueError(f"accumulation time must be > 0, got {self.tau}")
        if self.mode_cutoff is not None and self.mode_cutoff < 0:
            raise ValueError(f"mode_cutoff must be >= 0, got {self.mode_cutoff}")


def eval_generator(g: ModeGenerator, n: int, nu):
    """Evaluate the mode profile g_n(nu); vectorized in nu."""
    nu = np.asarray(nu, dtype=float)
    x = nu - n * g.delta
    root = math.sqrt(g.delta)
    if g.kind == "window":
        out = np.where(np.abs(x) <= 0.5 * g.delta, 1.0 / root, 0.0)
    else:
        out = np.sinc(x / g.delta) / root
    return out if out.shape else float(out)


def mode_overlap(g: ModeGenerator, n: int, m: int, spec=None) -> float:
    """Overlap integral of g_n and g_m; identity up to quadrature error.

    Window modes live on disjoint bins of constant height, so their
    overlap is exact.  Sinc overlaps are recomputed numerically (with
    exact oscillatory tails) rather than asserted.
    """
    if g.kind == "window":
        return 1.0 if n == m else 0.0
    res = sinc_pair_overlap(g.delta, n * g.delta, m * g.delta, spec)
    return float(res.value)


def _pair_weight(p, nu):
    n = photon_flux_density(p, nu)
    return np.sqrt(n * (n + 1.0))


def _spectral_extent(p):
    locations, width = spectral_peaks(p)
    return max(3.0 * p.gamma, max(abs(l) for l in locations) + 3.0 * width)


def _window_bin_integral(p, g, n, weight_fn, spec):
    lo = n * g.delta - 0.5 * g.delta
    hi = n * g.delta + 0.5 * g.delta
    res = integrate_interval(
        lambda nu: weight_fn(p, nu) / g.delta, lo, hi, spec, breakpoints=[n * g.delta]
    )
    return float(res.value)


def _sinc_weighted_pair(p, g, a, b, weight_fn, spec, lobes):
    """integral g_a(nu) g_b(nu) w(nu) dnu for the sinc basis.

    Integrated over a central window wide enough that the algebraic
    decay of w has set in, with the truncated tail bounded through the
    1/|nu - c| sinc envelopes and folded into the error estimate.
    """
    d = g.delta
    ca, cb = a * d, b * d
    ext = _spectral_extent(p)
    lo = min(ca, cb) - lobes * d - ext
    hi = max(ca, cb) + lobes * d + ext

    def integrand(nu):
        return eval_generator(g, a, nu) * eval_generator(g, b, nu) * weight_fn(p, nu)

    # The product oscillates on the mode lattice; seeding panel edges at
    # the lattice points resolves every lobe immediately.
    step = max(1, int(math.ceil((hi - lo) / d / 1500.0)))
    lattice = np.arange(math.floor(lo / d), math.ceil(hi / d) + 1, step) * d
    pts = list(lattice)
    locations, width = spectral_peaks(p)
    for loc in locations:
        pts += [loc - width, loc + width]
    res = integrate_interval(integrand, lo, hi, spec, breakpoints=pts)

    w_hi = float(weight_fn(p, np.asarray(hi)))
    w_lo = float(weight_fn(p, np.asarray(lo)))
    tail_bound = (d / math.pi**2) * (
        w_hi / (hi - max(ca, cb)) + w_lo / (min(ca, cb) - lo)
    )
    return float(res.value), res.error_estimate + tail_bound, res.evaluations


def integral_J(p, g: ModeGenerator, which: str, n: int, m: int | None = None, spec=None):
    """One entry of the J1 / J2 / J3 mode matrices, by its definition.

    ``m`` defaults to ``n``.  J3 uses the literal index pair: its second
    profile is evaluated at -nu, so the variance double sum calls it
    with (n, -m).
    """
    params = validate_params(p)
    spec = spec or DEFAULT_QUADRATURE
    if m is None:
        m = n
    if which not in ("J1", "J2", "J3"):
        raise ValueError(f"which must be J1, J2 or J3, got {which!r}")

    if which in ("J1", "J2"):
        if g.kind == "window":
            value = _window_bin_integral(params, g, n, photon_flux_density, spec) if n == m else 0.0
        else:
            value, _, _ = _sinc_weighted_pair(
                params, g, n, m, photon_flux_density, spec, lobes=40
            )
        if which == "J2":
            value += mode_overlap(g, n, m, spec)
        return value

    # J3: second profile mirrored in frequency; for both bases
    # g_m(-nu) = g_{-m}(nu), so this is a lattice pair integral again.
    if g.kind == "window":
        amp = _window_bin_integral(params, g, n, _pair_weight, spec) if m == -n else 0.0
    else:
        amp, _, _ = _sinc_weighted_pair(params, g, n, -m, _pair_weight, spec, lobes=60)
    return amp * amp


def _window_block_sums(p, delta, j_arr):
    """Fixed Kronrod panel on every bin center in ``j_arr`` at once.

    Returns per-bin J1, the amplitude whose square is the J3 diagonal,
    and a per-bin error estimate from the embedded Gauss rule.
    """
    nodes = (j_arr * delta)[:, None] + (0.5 * delta) * _PANEL_X[None, :]
    n = photon_flux_density(p, nodes)
    w = np.sqrt(n * (n + 1.0))
    j1 = 0.5 * (n @ _PANEL_WK)
    kroot = 0.5 * (w @ _PANEL_WK)
    err_n = np.abs(j1 - 0.5 * (n[:, 1::2] @ _PANEL_WG))
    err_w = np.abs(kroot - 0.5 * (w[:, 1::2] @ _PANEL_WG))
    return j1, kroot, err_n, err_w


def _tail_flux_integral(p, edge):
    """integral of n(nu) over |nu| > edge; loose tolerance, it only
    feeds error reporting."""
    spec = QuadratureSpec(rel_tol=1e-6, abs_tol=1e-30, max_subdivisions=200)

    def folded(s):
        nu = edge / s
        return photon_flux_density(p, nu) * edge / (s * s)

    res = integrate_interval(folded, 0.0, 1.0, spec)
    return 2.0 * float(res.value)


def _bin_contributions(j1, kroot):
    return j1 * (j1 + 1.0) + kroot * kroot


def _finite_window(p, cfg: MultimodeConfig, spec):
    delta, tau = cfg.generator.delta, cfg.tau
    s_mean = 0.0
    s_var = 0.0
    s_err = 0.0
    evals = 0

    j1, kroot, err_n, err_w = _window_block_sums(p, delta, np.array([0]))
    s_mean += float(j1.sum())
    s_var += float(_bin_contributions(j1, kroot).sum())
    s_err += float(((2.0 * j1 + 1.0) * err_n + 2.0 * kroot * err_w).sum() + err_n.sum())
    evals += 15

    if cfg.mode_cutoff == 0:
        k_last = 0
    elif cfg.mode_cutoff is not None:
        k_last = cfg.mode_cutoff
        for k0 in range(1, cfg.mode_cutoff + 1, _WINDOW_BLOCK):
            k1 = min(k0 + _WINDOW_BLOCK, cfg.mode_cutoff + 1)
            ks = np.arange(k0, k1)
            both = np.concatenate([ks, -ks])
            j1, kroot, err_n, err_w = _window_block_sums(p, delta, both)
            s_mean += float(j1.sum())
            s_var += float(_bin_contributions(j1, kroot).sum())
            s_err += float(
                ((2.0 * j1 + 1.0) * err_n + 2.0 * kroot * err_w).sum() + err_n.sum()
            )
            evals += 15 * both.size
    else:
        consec = 0
        k0 = 1
        k_last = 0
        while True:
            if k0 > _MAX_WINDOW_PAIRS:
                raise TailNotConverged(
                    f"window-mode sums did not settle within "
                    f"{_MAX_WINDOW_PAIRS} bin pairs (spacing {delta})"
                )
            k1 = min(k0 + _WINDOW_BLOCK, _MAX_WINDOW_PAIRS + 1)
            ks = np.arange(k0, k1)
            jp, kp, enp, ewp = _window_block_sums(p, delta, ks)
            jm, km, enm, ewm = _window_block_sums(p, delta, -ks)
            pair_mean = jp + jm
            pair_var = _bin_contributions(jp, kp) + _bin_contributions(jm, km)
            s_mean += float(pair_mean.sum())
            s_var += float(pair_var.sum())
            s_err += float(
                ((2.0 * jp + 1.0) * enp + 2.0 * kp * ewp).sum()
                + ((2.0 * jm + 1.0) * enm + 2.0 * km * ewm).sum()
                + enp.sum()
                + enm.sum()
            )
            evals += 30 * ks.size
            k_last = int(ks[-1])

            small = (pair_mean < _TAIL_REL * max(s_mean, 1e-300)) & (
                pair_var < _TAIL_REL * max(s_var, 1e-300)
            )
            # Count the trailing run of negligible pairs across blocks.
            run = 0
            for flag in small[::-1]:
                if flag:
                    run += 1
                else:
                    break
            consec = consec + run if run == small.size else run
            if consec >= 5:
                break
            k0 = k1

    if cfg.mode_cutoff is not None:
        # pinned cutoff: refuse if the first excluded pair still carries
        # a visible share of the sums (same 0.1% bar as the sinc ring)
        probe = np.array([k_last + 1, -(k_last + 1)])
        j1, kroot, _, _ = _window_block_sums(p, delta, probe)
        probe_mean = float(j1.sum())
        probe_var = float(_bin_contributions(j1, kroot).sum())
        evals += 30
        if probe_mean > 1e-3 * s_mean or probe_var > 1e-3 * s_var:
            raise TailNotConverged(
                f"bins beyond the pinned cutoff |n| <= {k_last} still "
                f"carry more than 0.1% of the mode sums (spacing {delta})"
            )

    edge = (k_last + 0.5) * delta
    tail = _tail_flux_integral(p, edge)
    tail_mean = tail / delta
    tail_var = 2.0 * tail / delta

    quad_err = s_err + tail_mean + tail_var
    return MomentSet(
        mean=s_mean,
        variance=s_var,
        third_central=None,
        scheme="multimode_finite",
        components={
            "generator": "window",
            "delta": delta,
            "tau": tau,
            "counted_mean": tau * delta * s_mean,
            "counted_variance": tau * delta * s_var,
            "max_mode_index": k_last,
            "tail_estimate_mean": tail_mean,
            "quad_err": quad_err,
            "evaluations": evals,
        },
    )


def _canonical_pair(a, b):
    """Representative of {(a,b),(b,a),(-a,-b),(-b,-a)}; the mode
    matrices share one value across the whole orbit."""
    cands = sorted([tuple(sorted((a, b))), tuple(sorted((-a, -b)))])
    return cands[0]


def _finite_sinc(p, cfg: MultimodeConfig, spec):
    delta, tau = cfg.generator.delta, cfg.tau
    cutoff = 16 if cfg.mode_cutoff is None else cfg.mode_cutoff
    idx = np.arange(-cutoff, cutoff + 1)
    size = idx.size
    g = cfg.generator

    pmat = np.zeros((size, size))
    qmat = np.zeros((size, size))
    err_total = 0.0
    evals = 0
    cache = {}

    for i, a in enumerate(idx):
        for j, b in enumerate(idx):
            if j < i:
                continue
            key = _canonical_pair(int(a), int(b))
            if key not in cache:
                pv, pe, pn = _sinc_weighted_pair(
                    p, g, key[0], key[1], photon_flux_density, spec, lobes=40
                )
                qv, qe, qn = _sinc_weighted_pair(
                    p, g, key[0], key[1], _pair_weight, spec, lobes=60
                )
                cache[key] = (pv, qv, pe + qe, pn + qn)
            pv, qv, err, n_ev = cache[key]
            pmat[i, j] = pmat[j, i] = pv
            qmat[i, j] = qmat[j, i] = qv
            err_total += err
            evals += n_ev

    mean_sum = float(np.trace(pmat))
    var_sum = float((pmat * pmat).sum() + np.trace(pmat) + (qmat * qmat).sum())

    # Convergence of the truncation: the boundary ring must be marginal.
    ring = np.zeros((size, size), dtype=bool)
    ring[0, :] = ring[-1, :] = ring[:, 0] = ring[:, -1] = True
    ring_mean = float(pmat[0, 0] + pmat[-1, -1])
    ring_var = float(
        (pmat * pmat)[ring].sum() + ring_mean + (qmat * qmat)[ring].sum()
    )
    if ring_mean > 1e-3 * mean_sum or ring_var > 1e-3 * var_sum:
        raise TailNotConverged(
            f"boundary modes at |n| = {cutoff} still contribute more than "
            f"0.1% of the mode sums; raise mode_cutoff"
        )

    return MomentSet(
        mean=mean_sum,
        variance=var_sum,
        third_central=None,
        scheme="multimode_finite",
        components={
            "generator": "sinc",
            "delta": delta,
            "tau": tau,
            "counted_mean": tau * delta * mean_sum,
            "counted_variance": tau * delta * var_sum,
            "mode_cutoff": cutoff,
            "boundary_fraction_mean": ring_mean / mean_sum if mean_sum else 0.0,
            "quad_err": err_total,
            "evaluations": evals,
        },
    )


def moments_multimode_finite(p, cfg: MultimodeConfig, spec=None) -> MomentSet:
    """Mode-sum totals of resolved counting at finite spacing.

    Reports the raw sums over modes (units of count per unit frequency
    per unit time): multiply by tau * delta for photons counted in an
    interval tau; those products are precomputed in ``components`` as
    ``counted_mean`` / ``counted_variance``.  Only two moments exist in
    this scheme; ``third_central`` is None.
    """
    params = validate_params(p)
    spec = spec or DEFAULT_QUADRATURE
    if cfg.generator.kind == "window":
        return _finite_window(params, cfg, spec)
    return _finite_sinc(params, cfg, spec)


# ---------------------------------------------------------------------------
# Resolved (delta -> 0) limit
# ---------------------------------------------------------------------------


def _flux_integrals(p, spec):
    locations, width = spectral_peaks(p)
    bps = []
    for loc in locations:
        bps += [loc - width, loc, loc + width]

    flux = integrate_even(
        lambda nu: photon_flux_density(p, nu), spec, scale=p.gamma, breakpoints=bps
    )

    def pair(nu):
        n = photon_flux_density(p, nu)
        return n * (n + 1.0)

    pair_res = integrate_even(pair, spec, scale=p.gamma, breakpoints=bps)
    return flux, pair_res


class LimitRates(NamedTuple):
    """Resolved-counting rates; unpacks as (mean_rate, variance_rate)."""

    mean_rate: float
    variance_rate: float


def limit_rates(p, tau: float, spec=None) -> LimitRates:
    """Mean and variance of resolved counting in the dense-comb limit.

    mean_rate = tau * integral n, variance_rate = tau * integral
    2 n (n + 1), both by direct quadrature of the limit integrands; the
    finite-spacing scheme converges to these quadratically in delta.
    """
    ms = moments_multimode_limit(p, tau, spec)
    return LimitRates(ms.mean, ms.variance)


def moments_multimode_limit(p, tau: float, spec=None) -> MomentSet:
    """``limit_rates`` packaged with its quadrature diagnostics."""
    params = validate_params(p)
    if not tau > 0.0:
        raise ValueError(f"accumulation time must be > 0, got {tau}")
    spec = spec or DEFAULT_QUADRATURE
    flux, pair_res = _flux_integrals(params, spec)
    mean = tau * float(flux.value)
    variance = tau * 2.0 * float(pair_res.value)
    return MomentSet(
        mean=mean,
        variance=variance,
        third_central=None,
        scheme="multimode_limit",
        components={
            "flux_integral": float(flux.value),
            "pair_integral": float(pair_res.value),
            "tau": tau,
            "quad_err": tau * (flux.error_estimate + 2.0 * pair_res.error_estimate),
            "evaluations": flux.evaluations + pair_res.evaluations,
        },
    )


def fano_factor(p, tau: float, spec=None) -> float:
    """Variance-to-mean ratio of resolved counting; independent of tau.

    Equals 2 + 2 integral n^2 / integral n >= 2, approaching 2 in the
    weak-drive limit (each resolved pair mode is chaotic).
    """
    mean_rate, variance_rate = limit_rates(p, tau, spec)
    if mean_rate <= 0.0:
        raise ZeroMean("Fano factor undefined: mean photocount is zero")
    return variance_rate / mean_rate


def universal_F(p_dimensionless, spec=None):
    """Dimensionless count functions of (gamma tau, |xi| tau, delta tau).

    Returns (F_n, F_dn2) with

        F_n   = integral n(nu) dnu / (2 pi gamma)
        F_dn2 = integral 2 n (n + 1) dnu / (2 pi gamma)

    so that mean = 2 pi (gamma tau) F_n and variance = 2 pi (gamma tau)
    F_dn2.  Any parameter set sharing the three products gives the same
    pair; on the zero-detuning ridge F_n = x^2 / (1 - x^2) with
    x = |xi| / gamma.
    """
    gamma_tau, xi_tau, delta_tau = (float(v) for v in p_dimensionless)
    params = validate_params(
        ParampParams(gamma=gamma_tau, xi_mag=xi_tau, delta=delta_tau)
    )
    spec = spec or DEFAULT_QUADRATURE
    flux, pair_res = _flux_integrals(params, spec)
    denom = 2.0 * math.pi * gamma_tau
    return float(flux.value) / denom, 2.0 * float(pair_res.value) / denom


def padurariu_reference(mean: float) -> float:
    """Resolved-counting variance 2 m (8 m^2 + 5 m + 1) at mean m.

    Exact on the zero-detuning ridge at accumulation time
    tau = 1 / (4 pi gamma), where m = x^2 / (2 (1 - x^2)) in units of
    gamma; elsewhere it serves as the matched-mean comparison curve.
    For small m it reduces to 2 m, the pair-emission noise floor.
    """
    if mean < 0.0:
        raise ValueError(f"mean must be >= 0, got {mean}")
    m = float(mean)
    return 2.0 * m * (8.0 * m * m + 5.0 * m + 1.0)


# ---------------------------------------------------------------------------
# Variance-versus-mean dataset
# ---------------------------------------------------------------------------


DEFAULT_SV_XI_GRID = tuple(0.05 * i for i in range(1, 20))


def canonical_tau_list(gamma: float):
    """The four accumulation times of the comparison figure."""
    return (
        1.0 / (4.0 * math.pi * gamma),
        1.0 / (2.0 * math.pi * gamma),
        1.0 / (8.0 * math.pi * gamma),
        1.0 / gamma,
    )


@dataclass(frozen=True)
class FigureSVData:
    """Variance-versus-mean curves on the zero-detuning ridge.

    ``single_mode`` holds (mean, variance) for an ideal narrow centered
    filter at each drive; ``multimode`` maps each accumulation time to
    the resolved-counting (mean, variance) rows on the same drive grid.
    """

    gamma: float
    xi_over_gamma: tuple
    single_mode: tuple
    multimode: dict
    max_quad_err: float

    def as_rows(self):
        """Tidy (scheme, tau_label, xi_over_gamma, mean, variance) rows."""
        rows = []
        for x, (mean, var) in zip(self.xi_over_gamma, self.single_mode):
            rows.append(("single_mode", "", x, mean, var))
        for tau in sorted(self.multimode):
            label = f"{tau:.17g}"
            for x, (mean, var) in zip(self.xi_over_gamma, self.multimode[tau]):
                rows.append(("multimode_limit", label, x, mean, var))
        return rows


def figure_sv_dataset(gamma, tau_list=None, xi_grid=None, spec=None) -> FigureSVData:
    """Counting curves versus drive for the comparison figure.

    ``tau_list`` defaults to the four canonical accumulation times,
    ``xi_grid`` to drives |xi|/gamma from 0.05 to 0.95.  The two flux
    integrals are computed once per drive point and shared across all
    accumulation times, so rows for different tau are exactly consistent
    with each other.
    """
    spec = spec or DEFAULT_QUADRATURE
    if not gamma > 0.0:
        raise ValueError(f"gamma must be > 0, got {gamma}")
    if tau_list is None:
        tau_list = canonical_tau_list(gamma)
    if xi_grid is None:
        xi_grid = DEFAULT_SV_XI_GRID
    single = []
    flux_rows = []
    max_err = 0.0
    for x in xi_grid:
        params = validate_params(ParampParams(gamma=gamma, xi_mag=x * gamma))
        flux, pair_res = _flux_integrals(params, spec)
        flux_rows.append((float(flux.value), float(pair_res.value)))
        max_err = max(max_err, flux.error_estimate, pair_res.error_estimate)
        m0 = float(photon_flux_density(params, 0.0))
        single.append((m0, 2.0 * m0 * (m0 + 1.0)))

    multimode = {}
    for tau in tau_list:
        if not tau > 0.0:
            raise ValueError(f"accumulation time must be > 0, got {tau}")
        rows = [(tau * fl, tau * 2.0 * pr) for fl, pr in flux_rows]
        multimode[float(tau)] = tuple(rows)

    return FigureSVData(
        gamma=float(gamma),
        xi_over_gamma=tuple(float(x) for x in xi_grid),
        single_mode=tuple(single),
        multimode=multimode,
        max_quad_err=max_err,
    )
