"""Command-line front-end.

Subcommands:

* ``coeffs``     output-coefficient values at one frequency
* ``spectrum``   tabulate eta, n and phases over a frequency grid
* ``moments``    one-shot photocount moments for a detection scheme
* ``sweep``      grid sweep driven by a config file and/or flags
* ``figure-sv``  regenerate the variance-versus-mean curve files
* ``verify``     run the oracle cross-check battery

Exit codes: 0 success, 1 configuration error, 2 numerical failure,
3 output I/O error.
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

import numpy as np

from .core import (
    ParampParams,
    bogoliubov_coefficients,
    eta,
    phases,
    photon_flux_density,
    spectral_point,
    validate_params,
)
from .detection_single import (
    integral_I1,
    integral_I2,
    integral_I3,
    moments_single,
    moments_wideband,
)
from .errors import (
    ConfigParse,
    CutoffInsufficient,
    NonFiniteIntegrand,
    OutputIO,
    ParampError,
    TailNotConverged,
    ToleranceNotMet,
)
from .filters import FILTER_SHAPES, FilterSpec
from .multimode import (
    GENERATOR_KINDS,
    ModeGenerator,
    MultimodeConfig,
    limit_rates,
    moments_multimode_finite,
    moments_multimode_limit,
    padurariu_reference,
)
from .oracle import PairState, discretize_field, fock_pair_moments, wick_moments
from .quadrature import DEFAULT_QUADRATURE, QuadratureSpec, integrate_even
from .sweep import (
    MultimodeFiniteScheme,
    MultimodeLimitScheme,
    SingleModeScheme,
    SweepConfig,
    emit_figure_sv,
    run_sweep,
    write_csv,
    write_json,
)

__all__ = ["main", "entry", "build_parser"]

_SCHEMES = ("single", "wideband", "multimode-limit", "multimode-finite")


def _fmt(value) -> str:
    return format(float(value), ".17g")


class _Parser(argparse.ArgumentParser):
    """argparse that reports usage problems as ConfigParse (exit 1)."""

    def error(self, message):
        raise ConfigParse(message)


def _add_param_flags(p: argparse.ArgumentParser):
    p.add_argument("--gamma", type=float, default=1.0, help="cavity linewidth")
    p.add_argument("--xi", type=float, required=True, help="drive magnitude |xi|")
    p.add_argument("--xi-arg", type=float, default=0.0, help="drive phase arg(xi)")
    p.add_argument("--delta", type=float, default=0.0, help="detuning")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="parampstats", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeffs", help="output coefficients at one frequency")
    _add_param_flags(p)
    p.add_argument("--nu", type=float, default=0.0, help="frequency offset")
    p.set_defaults(func=_cmd_coeffs)

    p = sub.add_parser("spectrum", help="tabulate the output spectrum")
    _add_param_flags(p)
    p.add_argument("--nu-min", type=float, default=None)
    p.add_argument("--nu-max", type=float, default=None)
    p.add_argument("--points", type=int, default=201)
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser("moments", help="photocount moments for one scheme")
    _add_param_flags(p)
    p.add_argument("--scheme", choices=_SCHEMES, default="single")
    p.add_argument("--filter-shape", choices=FILTER_SHAPES, default="rectangular")
    p.add_argument("--filter-width", type=float, default=None)
    p.add_argument("--filter-center", type=float, default=0.0)
    p.add_argument("--nu0", type=float, default=None, help="carrier (wideband)")
    p.add_argument("--tau", type=float, default=None, help="accumulation time")
    p.add_argument("--generator", choices=GENERATOR_KINDS, default="window")
    p.add_argument("--mode-spacing", type=float, default=None)
    p.add_argument("--mode-cutoff", type=int, default=None)
    p.set_defaults(func=_cmd_moments)

    p = sub.add_parser("sweep", help="run a grid sweep")
    p.add_argument("--config", type=str, default=None, help="key=value file")
    p.add_argument("--gamma", type=float, default=None)
    p.add_argument("--xi-arg", type=float, default=None)
    p.add_argument("--xi-grid", type=str, default=None, help="a,b,c or a:b:n")
    p.add_argument("--delta-grid", type=str, default=None, help="a,b,c or a:b:n")
    p.add_argument("--scheme", type=str, default=None,
                   choices=("single_mode", "multimode_limit", "multimode_finite"))
    p.add_argument("--filter-shape", type=str, default=None, choices=FILTER_SHAPES)
    p.add_argument("--filter-width", type=float, default=None)
    p.add_argument("--filter-center", type=float, default=None)
    p.add_argument("--tau", type=float, default=None)
    p.add_argument("--generator", type=str, default=None, choices=GENERATOR_KINDS)
    p.add_argument("--mode-spacing", type=float, default=None)
    p.add_argument("--mode-cutoff", type=int, default=None)
    p.add_argument("--output", type=str, default=None)
    p.add_argument("--format", type=str, default=None, choices=("csv", "json"))
    p.add_argument("--rel-tol", type=float, default=None)
    p.add_argument("--abs-tol", type=float, default=None)
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("figure-sv", help="emit variance-versus-mean curves")
    p.add_argument("--outdir", type=str, default="figure_sv")
    p.add_argument("--gamma", type=float, default=1.0)
    p.set_defaults(func=_cmd_figure_sv)

    p = sub.add_parser("verify", help="oracle cross-check battery")
    p.set_defaults(func=_cmd_verify)

    return parser


def _params_from_args(args) -> ParampParams:
    return ParampParams(
        gamma=args.gamma, xi_mag=args.xi, xi_arg=args.xi_arg, delta=args.delta
    )


def _cmd_coeffs(args) -> int:
    p = validate_params(_params_from_args(args))
    c = bogoliubov_coefficients(p, args.nu)
    e = float(eta(p, args.nu))
    phi_c, phi_s = phases(p, args.nu)
    rows = [
        ("u_real", c.u.real),
        ("u_imag", c.u.imag),
        ("u_abs", abs(c.u)),
        ("v_real", c.v.real),
        ("v_imag", c.v.imag),
        ("v_abs", abs(c.v)),
        ("eta", e),
        ("n", math.sinh(e) ** 2),
        ("phi_c", phi_c),
        ("phi_s", phi_s),
        ("unitarity_defect", c.unitarity_defect()),
    ]
    for key, value in rows:
        print(f"{key}={_fmt(value)}")
    return 0


def _cmd_spectrum(args) -> int:
    p = validate_params(_params_from_args(args))
    lo = -5.0 * p.gamma if args.nu_min is None else args.nu_min
    hi = 5.0 * p.gamma if args.nu_max is None else args.nu_max
    if args.points < 2 or not hi > lo:
        raise ConfigParse("spectrum needs nu-max > nu-min and points >= 2")
    print("nu,eta,n,phi_c,phi_s")
    for nu in np.linspace(lo, hi, args.points):
        pt = spectral_point(p, float(nu))
        print(
            f"{_fmt(pt.nu)},{_fmt(pt.eta)},{_fmt(pt.n)},"
            f"{_fmt(pt.phi_c)},{_fmt(pt.phi_s)}"
        )
    return 0


def _filter_from_args(args, gamma) -> FilterSpec:
    width = args.filter_width
    if width is None:
        raise ConfigParse("--filter-width is required for this scheme")
    return FilterSpec(args.filter_shape, width, args.filter_center)


def _print_moment_set(ms) -> None:
    print(f"scheme={ms.scheme}")
    print(f"mean={_fmt(ms.mean)}")
    print(f"variance={_fmt(ms.variance)}")
    if ms.third_central is not None:
        print(f"third_central={_fmt(ms.third_central)}")
    if ms.mean > 0.0:
        print(f"fano={_fmt(ms.variance / ms.mean)}")
    for key in ("I1", "I2", "I3", "norm_squared", "scale_sqrt_nu0",
                "counted_mean", "counted_variance", "quad_err"):
        if key in ms.components:
            print(f"{key}={_fmt(ms.components[key])}")
    if ms.components.get("third_is_extrapolated"):
        print("third_is_extrapolated=true")


def _cmd_moments(args) -> int:
    p = validate_params(_params_from_args(args))
    if args.scheme == "single":
        ms = moments_single(p, _filter_from_args(args, p.gamma))
    elif args.scheme == "wideband":
        if args.nu0 is None:
            raise ConfigParse("--nu0 is required for the wideband scheme")
        ms = moments_wideband(p, _filter_from_args(args, p.gamma), args.nu0)
    elif args.scheme == "multimode-limit":
        if args.tau is None:
            raise ConfigParse("--tau is required for multimode schemes")
        ms = moments_multimode_limit(p, args.tau)
    else:
        if args.tau is None:
            raise ConfigParse("--tau is required for multimode schemes")
        spacing = p.gamma / 10.0 if args.mode_spacing is None else args.mode_spacing
        cfg = MultimodeConfig(
            ModeGenerator(args.generator, spacing), args.tau, args.mode_cutoff
        )
        ms = moments_multimode_finite(p, cfg)
    _print_moment_set(ms)
    return 0


# ---------------------------------------------------------------------------
# sweep
# ---------------------------------------------------------------------------


def _parse_config_file(path) -> dict:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigParse(f"cannot read config file {path}: {exc}") from exc
    data = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ConfigParse(f"{path}:{lineno}: expected key=value, got {line!r}")
        key, value = line.split("=", 1)
        data[key.strip()] = value.strip()
    return data


def _parse_grid(text, what) -> tuple:
    s = str(text).strip()
    try:
        if ":" in s:
            lo_s, hi_s, n_s = s.split(":")
            n = int(n_s)
            if n < 1:
                raise ValueError("grid needs at least one point")
            return tuple(float(v) for v in np.linspace(float(lo_s), float(hi_s), n))
        values = tuple(float(tok) for tok in s.split(",") if tok.strip())
        if not values:
            raise ValueError("empty grid")
        return values
    except ValueError as exc:
        raise ConfigParse(f"bad {what} {text!r}: {exc}") from exc


_FLAG_KEYS = (
    "gamma", "xi_arg", "xi_grid", "delta_grid", "scheme", "filter_shape",
    "filter_width", "filter_center", "tau", "generator", "mode_spacing",
    "mode_cutoff", "output", "format", "rel_tol", "abs_tol",
)


def _build_sweep_config(args) -> SweepConfig:
    raw = _parse_config_file(args.config) if args.config else {}
    for key in _FLAG_KEYS:
        value = getattr(args, key)
        if value is not None:
            raw[key] = value

    def take(key, default=None, cast=float):
        if key not in raw:
            return default
        try:
            return cast(raw[key])
        except (TypeError, ValueError) as exc:
            raise ConfigParse(f"bad value for {key}: {raw[key]!r}") from exc

    gamma = take("gamma", 1.0)
    base = ParampParams(
        gamma=gamma,
        xi_mag=0.0,
        xi_arg=take("xi_arg", 0.0),
        nu0=take("nu0"),
    )
    if "xi_grid" not in raw:
        raise ConfigParse("xi_grid is required (flag --xi-grid or config key)")
    xi_grid = _parse_grid(raw["xi_grid"], "xi_grid")
    delta_grid = (
        _parse_grid(raw["delta_grid"], "delta_grid") if "delta_grid" in raw else (0.0,)
    )

    scheme_name = str(raw.get("scheme", "single_mode"))
    if scheme_name == "single_mode":
        shape = str(raw.get("filter_shape", "rectangular"))
        width = take("filter_width")
        if width is None:
            raise ConfigParse("filter_width is required for single_mode sweeps")
        try:
            filt = FilterSpec(shape, width, take("filter_center", 0.0))
        except ValueError as exc:
            raise ConfigParse(str(exc)) from exc
        scheme = SingleModeScheme(filt)
    elif scheme_name in ("multimode_limit", "multimode_finite"):
        tau = take("tau")
        if tau is None:
            raise ConfigParse("tau is required for multimode sweeps")
        if scheme_name == "multimode_limit":
            scheme = MultimodeLimitScheme(tau)
        else:
            spacing = take("mode_spacing", gamma / 10.0)
            try:
                gen = ModeGenerator(str(raw.get("generator", "window")), spacing)
            except ValueError as exc:
                raise ConfigParse(str(exc)) from exc
            scheme = MultimodeFiniteScheme(gen, tau, take("mode_cutoff", None, int))
    else:
        raise ConfigParse(f"unknown scheme {scheme_name!r}")

    output = raw.get("output")
    if output is None:
        raise ConfigParse("output path is required (flag --output or config key)")
    fmt = str(raw.get("format", "csv"))
    quad = QuadratureSpec(
        rel_tol=take("rel_tol", DEFAULT_QUADRATURE.rel_tol),
        abs_tol=take("abs_tol", DEFAULT_QUADRATURE.abs_tol),
        max_subdivisions=take(
            "max_subdivisions", DEFAULT_QUADRATURE.max_subdivisions, int
        ),
    )
    try:
        return SweepConfig(
            base=base,
            xi_grid=xi_grid,
            delta_grid=delta_grid,
            scheme=scheme,
            output_path=str(output),
            output_format=fmt,
            quadrature=quad,
        )
    except ValueError as exc:
        raise ConfigParse(str(exc)) from exc


def _cmd_sweep(args) -> int:
    cfg = _build_sweep_config(args)
    result = run_sweep(cfg)
    if cfg.output_format == "json":
        write_json(cfg, result, cfg.output_path)
    else:
        write_csv(result.records, cfg.output_path)
    for xi, delta, reason in result.skipped:
        print(f"skipped xi={_fmt(xi)} delta={_fmt(delta)}: {reason}", file=sys.stderr)
    print(
        f"wrote {len(result.records)} records"
        f" ({len(result.skipped)} skipped) to {cfg.output_path}"
    )
    return 0


def _cmd_figure_sv(args) -> int:
    paths = emit_figure_sv(args.outdir, gamma=args.gamma)
    for path in paths:
        print(path)
    return 0


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def _check(name, dev, bound):
    ok = dev <= bound
    status = "PASS" if ok else "FAIL"
    print(f"{status} {name}: deviation {dev:.3e} (bound {bound:.0e})")
    return ok


def _cmd_verify(args) -> int:
    ok = True
    rng = np.random.default_rng(20240811)
    n_tuples = 2000
    gammas = 10.0 ** rng.uniform(-1.0, 1.0, n_tuples)
    deltas = rng.uniform(-3.0, 3.0, n_tuples) * gammas
    ratios = rng.uniform(0.01, 0.95, n_tuples)
    xis = ratios * np.hypot(gammas, deltas)
    nus = rng.uniform(-10.0, 10.0, n_tuples) * gammas

    defect = 0.0
    eta_dev = 0.0
    for g, x, d, nu in zip(gammas, xis, deltas, nus):
        p = validate_params(ParampParams(gamma=g, xi_mag=x, delta=d))
        c = bogoliubov_coefficients(p, nu)
        defect = max(defect, c.unitarity_defect())
        e = float(eta(p, nu))
        eta_dev = max(eta_dev, abs(math.sinh(e) - abs(c.v)) / abs(c.v))
    ok &= _check("bogoliubov_unitarity", defect, 1e-12)
    ok &= _check("eta_matches_v", eta_dev, 1e-12)

    ridge = validate_params(ParampParams(gamma=1.0, xi_mag=0.5))
    flux = integrate_even(lambda nu: photon_flux_density(ridge, nu), scale=1.0)
    flux_ref = 2.0 * math.pi * 0.25 / 0.75
    ok &= _check(
        "flux_integral_residue", abs(flux.value - flux_ref) / flux_ref, 1e-9
    )
    sq = integrate_even(lambda nu: photon_flux_density(ridge, nu) ** 2, scale=1.0)
    sq_ref = math.pi * 0.5**4 * (5.0 - 0.25) / (1.0 - 0.25) ** 3
    ok &= _check(
        "flux_squared_partial_fractions", abs(sq.value - sq_ref) / sq_ref, 1e-9
    )

    pair = fock_pair_moments(PairState(eta=math.log(3.0), cutoff=80))
    sh2 = math.sinh(math.log(3.0)) ** 2
    ch2 = math.cosh(math.log(3.0)) ** 2
    fock_dev = max(
        abs(pair.single_arm.mean - sh2) / sh2,
        abs(pair.single_arm.variance - sh2 * ch2) / (sh2 * ch2),
        abs(pair.total.variance - 4.0 * sh2 * ch2) / (4.0 * sh2 * ch2),
    )
    ok &= _check("fock_ladder_vs_closed_form", fock_dev, 1e-10)

    aligned = FilterSpec("rectangular", 199.0 * ridge.gamma / 200.0)
    field = discretize_field(ridge, aligned)
    i1 = integral_I1(ridge, aligned)
    i2 = integral_I2(ridge, aligned)
    i3 = integral_I3(ridge, aligned)
    m1 = wick_moments(field, 1)
    m2 = wick_moments(field, 2)
    wick_dev = max(
        abs(m1 - i1) / i1,
        abs(m2 - (i1 * i2 + i3 + i1 * i1)) / (i1 * i2 + i3 + i1 * i1),
    )
    ok &= _check("wick_grid_vs_integrals", wick_dev, 1e-4)

    tau = 1.0 / (4.0 * math.pi)
    mean_rate, variance_rate = limit_rates(ridge, tau)
    cubic = padurariu_reference(mean_rate)
    ok &= _check(
        "resolved_counting_cubic", abs(variance_rate - cubic) / cubic, 1e-8
    )

    print("verify: all checks passed" if ok else "verify: FAILURES present")
    return 0 if ok else 2


# ---------------------------------------------------------------------------
# entry
# ---------------------------------------------------------------------------


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except ConfigParse as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ToleranceNotMet, TailNotConverged, NonFiniteIntegrand,
            CutoffInsufficient) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 2
    except OutputIO as exc:
        print(f"output error: {exc}", file=sys.stderr)
        return 3
    except ParampError as exc:
        # Remaining package errors mark invalid user parameters.
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"output error: {exc}", file=sys.stderr)
        return 3


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
