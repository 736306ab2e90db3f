"""Parameter sweeps over drive grids, with CSV / JSON emission.

A sweep evaluates one detection scheme on the outer product of a |xi|
grid and a detuning grid around a base parameter set.  Grid points that
fall outside the stability region are never silently dropped: they are
returned alongside the records with the reason, serialized into JSON
output, and summarized on stderr by the CLI.

Output is deterministic: records are ordered xi-major / delta-minor,
floats are printed with 17 significant digits (enough to round-trip a
double), newlines are always "\\n", and rerunning an identical
configuration reproduces files byte for byte.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import NamedTuple

from .core import ParampParams, validate_params
from .detection_single import MomentSet, moments_single
from .errors import OutOfStabilityRange, OutputIO
from .filters import FilterSpec
from .multimode import (
    ModeGenerator,
    MultimodeConfig,
    canonical_tau_list,
    figure_sv_dataset,
    moments_multimode_finite,
    moments_multimode_limit,
)
from .quadrature import DEFAULT_QUADRATURE, QuadratureSpec

__all__ = [
    "SingleModeScheme",
    "MultimodeLimitScheme",
    "MultimodeFiniteScheme",
    "SweepConfig",
    "SweepRecord",
    "SweepResult",
    "run_sweep",
    "write_csv",
    "write_json",
    "emit_figure_sv",
    "CSV_HEADER",
    "FIGURE_SV_FILES",
]

CSV_HEADER = "scheme,xi,delta,tau,mean,variance,third,fano,quad_err"

# One file per curve; the tau files follow canonical_tau_list order.
FIGURE_SV_FILES = (
    "single_mode.csv",
    "tau_4pi_gamma.csv",
    "tau_2pi_gamma.csv",
    "tau_8pi_gamma.csv",
    "tau_gamma.csv",
)


@dataclass(frozen=True)
class SingleModeScheme:
    """One filtered detection mode; full three-moment statistics."""

    filter: FilterSpec

    label = "single_mode"
    tau = None

    def evaluate(self, p, spec) -> MomentSet:
        return moments_single(p, self.filter, spec)


@dataclass(frozen=True)
class MultimodeLimitScheme:
    """Resolved counting in the dense-comb limit at accumulation tau."""

    tau: float

    label = "multimode_limit"

    def evaluate(self, p, spec) -> MomentSet:
        return moments_multimode_limit(p, self.tau, spec)


@dataclass(frozen=True)
class MultimodeFiniteScheme:
    """Resolved counting at finite mode spacing."""

    generator: ModeGenerator
    tau: float
    mode_cutoff: int | None = None

    label = "multimode_finite"

    def evaluate(self, p, spec) -> MomentSet:
        cfg = MultimodeConfig(self.generator, self.tau, self.mode_cutoff)
        return moments_multimode_finite(p, cfg, spec)


@dataclass(frozen=True)
class SweepConfig:
    """Grids, scheme and output destination for one sweep run."""

    base: ParampParams
    xi_grid: tuple
    delta_grid: tuple
    scheme: SingleModeScheme | MultimodeLimitScheme | MultimodeFiniteScheme
    output_path: str | None = None
    output_format: str = "csv"
    quadrature: QuadratureSpec = DEFAULT_QUADRATURE

    def __post_init__(self):
        if len(self.xi_grid) == 0 or len(self.delta_grid) == 0:
            raise ValueError("xi_grid and delta_grid must be non-empty")
        if self.output_format not in ("csv", "json"):
            raise ValueError(
                f"output format must be csv or json, got {self.output_format!r}"
            )


@dataclass(frozen=True)
class SweepRecord:
    """One grid point's results; None marks fields a scheme lacks."""

    scheme: str
    xi: float
    delta: float
    tau: float | None
    mean: float
    variance: float
    third: float | None
    fano: float | None
    quad_err: float


class SweepResult(NamedTuple):
    records: list
    skipped: list


def run_sweep(cfg: SweepConfig) -> SweepResult:
    """Evaluate the scheme on every stable grid point.

    Returns (records, skipped): one record per valid point in xi-major,
    delta-minor order, and one (xi, delta, reason) triple per point
    rejected by parameter validation.
    """
    records = []
    skipped = []
    for xi in cfg.xi_grid:
        for delta in cfg.delta_grid:
            raw = ParampParams(
                gamma=cfg.base.gamma,
                xi_mag=float(xi),
                xi_arg=cfg.base.xi_arg,
                delta=float(delta),
                nu0=cfg.base.nu0,
            )
            try:
                params = validate_params(raw)
            except OutOfStabilityRange as exc:
                skipped.append((float(xi), float(delta), str(exc)))
                continue
            ms = cfg.scheme.evaluate(params, cfg.quadrature)
            fano = ms.variance / ms.mean if ms.mean > 0.0 else None
            records.append(
                SweepRecord(
                    scheme=ms.scheme,
                    xi=float(xi),
                    delta=float(delta),
                    tau=cfg.scheme.tau,
                    mean=ms.mean,
                    variance=ms.variance,
                    third=ms.third_central,
                    fano=fano,
                    quad_err=float(ms.components.get("quad_err", 0.0)),
                )
            )
    return SweepResult(records, skipped)


def _fmt(value) -> str:
    return "" if value is None else format(float(value), ".17g")


def record_row(rec: SweepRecord) -> str:
    return ",".join(
        [
            rec.scheme,
            _fmt(rec.xi),
            _fmt(rec.delta),
            _fmt(rec.tau),
            _fmt(rec.mean),
            _fmt(rec.variance),
            _fmt(rec.third),
            _fmt(rec.fano),
            _fmt(rec.quad_err),
        ]
    )


def write_csv(records, path) -> None:
    """Write sweep records with the fixed header; "\\n" line endings."""
    lines = [CSV_HEADER]
    lines += [record_row(r) for r in records]
    _write_text(path, "\n".join(lines) + "\n")


def _config_echo(cfg: SweepConfig) -> dict:
    scheme: dict = {"label": cfg.scheme.label}
    if isinstance(cfg.scheme, SingleModeScheme):
        f = cfg.scheme.filter
        scheme["filter"] = {"shape": f.shape, "width": f.width, "center": f.center}
    elif isinstance(cfg.scheme, MultimodeLimitScheme):
        scheme["tau"] = cfg.scheme.tau
    else:
        scheme["tau"] = cfg.scheme.tau
        scheme["generator"] = {
            "kind": cfg.scheme.generator.kind,
            "delta": cfg.scheme.generator.delta,
        }
        scheme["mode_cutoff"] = cfg.scheme.mode_cutoff
    return {
        "gamma": cfg.base.gamma,
        "xi_arg": cfg.base.xi_arg,
        "nu0": cfg.base.nu0,
        "xi_grid": list(cfg.xi_grid),
        "delta_grid": list(cfg.delta_grid),
        "scheme": scheme,
        "quadrature": {
            "rel_tol": cfg.quadrature.rel_tol,
            "abs_tol": cfg.quadrature.abs_tol,
            "max_subdivisions": cfg.quadrature.max_subdivisions,
        },
    }


def write_json(cfg: SweepConfig, result: SweepResult, path) -> None:
    """Config echo plus records; field names match the CSV header."""
    payload = {
        "config": _config_echo(cfg),
        "records": [
            {
                "scheme": r.scheme,
                "xi": r.xi,
                "delta": r.delta,
                "tau": r.tau,
                "mean": r.mean,
                "variance": r.variance,
                "third": r.third,
                "fano": r.fano,
                "quad_err": r.quad_err,
            }
            for r in result.records
        ],
        "skipped": [
            {"xi": xi, "delta": delta, "reason": reason}
            for xi, delta, reason in result.skipped
        ],
    }
    _write_text(path, json.dumps(payload, indent=2, sort_keys=True) + "\n")


def _write_text(path, text: str) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise OutputIO(f"cannot write {path}: {exc}") from exc


def emit_figure_sv(outdir, gamma: float = 1.0, xi_grid=None, spec=None):
    """Write the five variance-versus-mean curve files into ``outdir``.

    One file per curve (single-mode reference plus the four canonical
    accumulation times), each with header ``xi_over_gamma,mean,variance``.
    Returns the written paths in FIGURE_SV_FILES order.
    """
    taus = canonical_tau_list(gamma)
    data = figure_sv_dataset(gamma, taus, xi_grid, spec)
    out = Path(outdir)
    try:
        out.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise OutputIO(f"cannot create {out}: {exc}") from exc

    def curve_text(rows):
        lines = ["xi_over_gamma,mean,variance"]
        for x, (mean, var) in zip(data.xi_over_gamma, rows):
            lines.append(f"{_fmt(x)},{_fmt(mean)},{_fmt(var)}")
        return "\n".join(lines) + "\n"

    paths = []
    all_rows = [data.single_mode] + [data.multimode[tau] for tau in taus]
    for name, rows in zip(FIGURE_SV_FILES, all_rows):
        target = out / name
        _write_text(target, curve_text(rows))
        paths.append(target)
    return paths
