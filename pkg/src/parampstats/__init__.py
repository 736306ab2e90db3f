"""Photocount statistics of a degenerate parametric amplifier.

The package models the two-mode squeezed output of a driven cavity and
computes counting moments (mean, variance, third central moment, Fano
factor) for single-mode filtered detection, wideband voltage-based
detection, and frequency-resolved multimode counting, together with two
independent small-system oracles used to cross-check the integral
pipeline.
"""

from .core import (
    BogoliubovCoefficients,
    ParampParams,
    SpectralPoint,
    ValidatedParams,
    bare_cavity_output_phase,
    bogoliubov_coefficients,
    eta,
    intracavity_coefficients,
    phases,
    photon_flux_density,
    pump_detuning,
    spectral_peaks,
    spectral_point,
    validate_params,
)
from .detection_single import (
    EffectiveFilter,
    MomentSet,
    integral_I1,
    integral_I2,
    integral_I3,
    moments_single,
    moments_wideband,
    squeezed_vacuum_reference,
    wideband_effective_filter,
)
from .errors import (
    ConfigParse,
    CutoffInsufficient,
    FilterExceedsBand,
    NonFiniteIntegrand,
    NonPositiveCoupling,
    NonPositivePower,
    OrderUnsupported,
    OutOfStabilityRange,
    OutputIO,
    ParampError,
    TailNotConverged,
    ToleranceNotMet,
    ZeroMean,
)
from .filters import (
    FILTER_SHAPES,
    FilterSpec,
    eval_filter,
    experiment_bandpass,
    filter_norm_squared,
    filter_support,
    integration_window,
)
from .multimode import (
    DEFAULT_SV_XI_GRID,
    GENERATOR_KINDS,
    FigureSVData,
    LimitRates,
    ModeGenerator,
    MultimodeConfig,
    canonical_tau_list,
    eval_generator,
    fano_factor,
    figure_sv_dataset,
    integral_J,
    limit_rates,
    mode_overlap,
    moments_multimode_finite,
    moments_multimode_limit,
    padurariu_reference,
    universal_F,
)
from .oracle import (
    DiscretizedField,
    PairMoments,
    PairState,
    discretize_field,
    fock_pair_moments,
    wick_moment_set,
    wick_moments,
)
from .quadrature import (
    DEFAULT_QUADRATURE,
    QuadratureResult,
    QuadratureSpec,
    integrate,
    integrate_even,
    integrate_interval,
)
from .sweep import (
    CSV_HEADER,
    FIGURE_SV_FILES,
    MultimodeFiniteScheme,
    MultimodeLimitScheme,
    SingleModeScheme,
    SweepConfig,
    SweepRecord,
    SweepResult,
    emit_figure_sv,
    run_sweep,
    write_csv,
    write_json,
)

__version__ = "0.1.0"

__all__ = [
    "BogoliubovCoefficients",
    "CSV_HEADER",
    "ConfigParse",
    "CutoffInsufficient",
    "DEFAULT_QUADRATURE",
    "DEFAULT_SV_XI_GRID",
    "DiscretizedField",
    "EffectiveFilter",
    "FigureSVData",
    "FILTER_SHAPES",
    "FIGURE_SV_FILES",
    "FilterExceedsBand",
    "FilterSpec",
    "GENERATOR_KINDS",
    "LimitRates",
    "ModeGenerator",
    "MomentSet",
    "MultimodeConfig",
    "MultimodeFiniteScheme",
    "MultimodeLimitScheme",
    "NonFiniteIntegrand",
    "NonPositiveCoupling",
    "NonPositivePower",
    "OrderUnsupported",
    "OutOfStabilityRange",
    "OutputIO",
    "PairMoments",
    "PairState",
    "ParampError",
    "ParampParams",
    "QuadratureResult",
    "QuadratureSpec",
    "SingleModeScheme",
    "SpectralPoint",
    "SweepConfig",
    "SweepRecord",
    "SweepResult",
    "TailNotConverged",
    "ToleranceNotMet",
    "ValidatedParams",
    "ZeroMean",
    "bare_cavity_output_phase",
    "bogoliubov_coefficients",
    "canonical_tau_list",
    "discretize_field",
    "emit_figure_sv",
    "eta",
    "eval_filter",
    "eval_generator",
    "experiment_bandpass",
    "fano_factor",
    "figure_sv_dataset",
    "filter_norm_squared",
    "filter_support",
    "fock_pair_moments",
    "integral_I1",
    "integral_I2",
    "integral_I3",
    "integral_J",
    "integrate",
    "integrate_even",
    "integrate_interval",
    "integration_window",
    "intracavity_coefficients",
    "limit_rates",
    "mode_overlap",
    "moments_multimode_finite",
    "moments_multimode_limit",
    "moments_single",
    "moments_wideband",
    "padurariu_reference",
    "phases",
    "photon_flux_density",
    "pump_detuning",
    "run_sweep",
    "spectral_peaks",
    "spectral_point",
    "squeezed_vacuum_reference",
    "universal_F",
    "validate_params",
    "wick_moment_set",
    "wick_moments",
    "wideband_effective_filter",
    "write_csv",
    "write_json",
]
