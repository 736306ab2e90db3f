"""Brute-force cross-checks of the counting-moment formulas.

Two independent routes compute photocount moments without the I / J
integral formulas:

* ``fock_pair_moments`` builds the two-mode squeezed vacuum
  sum_k (tanh^k eta / cosh eta) |k, k> on a truncated Fock ladder and
  sums the photon-number distribution directly.
* ``wick_moments`` discretizes the filtered output field into bins,
  applies the exact two-mode transformation bin by bin, and evaluates
  <(B^dag B)^k> by enumerating every pair contraction of the 2k-slot
  operator product (the state is Gaussian, so Wick's theorem is exact;
  only the discretization approximates).

Agreement of these with the closed-form moment assembly is the central
correctness evidence for the package.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import _uv_arrays, eta, validate_params
from .detection_single import MomentSet
from .errors import CutoffInsufficient, OrderUnsupported, ParampError
from .filters import FilterSpec, eval_filter

__all__ = [
    "PairState",
    "PairMoments",
    "fock_pair_moments",
    "DiscretizedField",
    "discretize_field",
    "wick_moments",
    "wick_moment_set",
]

# Truncation may leave at most this much probability off the ladder.
_MAX_TAIL_WEIGHT = 1e-12


@dataclass(frozen=True)
class PairState:
    """One squeezed pair: squeezing ``eta`` and a Fock-ladder cutoff."""

    eta: float
    cutoff: int

    def __post_init__(self):
        if self.eta < 0.0:
            raise ValueError(f"eta must be >= 0, got {self.eta}")
        if self.cutoff < 1:
            raise ValueError(f"cutoff must be >= 1, got {self.cutoff}")


@dataclass(frozen=True)
class PairMoments:
    """Moments of one arm and of the total number for a squeezed pair."""

    single_arm: MomentSet
    total: MomentSet


def fock_pair_moments(s: PairState) -> PairMoments:
    """Ladder-sum moments of the two-mode squeezed vacuum.

    The joint number distribution is P(k, k) = (1 - x) x^k with
    x = tanh^2(eta); both arms always agree, so the total number is 2k.
    Sums run over the truncated ladder without renormalization;
    ``CutoffInsufficient`` is raised when the neglected weight x^(K+1)
    exceeds 1e-12.  Analytic values for comparison: single-arm mean
    sinh^2(eta), single-arm variance sinh^2 cosh^2, total-number
    variance 4 sinh^2 cosh^2.
    """
    x = math.tanh(s.eta) ** 2
    tail = x ** (s.cutoff + 1)
    if tail > _MAX_TAIL_WEIGHT:
        raise CutoffInsufficient(
            f"cutoff {s.cutoff} leaves probability {tail:.3e} off the ladder "
            f"at eta = {s.eta} (allowed {_MAX_TAIL_WEIGHT:.0e})"
        )
    k = np.arange(s.cutoff + 1, dtype=float)
    probs = (1.0 - x) * x**k

    def central_moments(values):
        mean = float(values @ probs)
        d = values - mean
        var = float((d * d) @ probs)
        third = float((d * d * d) @ probs)
        return mean, var, third

    mean1, var1, third1 = central_moments(k)
    mean2, var2, third2 = central_moments(2.0 * k)
    components = {"eta": s.eta, "cutoff": s.cutoff, "tail_weight": tail}
    return PairMoments(
        single_arm=MomentSet(
            mean=mean1,
            variance=var1,
            third_central=third1,
            scheme="fock_pair_single_arm",
            components=components,
        ),
        total=MomentSet(
            mean=mean2,
            variance=var2,
            third_central=third2,
            scheme="fock_pair_total",
            components=components,
        ),
    )


@dataclass(frozen=True)
class DiscretizedField:
    """Filtered output field sampled on a symmetric bin grid.

    ``weights`` are the detected-mode amplitudes w_j = h(nu_j) sqrt(delta).
    ``phases`` holds arg v(nu_j); ``phases_c`` additionally holds
    arg u(nu_j), because the anomalous pair correlator of bins (j, -j)
    carries the phase arg u_j + arg v_{-j} -- dropping the u phase
    misestimates the pair term once the coefficients rotate with
    frequency.
    """

    bin_freqs: np.ndarray
    bin_width: float
    weights: np.ndarray
    etas: np.ndarray
    phases: np.ndarray
    phases_c: np.ndarray


def discretize_field(p, f: FilterSpec, bin_width=None, span=None) -> DiscretizedField:
    """Sample filter and spectrum on the default oracle grid.

    Bins sit at nu_j = j * bin_width for j in [-N, N], with
    bin_width = gamma / 200 and N * bin_width >= 20 gamma unless
    overridden.
    """
    params = validate_params(p)
    width = params.gamma / 200.0 if bin_width is None else float(bin_width)
    if not width > 0.0:
        raise ValueError(f"bin width must be > 0, got {width}")
    reach = 20.0 * params.gamma if span is None else float(span)
    n_half = int(math.ceil(reach / width))
    j = np.arange(-n_half, n_half + 1)
    freqs = j * width
    u, v = _uv_arrays(params, freqs)
    return DiscretizedField(
        bin_freqs=freqs,
        bin_width=width,
        weights=eval_filter(f, freqs) * math.sqrt(width),
        etas=eta(params, freqs),
        phases=np.angle(v),
        phases_c=np.angle(u),
    )


def _matchings(slots):
    """All perfect matchings of the given slot indices, as pair lists."""
    if not slots:
        yield []
        return
    first = slots[0]
    for i in range(1, len(slots)):
        rest = slots[1:i] + slots[i + 1 :]
        for sub in _matchings(rest):
            yield [(first, slots[i])] + sub


def wick_moments(d: DiscretizedField, k: int) -> float:
    """Raw k-th moment <(B^dag B)^k> of the discretized detected mode.

    The operator product has 2k slots alternating dagger / plain; each
    pair contraction takes one of three scalar values computed from the
    grid (ordinary, antiordered, anomalous), and the moment is the sum
    over all (2k - 1)!! perfect matchings of the slot list.  k <= 3.
    """
    if k not in (1, 2, 3):
        raise OrderUnsupported(f"moment order must be 1, 2 or 3, got {k}")
    w2 = np.abs(d.weights) ** 2
    sh = np.sinh(d.etas)
    ch = np.cosh(d.etas)
    a_val = float(w2 @ (sh * sh))
    b_val = float(w2 @ (ch * ch))
    pair_phase = np.exp(1j * (d.phases_c + d.phases[::-1]))
    m_val = complex(np.sum(d.weights * d.weights[::-1] * ch * sh[::-1] * pair_phase))

    # Slot types for (B^dag B)^k in product order.
    types = ("d", "a") * k
    table = {
        ("d", "a"): a_val,
        ("a", "d"): b_val,
        ("a", "a"): m_val,
        ("d", "d"): np.conj(m_val),
    }
    total = 0.0 + 0.0j
    for matching in _matchings(list(range(2 * k))):
        term = 1.0 + 0.0j
        for i, j in matching:
            term *= table[(types[i], types[j])]
        total += term
    if abs(total.imag) > 1e-12 * max(1.0, abs(total.real)):
        raise ParampError(
            f"moment came out non-real (imag {total.imag:.3e}); "
            f"contraction bookkeeping is broken"
        )
    return float(total.real)


def wick_moment_set(d: DiscretizedField) -> MomentSet:
    """Mean, variance, third central moment from the raw Wick moments."""
    m1 = wick_moments(d, 1)
    m2 = wick_moments(d, 2)
    m3 = wick_moments(d, 3)
    return MomentSet(
        mean=m1,
        variance=m2 - m1 * m1,
        third_central=m3 - 3.0 * m2 * m1 + 2.0 * m1**3,
        scheme="wick_oracle",
        components={
            "raw_second": m2,
            "raw_third": m3,
            "weight_norm": float(np.sum(np.abs(d.weights) ** 2)),
            "bins": int(d.bin_freqs.size),
            "bin_width": d.bin_width,
        },
    )
