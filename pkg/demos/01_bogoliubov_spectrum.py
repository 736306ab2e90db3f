"""Scattering coefficients of the driven cavity, point by point.

Walks the output-line Bogoliubov coefficients u, v across the
sideband frequency axis, checks |u|^2 - |v|^2 = 1 at every point,
and plots the emission spectrum n(nu) = |v|^2 together with the
squeezing parameter eta(nu) and the two scattering phases.

Run:  python3 demos/01_bogoliubov_spectrum.py
Writes bogoliubov_spectrum.png next to this script.
"""

import pathlib

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from parampstats import (
    ParampParams,
    bogoliubov_coefficients,
    eta,
    photon_flux_density,
    phases,
    spectral_peaks,
    validate_params,
)

HERE = pathlib.Path(__file__).parent

# gamma sets the frequency unit throughout; stay on the zero-detuning
# ridge where every spectral quantity has a closed form to compare to
p = validate_params(ParampParams(gamma=1.0, xi_mag=0.5, xi_arg=0.0, delta=0.0))

nu = np.linspace(-6.0, 6.0, 1201)

# ---------------------------------------------------------------------------
# pointwise coefficients and the hyperbolic identity
# ---------------------------------------------------------------------------

c0 = bogoliubov_coefficients(p, 0.0)
print("at band center:")
print(f"  u = {c0.u:.6f}   |u| = {abs(c0.u):.6f}  (5/3 = {5 / 3:.6f})")
print(f"  v = {c0.v:.6f}   |v| = {abs(c0.v):.6f}  (4/3 = {4 / 3:.6f})")
print(f"  | |u|^2 - |v|^2 - 1 | = {c0.unitarity_defect():.3e}")

defect = max(
    bogoliubov_coefficients(p, float(v)).unitarity_defect() for v in nu
)
print(f"worst unitarity defect over {nu.size} frequencies: {defect:.3e}")

# ---------------------------------------------------------------------------
# spectrum, squeezing parameter, phases
# ---------------------------------------------------------------------------

flux = photon_flux_density(p, nu)
eta_curve = eta(p, nu)
phase_pairs = [phases(p, float(v)) for v in nu]
phi_c = np.array([ph[0] for ph in phase_pairs])
phi_s = np.array([ph[1] for ph in phase_pairs])

x = p.xi_mag / p.gamma
print(f"n(0) = {flux[nu.size // 2]:.6f}   closed form 4x^2/(1-x^2)^2 = "
      f"{4 * x**2 / (1 - x**2) ** 2:.6f}")
print(f"eta(0) = {eta_curve[nu.size // 2]:.6f}   2 artanh(x) = "
      f"{2 * np.arctanh(x):.6f}")

locs, width = spectral_peaks(p)
print(f"emission peaks at nu = {locs}, width scale {width:.4f}")

# detuning splits the single ridge peak into a sideband doublet
p_split = validate_params(ParampParams(gamma=1.0, xi_mag=0.5, delta=3.0))
locs_split, _ = spectral_peaks(p_split)
print(f"with delta = 3 the peaks sit at nu = "
      f"({locs_split[0]:+.4f}, {locs_split[1]:+.4f}), "
      f"expected +-sqrt(7.75) = +-{np.sqrt(7.75):.4f}")

fig, axes = plt.subplots(3, 1, figsize=(7.0, 8.0), sharex=True)

axes[0].plot(nu, flux, label=r"$n(\nu) = |v|^2$")
axes[0].plot(nu, photon_flux_density(p_split, nu), "--",
             label=r"$n(\nu)$, $\delta = 3\Gamma$")
axes[0].set_ylabel("photon flux density")
axes[0].legend()

axes[1].plot(nu, eta_curve)
axes[1].set_ylabel(r"squeezing $\eta(\nu)$")

axes[2].plot(nu, phi_c, label=r"$\varphi_c$")
axes[2].plot(nu, phi_s, label=r"$\varphi_s$")
axes[2].set_ylabel("scattering phases (rad)")
axes[2].set_xlabel(r"sideband frequency $\nu / \Gamma$")
axes[2].legend()

fig.tight_layout()
out = HERE / "bogoliubov_spectrum.png"
fig.savefig(out, dpi=120)
print(f"wrote {out}")
