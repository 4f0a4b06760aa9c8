"""Tour of the dispersion layer: index curves, mismatch map, calibration.

Walks through the ingredients of the gate one by one: the temperature
dependent extraordinary index of congruent LiNbO3, the group indices that
decide the phasematching ridge orientation, the quasi-phasematched
mismatch over the operating window, and the two waveguide calibration
constants that pin the simulator to the 1550 nm -> 557 nm operating point.

Run:  python demos/dispersion_tour.py
Writes PNGs next to this script under output/ when matplotlib is present.
"""

from pathlib import Path

import numpy as np

import qpg

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

# 1. material dispersion ------------------------------------------------------

lams = np.linspace(0.45, 1.9, 400)
n_cold = qpg.refractive_index(lams, 24.5)
n_hot = qpg.refractive_index(lams, 175.0)
print("n_e(1.55 um): 24.5 C ->", round(qpg.refractive_index(1.55, 24.5), 6),
      "  175 C ->", round(qpg.refractive_index(1.55, 175.0), 6))

ng = qpg.group_index(lams, 175.0)
ng_in = qpg.group_index(1.55, 175.0)
ng_gate = qpg.group_index(0.87, 175.0)
print(f"group indices at 175 C: n_g(1550 nm) = {ng_in:.4f}, n_g(870 nm) = {ng_gate:.4f}")
print("  bulk mismatch", round(ng_gate - ng_in, 4),
      "-> ridge would tilt; the group calibration removes it")

# 2. calibration at the reference operating point ------------------------------

bare = qpg.PhasematchingSpec(length=50e-3, poling_period=4.2e-6, temperature=175.0)
offset = qpg.calibrate_offset(1550.0, 870.0, bare)
group = qpg.calibrate_group_offset(1550.0, 870.0, bare)
grating = bare.grating_wavenumber
print(f"delta-k offset = {offset:.4e} rad/m ({offset / grating:.1%} of 2 pi / Lambda)")
print(f"group offset   = {group:.4e} s/m")

spec = qpg.calibrated_spec(bare, 1550.0, 870.0)
print("ridge angle, offset-only:",
      round(qpg.ridge_angle_deg(1550.0, 870.0,
            qpg.calibrated_spec(bare, 1550.0, 870.0, match_group_velocity=False)), 2),
      "deg;  with group matching:",
      round(qpg.ridge_angle_deg(1550.0, 870.0, spec), 6), "deg")

# 3. phasematching acceptance --------------------------------------------------

dk = np.linspace(-600.0, 600.0, 2001)
phi = qpg.phasematching_amplitude(dk, spec.length)
fwhm = 2 * 2.7831 / spec.length
print(f"sinc^2 acceptance FWHM = {fwhm:.1f} rad/m for L = {spec.length * 1e3:.0f} mm")

# 4. mismatch over the operating window ---------------------------------------

sigma = qpg.fwhm_to_sigma(qpg.wavelength_fwhm_to_omega_fwhm(0.635, 870.0))
w_in = qpg.wavelength_to_omega(1550.0) + np.linspace(-8, 8, 200) * sigma
w_out = qpg.wavelength_to_omega(557.2314049586777) + np.linspace(-2, 2, 200) * sigma
mismatch = qpg.phase_mismatch(w_in[:, None], w_out[None, :], spec)
print("mismatch at window corners [rad/m]:",
      np.round([mismatch[0, 0], mismatch[-1, -1]], 1))

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    print("matplotlib not installed; skipping plots")
else:
    fig, axes = plt.subplots(1, 3, figsize=(13, 3.6))
    axes[0].plot(lams, n_cold, label="24.5 C")
    axes[0].plot(lams, n_hot, label="175 C")
    axes[0].set_xlabel("wavelength (um)")
    axes[0].set_ylabel("n_e")
    axes[0].legend()
    axes[1].plot(dk, np.abs(phi) ** 2)
    axes[1].set_xlabel("delta k (rad/m)")
    axes[1].set_ylabel("|Phi|^2")
    im = axes[2].pcolormesh((w_in - w_in.mean()) / sigma, (w_out - w_out.mean()) / sigma,
                            np.abs(np.sinc(mismatch.T * spec.length / 2 / np.pi)) ** 2,
                            shading="auto")
    axes[2].set_xlabel("input detuning (sigma)")
    axes[2].set_ylabel("output detuning (sigma)")
    fig.colorbar(im, ax=axes[2], label="|Phi|^2")
    fig.tight_layout()
    fig.savefig(OUT / "dispersion_tour.png", dpi=150)
    print("wrote", OUT / "dispersion_tour.png")
