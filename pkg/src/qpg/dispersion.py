"""Material dispersion and quasi-phasematching for the SFG stage.

The refractive index model is the temperature-dependent Sellmeier series
for the extraordinary index of congruent lithium niobate from
D. H. Jundt, "Temperature-dependent Sellmeier equation for the index of
refraction n_e in congruent lithium niobate", Opt. Lett. 22, 1553 (1997):

    n^2 = a1 + b1 f + (a2 + b2 f) / (lm^2 - (a3 + b3 f)^2)
              + (a4 + b4 f) / (lm^2 - a5^2) - a6 lm^2,
    f   = (T - 24.5)(T + 570.82),   lm in um, T in deg C.

All three interacting waves are treated as extraordinary (type-0 quasi-
phasematching along the crystal z axis).  Waveguide confinement is not
mode-solved; it enters through two calibration constants on
PhasematchingSpec: an additive `delta_k_offset` that zeroes the mismatch
at the nominal operating point, and an optional first-order
`group_offset` that zeroes d(delta k)/d(omega_in) there, restoring the
group-velocity-matched ("horizontal") phasematching the bulk series
alone does not provide at the 1550/870 nm operating point.
"""

from dataclasses import dataclass, replace

import numpy as np

from .errors import DomainError
from .pulses import C, wavelength_to_omega


@dataclass(frozen=True)
class SellmeierModel:
    """Coefficient set for a Jundt-type temperature-dependent Sellmeier series."""

    a1: float
    a2: float
    a3: float
    a4: float
    a5: float
    a6: float
    b1: float
    b2: float
    b3: float
    b4: float
    wavelength_range_um: tuple = (0.4, 2.0)
    temperature_range_c: tuple = (20.0, 250.0)

    def check_domain(self, wavelength_um, temperature_c):
        lo, hi = self.wavelength_range_um
        if np.any(wavelength_um < lo) or np.any(wavelength_um > hi):
            raise DomainError(
                f"wavelength outside Sellmeier validity [{lo}, {hi}] um"
            )
        tlo, thi = self.temperature_range_c
        if temperature_c < tlo or temperature_c > thi:
            raise DomainError(
                f"temperature outside Sellmeier validity [{tlo}, {thi}] C"
            )

    def index(self, wavelength_um, temperature_c):
        """n_e(lambda, T); lambda in um, T in deg C."""
        wavelength_um = np.asarray(wavelength_um, dtype=float)
        self.check_domain(wavelength_um, temperature_c)
        f = (temperature_c - 24.5) * (temperature_c + 570.82)
        lm2 = wavelength_um**2
        n2 = (
            self.a1
            + self.b1 * f
            + (self.a2 + self.b2 * f) / (lm2 - (self.a3 + self.b3 * f) ** 2)
            + (self.a4 + self.b4 * f) / (lm2 - self.a5**2)
            - self.a6 * lm2
        )
        n = np.sqrt(n2)
        return float(n) if n.ndim == 0 else n


# Jundt 1997, congruent LiNbO3, extraordinary axis
CONGRUENT_LN_E = SellmeierModel(
    a1=5.35583,
    a2=0.100473,
    a3=0.20692,
    a4=100.0,
    a5=11.34927,
    a6=1.5334e-2,
    b1=4.629e-7,
    b2=3.862e-8,
    b3=-0.89e-8,
    b4=2.657e-5,
)


def refractive_index(wavelength_um, temperature_c, model=CONGRUENT_LN_E):
    """Extraordinary refractive index n_e(lambda [um], T [deg C])."""
    return model.index(wavelength_um, temperature_c)


def group_index(wavelength_um, temperature_c, model=CONGRUENT_LN_E, step_um=1e-4):
    """Group index n_g = n - lambda dn/dlambda by central difference."""
    n = model.index(wavelength_um, temperature_c)
    dn = (
        model.index(wavelength_um + step_um, temperature_c)
        - model.index(wavelength_um - step_um, temperature_c)
    ) / (2.0 * step_um)
    return n - wavelength_um * dn


@dataclass(frozen=True)
class PhasematchingSpec:
    """Crystal and quasi-phasematching parameters defining the mismatch.

    length, poling_period in meters; temperature in deg C; qpm_order odd.
    delta_k_offset [rad/m] and group_offset [s/m] are waveguide
    calibration constants (see module docstring); group_ref_omega is the
    input angular frequency the group term is anchored to.
    """

    length: float
    poling_period: float
    temperature: float
    qpm_order: int = 1
    delta_k_offset: float = 0.0
    group_offset: float = 0.0
    group_ref_omega: float = 0.0
    sellmeier: SellmeierModel = CONGRUENT_LN_E

    def __post_init__(self):
        if self.length <= 0:
            raise DomainError("crystal length must be positive")
        if self.poling_period <= 0:
            raise DomainError("poling period must be positive")
        if self.qpm_order % 2 != 1:
            raise DomainError("qpm_order must be odd")

    @property
    def grating_wavenumber(self):
        return self.qpm_order * 2.0 * np.pi / self.poling_period


def wavenumber(omega, temperature_c, model=CONGRUENT_LN_E):
    """k(omega) = n_e(lambda(omega), T) * omega / c [rad/m]."""
    lam_um = 2.0 * np.pi * C / np.asarray(omega, dtype=float) * 1e6
    return model.index(lam_um, temperature_c) * omega / C


def _mismatch(omega_in, omega_out, omega_gate, spec):
    dk = (
        wavenumber(omega_out, spec.temperature, spec.sellmeier)
        - wavenumber(omega_in, spec.temperature, spec.sellmeier)
        - wavenumber(omega_gate, spec.temperature, spec.sellmeier)
        - spec.grating_wavenumber
        + spec.delta_k_offset
    )
    if spec.group_offset != 0.0:
        dk = dk + spec.group_offset * (omega_in - spec.group_ref_omega)
    return dk


def phase_mismatch(omega_in, omega_out, spec):
    """Quasi-phasematched wavevector mismatch delta k [rad/m].

    delta k = k(w_out) - k(w_in) - k(w_out - w_in) - m 2pi/Lambda
              + delta_k_offset [+ group_offset (w_in - w_ref)].
    """
    omega_in = np.asarray(omega_in, dtype=float)
    omega_out = np.asarray(omega_out, dtype=float)
    if np.any(omega_in <= 0) or np.any(omega_out <= omega_in):
        raise DomainError("need omega_out > omega_in > 0")
    dk = _mismatch(omega_in, omega_out, omega_out - omega_in, spec)
    return float(dk) if dk.ndim == 0 else dk


def calibrate_offset(wavelength_in_nm, wavelength_gate_nm, spec):
    """delta_k_offset that makes phase_mismatch vanish at the nominal point.

    Any offset already present on `spec` is ignored.
    """
    bare = replace(spec, delta_k_offset=0.0)
    w_in = wavelength_to_omega(wavelength_in_nm)
    w_gate = wavelength_to_omega(wavelength_gate_nm)
    return -phase_mismatch(w_in, w_in + w_gate, bare)


def calibrate_group_offset(wavelength_in_nm, wavelength_gate_nm, spec):
    """group_offset [s/m] that zeroes d(delta k)/d(omega_in) at the nominal point.

    Equals (n_g(lambda_in) - n_g(lambda_gate))/c, i.e. it cancels the bulk
    input/gate group-index mismatch so the phasematching ridge is
    horizontal, as it is for the waveguide device this class stands in for.
    """
    ng_in = group_index(wavelength_in_nm * 1e-3, spec.temperature, spec.sellmeier)
    ng_gate = group_index(wavelength_gate_nm * 1e-3, spec.temperature, spec.sellmeier)
    return (ng_in - ng_gate) / C


def calibrated_spec(spec, wavelength_in_nm, wavelength_gate_nm, match_group_velocity=True):
    """Spec with calibration constants set for the given operating point."""
    out = replace(spec, delta_k_offset=0.0, group_offset=0.0, group_ref_omega=0.0)
    if match_group_velocity:
        out = replace(
            out,
            group_offset=calibrate_group_offset(wavelength_in_nm, wavelength_gate_nm, out),
            group_ref_omega=wavelength_to_omega(wavelength_in_nm),
        )
    return replace(
        out, delta_k_offset=calibrate_offset(wavelength_in_nm, wavelength_gate_nm, out)
    )


def _sinc(x):
    """sin(x)/x with a series branch near zero to avoid cancellation."""
    x = np.asarray(x, dtype=float)
    small = np.abs(x) < 1e-4
    safe = np.where(small, 1.0, x)
    out = np.where(small, 1.0 - x * x / 6.0, np.sin(safe) / safe)
    return float(out) if out.ndim == 0 else out


def phasematching_amplitude(delta_k, length):
    """Phi = sinc(delta_k L / 2) exp(i delta_k L / 2) for a uniform crystal."""
    if length <= 0:
        raise DomainError("crystal length must be positive")
    x = np.asarray(delta_k, dtype=float) * length / 2.0
    out = _sinc(x) * np.exp(1j * x)
    return complex(out) if out.ndim == 0 else out


def ridge_angle_deg(wavelength_in_nm, wavelength_gate_nm, spec, step=1e9):
    """Orientation of the phasematching ridge in the (w_in, w_out) plane.

    0 deg means horizontal (mismatch independent of w_in at fixed w_out),
    the group-velocity-matched case.  Diagnostic only.
    """
    w_in = wavelength_to_omega(wavelength_in_nm)
    w_out = w_in + wavelength_to_omega(wavelength_gate_nm)
    d_in = (
        phase_mismatch(w_in + step, w_out, spec)
        - phase_mismatch(w_in - step, w_out, spec)
    ) / (2.0 * step)
    d_out = (
        phase_mismatch(w_in, w_out + step, spec)
        - phase_mismatch(w_in, w_out - step, spec)
    ) / (2.0 * step)
    return float(np.degrees(np.arctan2(-d_in, d_out)))
