"""Frequency grids, unit conversions and Hermite-Gauss spectral modes.

All spectra live on uniform angular-frequency grids and are treated as
discrete functions with the rectangle-rule quadrature weight dw, so that
the norm of a spectral amplitude is sum(|a|^2) * dw.  Width convention:
amplitude ~ exp(-(w-w0)^2 / (2 sigma^2)), hence the intensity FWHM equals
2*sigma*sqrt(ln 2).
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, GridMismatchError, TruncationError

C = 299792458.0  # vacuum speed of light, m/s

MAX_HERMITE_ORDER = 20


def wavelength_to_omega(wavelength_nm):
    """Convert vacuum wavelength [nm] to angular frequency [rad/s]."""
    wavelength_nm = np.asarray(wavelength_nm, dtype=float)
    if np.any(wavelength_nm <= 0):
        raise DomainError("wavelength must be positive")
    out = 2.0 * np.pi * C / (wavelength_nm * 1e-9)
    return float(out) if out.ndim == 0 else out


def omega_to_wavelength(omega):
    """Convert angular frequency [rad/s] to vacuum wavelength [nm]."""
    omega = np.asarray(omega, dtype=float)
    if np.any(omega <= 0):
        raise DomainError("angular frequency must be positive")
    out = 2.0 * np.pi * C / omega * 1e9
    return float(out) if out.ndim == 0 else out


def sum_frequency(wavelength_in_nm, wavelength_gate_nm):
    """Sum-frequency wavelength [nm] of two waves (photon energy conservation)."""
    if wavelength_in_nm <= 0 or wavelength_gate_nm <= 0:
        raise DomainError("wavelengths must be positive")
    return wavelength_in_nm * wavelength_gate_nm / (wavelength_in_nm + wavelength_gate_nm)


def wavelength_fwhm_to_omega_fwhm(fwhm_nm, center_nm):
    """Convert an intensity FWHM in wavelength to angular frequency [rad/s]."""
    if fwhm_nm <= 0 or center_nm <= 0:
        raise DomainError("FWHM and center wavelength must be positive")
    return 2.0 * np.pi * C * (fwhm_nm * 1e-9) / (center_nm * 1e-9) ** 2


def fwhm_to_sigma(fwhm_omega):
    """Amplitude width sigma from the intensity FWHM of a Gaussian spectrum."""
    if fwhm_omega <= 0:
        raise DomainError("FWHM must be positive")
    return fwhm_omega / (2.0 * np.sqrt(np.log(2.0)))


def sigma_to_fwhm(sigma):
    """Intensity FWHM of a Gaussian spectrum with amplitude width sigma."""
    if sigma <= 0:
        raise DomainError("sigma must be positive")
    return 2.0 * np.sqrt(np.log(2.0)) * sigma


@dataclass(frozen=True)
class FrequencyGrid:
    """Uniform angular-frequency sampling of one optical band.

    Samples run from center-span/2 to center+span/2 inclusive, spacing
    span/(n_points-1).  They are built from an exactly antisymmetric
    offset array so that grids centered on a mode sample it with exact
    parity symmetry.
    """

    center: float
    span: float
    n_points: int
    offsets: np.ndarray = field(init=False, repr=False, compare=False)
    samples: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n_points < 16:
            raise DomainError("n_points must be at least 16")
        if self.span <= 0:
            raise DomainError("span must be positive")
        offsets = (np.arange(self.n_points) - (self.n_points - 1) / 2.0) * self.spacing
        samples = self.center + offsets
        offsets.setflags(write=False)
        samples.setflags(write=False)
        object.__setattr__(self, "offsets", offsets)
        object.__setattr__(self, "samples", samples)

    @property
    def spacing(self):
        return self.span / (self.n_points - 1)

    def covers(self, lo, hi):
        return self.samples[0] <= lo and self.samples[-1] >= hi

    def shifted(self, delta):
        return FrequencyGrid(self.center + delta, self.span, self.n_points)


@dataclass(frozen=True)
class ModeSpec:
    """Order, center and width of one Hermite-Gauss spectral mode."""

    order: int
    center: float
    sigma: float
    max_order: int = MAX_HERMITE_ORDER

    def __post_init__(self):
        if self.sigma <= 0:
            raise DomainError("sigma must be positive")
        if not 0 <= self.order <= self.max_order:
            raise DomainError(
                f"order must lie in [0, {self.max_order}], got {self.order}"
            )

    @property
    def coverage_radius(self):
        """Half-width (in units of sigma) the grid must cover around center."""
        return max(6.0, np.sqrt(2.0 * self.order + 1.0) + 4.0)


@dataclass
class SpectralAmplitude:
    """Complex spectral amplitude sampled on a FrequencyGrid."""

    grid: FrequencyGrid
    values: np.ndarray
    label: str = ""

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=complex)
        if self.values.shape != (self.grid.n_points,):
            raise GridMismatchError(
                f"values length {self.values.shape} does not match grid "
                f"n_points {self.grid.n_points}"
            )

    @property
    def norm(self):
        return float(np.sqrt(np.sum(np.abs(self.values) ** 2) * self.grid.spacing))

    def normalized(self):
        n = self.norm
        if n == 0.0:
            raise DomainError("cannot normalize a zero amplitude")
        return SpectralAmplitude(self.grid, self.values / n, self.label)


def hermite_function(order, x):
    """Orthonormal Hermite function h_k(x) by the stable normalized recurrence.

    h_0 = pi^(-1/4) exp(-x^2/2),  h_{k+1} = sqrt(2/(k+1)) x h_k - sqrt(k/(k+1)) h_{k-1}.
    Avoids the factorial overflow of the explicit formula beyond k ~ 15.
    """
    x = np.asarray(x, dtype=float)
    h_prev = np.pi ** -0.25 * np.exp(-0.5 * x * x)
    if order == 0:
        return h_prev
    h = np.sqrt(2.0) * x * h_prev
    for k in range(1, order):
        h_prev, h = h, np.sqrt(2.0 / (k + 1)) * x * h - np.sqrt(k / (k + 1.0)) * h_prev
    return h


def hermite_mode(spec, grid):
    """Sample the normalized Hermite-Gauss mode of `spec` on `grid`.

    Raises TruncationError (carrying the measured lost norm) when the grid
    does not cover center +- max(6, sqrt(2k+1)+4) sigma.
    """
    radius = spec.coverage_radius * spec.sigma
    if spec.center == grid.center:
        # exact parity symmetry for grids centered on the mode
        x = grid.offsets / spec.sigma
    else:
        x = (grid.samples - spec.center) / spec.sigma
    values = hermite_function(spec.order, x) / np.sqrt(spec.sigma)
    if not grid.covers(spec.center - radius, spec.center + radius):
        captured = float(np.sum(values**2) * grid.spacing)
        raise TruncationError(
            f"grid [{grid.samples[0]:.6e}, {grid.samples[-1]:.6e}] does not cover "
            f"mode support {spec.center:.6e} +- {radius:.6e};"
            f" lost norm {max(0.0, 1.0 - captured):.3e}",
            lost_norm=max(0.0, 1.0 - captured),
        )
    amp = SpectralAmplitude(grid, values, label=f"u{spec.order}")
    return amp.normalized()


def superpose(coeffs, modes):
    """Normalized linear combination of modes living on one common grid."""
    if len(coeffs) != len(modes) or not modes:
        raise DomainError("need one coefficient per mode")
    grid = modes[0].grid
    for m in modes[1:]:
        if m.grid != grid:
            raise GridMismatchError("superpose requires a common grid")
    coeffs = np.asarray(coeffs, dtype=complex)
    if not np.any(coeffs != 0):
        raise DomainError("all coefficients are zero")
    values = np.zeros(grid.n_points, dtype=complex)
    for c, m in zip(coeffs, modes):
        values += c * m.values
    out = SpectralAmplitude(grid, values, label="superposition")
    return out.normalized()


def overlap(a, b):
    """Inner product <a|b> = sum(conj(a) b) dw on a shared grid."""
    if a.grid != b.grid:
        raise GridMismatchError("overlap requires a common grid")
    return complex(np.sum(np.conj(a.values) * b.values) * a.grid.spacing)
