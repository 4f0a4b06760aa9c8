"""Assembly of the discretized SFG transfer kernel f(w_in, w_out).

The kernel is the product of the gating-pulse spectral amplitude taken at
the difference frequency, alpha(w_out - w_in), and the phasematching
amplitude Phi(w_out, w_in).  It is stored densely with its two grids and
normalized to unit Frobenius norm under the quadrature weights, so the
subsequent Schmidt coefficients satisfy sum(kappa^2) = 1 exactly.
"""

from dataclasses import dataclass, field

import numpy as np

from .dispersion import _mismatch, phasematching_amplitude
from .errors import DomainError, WindowError
from .pulses import C, FrequencyGrid

BOUNDARY_MASS_LIMIT = 0.05


@dataclass
class TransferMatrix:
    """Dense complex kernel over an input x output grid pair.

    values[i, o] pairs input sample i with output sample o.
    clipped_fraction: gating-pulse mass the difference window could not
    reach; boundary_fraction: kernel mass in the outermost rows/columns.
    """

    input_grid: FrequencyGrid
    output_grid: FrequencyGrid
    values: np.ndarray
    clipped_fraction: float = field(default=0.0, compare=False)
    boundary_fraction: float = field(default=0.0, compare=False)

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=complex)
        expected = (self.input_grid.n_points, self.output_grid.n_points)
        if self.values.shape != expected:
            raise DomainError(
                f"kernel shape {self.values.shape} does not match grids {expected}"
            )

    @property
    def weight(self):
        return self.input_grid.spacing * self.output_grid.spacing

    @property
    def frobenius_norm(self):
        """Frobenius norm under the quadrature weights."""
        return float(np.sqrt(np.sum(np.abs(self.values) ** 2) * self.weight))

    def normalized(self):
        n = self.frobenius_norm
        if n == 0.0:
            raise DomainError("cannot normalize a zero kernel")
        return TransferMatrix(
            self.input_grid,
            self.output_grid,
            self.values / n,
            self.clipped_fraction,
            self.boundary_fraction,
        )

    def measure_boundary_fraction(self):
        """Fraction of |f|^2 mass in the first/last rows and columns."""
        w2 = np.abs(self.values) ** 2
        total = np.sum(w2)
        if total == 0.0:
            return 0.0
        edge = (
            np.sum(w2[0, :])
            + np.sum(w2[-1, :])
            + np.sum(w2[1:-1, 0])
            + np.sum(w2[1:-1, -1])
        )
        return float(edge / total)

    def output_marginal(self):
        """|f|^2 mass marginal over the output grid (integrates w_in out)."""
        return np.sum(np.abs(self.values) ** 2, axis=0) * self.input_grid.spacing

    def output_mass_center(self):
        """Mean output angular frequency of the kernel mass."""
        marg = self.output_marginal()
        return float(np.sum(self.output_grid.samples * marg) / np.sum(marg))


def default_output_grid(input_grid, gating_grid):
    """Output window: centered at the sum of centers, combined span.

    Captures the full anti-diagonal support w_out = w_in + w_gate.
    """
    return FrequencyGrid(
        input_grid.center + gating_grid.center,
        input_grid.span + gating_grid.span,
        input_grid.n_points,
    )


def build_transfer(gating, spec, input_grid, output_grid=None,
                   boundary_limit=BOUNDARY_MASS_LIMIT):
    """Assemble f(w_in, w_out) = alpha(w_out - w_in) Phi(w_out, w_in), normalized.

    alpha is linearly interpolated on the gating grid and taken as zero
    outside it; the mismatch is evaluated with the gate frequency clipped
    to the gating grid so the Sellmeier series is only queried inside its
    validity range (those entries carry alpha = 0 anyway).  Raises
    WindowError when more than `boundary_limit` of the kernel mass sits on
    the boundary rows/columns, i.e. the ridge falls outside the window.
    """
    if output_grid is None:
        output_grid = default_output_grid(input_grid, gating.grid)
    gate_grid = gating.grid
    # validate all three bands against the Sellmeier window up front
    for g in (input_grid, output_grid, gate_grid):
        lam_um = 2.0 * np.pi * C / g.samples[np.array([0, -1])] * 1e6
        spec.sellmeier.check_domain(lam_um, spec.temperature)

    w_in = input_grid.samples[:, None]
    w_out = output_grid.samples[None, :]
    diff = w_out - w_in
    lo, hi = gate_grid.samples[0], gate_grid.samples[-1]

    alpha = np.interp(diff, gate_grid.samples, gating.values, left=0.0, right=0.0)
    dk = _mismatch(w_in, w_out, np.clip(diff, lo, hi), spec)
    values = alpha * phasematching_amplitude(dk, spec.length)

    # gate mass the difference window cannot reach
    gate_mass = np.abs(gating.values) ** 2 * gate_grid.spacing
    reachable = (gate_grid.samples >= diff.min()) & (gate_grid.samples <= diff.max())
    clipped = float(np.sum(gate_mass[~reachable]) / np.sum(gate_mass))

    kernel = TransferMatrix(input_grid, output_grid, values,
                            clipped_fraction=clipped).normalized()
    kernel.boundary_fraction = kernel.measure_boundary_fraction()
    if kernel.boundary_fraction > boundary_limit:
        raise WindowError(
            f"{kernel.boundary_fraction:.1%} of the kernel mass touches the "
            "window boundary; enlarge or recenter the grids",
            boundary_fraction=kernel.boundary_fraction,
        )
    return kernel
