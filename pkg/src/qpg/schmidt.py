"""Schmidt decomposition of transfer kernels and derived diagnostics.

The discrete decomposition is the SVD of the quadrature-weighted matrix
sqrt(dw_in) f sqrt(dw_out); singular vectors are rescaled by 1/sqrt(dw)
back into function-normalized spectral amplitudes so that the discrete
inner product approximates the continuous one.  With the kernel at unit
weighted Frobenius norm the coefficients satisfy sum(kappa^2) = 1.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError
from .pulses import SpectralAmplitude
from .transfer import TransferMatrix

DEFAULT_RANK = 32
DEGENERACY_TOL = 1e-12


@dataclass
class SchmidtDecomposition:
    """Coefficients and mode pairs of one decomposed kernel.

    coefficients holds the full singular spectrum (descending); only the
    first rank_kept mode pairs are materialized.  unstable[k] flags modes
    inside a degenerate coefficient block (|kappa_i - kappa_j| < 1e-12),
    where any unitary rotation of the block is an equally valid basis.
    """

    coefficients: np.ndarray
    input_modes: list
    output_modes: list
    rank_kept: int
    unstable: np.ndarray = field(default=None, repr=False)

    def __post_init__(self):
        if self.unstable is None:
            self.unstable = np.zeros(self.rank_kept, dtype=bool)

    @property
    def input_grid(self):
        return self.input_modes[0].grid

    @property
    def output_grid(self):
        return self.output_modes[0].grid

    def tail_mass(self, rank=None):
        """sum(kappa^2) beyond the first `rank` coefficients."""
        r = self.rank_kept if rank is None else rank
        return float(np.sum(self.coefficients[r:] ** 2))


def schmidt_decompose(kernel, rank=DEFAULT_RANK):
    """Decompose a unit-norm TransferMatrix into Schmidt pairs.

    Phase convention: each input mode is rotated so its largest-magnitude
    sample is real and positive, with the compensating phase pushed into
    the paired output mode; ties resolve to the first index, so repeated
    runs are bitwise identical.
    """
    n_in = kernel.input_grid.n_points
    n_out = kernel.output_grid.n_points
    if not 1 <= rank <= min(n_in, n_out):
        raise DomainError(f"rank must lie in [1, {min(n_in, n_out)}], got {rank}")
    if abs(kernel.frobenius_norm - 1.0) > 1e-6:
        raise DomainError("kernel must be normalized before decomposition")

    dw_in = kernel.input_grid.spacing
    dw_out = kernel.output_grid.spacing
    weighted = kernel.values * np.sqrt(dw_in * dw_out)
    u, s, vh = np.linalg.svd(weighted, full_matrices=False)

    input_modes = []
    output_modes = []
    for k in range(rank):
        phi = u[:, k] / np.sqrt(dw_in)
        psi = vh[k, :] / np.sqrt(dw_out)
        pivot = phi[np.argmax(np.abs(phi))]
        if pivot != 0:
            rot = pivot / abs(pivot)
            phi = phi / rot
            psi = psi * rot
        input_modes.append(SpectralAmplitude(kernel.input_grid, phi, label=f"phi{k}"))
        output_modes.append(SpectralAmplitude(kernel.output_grid, psi, label=f"psi{k}"))

    unstable = np.zeros(rank, dtype=bool)
    for k in range(rank):
        near_prev = k > 0 and s[k - 1] - s[k] < DEGENERACY_TOL
        near_next = k + 1 < len(s) and s[k] - s[k + 1] < DEGENERACY_TOL
        unstable[k] = near_prev or near_next

    return SchmidtDecomposition(
        coefficients=s,
        input_modes=input_modes,
        output_modes=output_modes,
        rank_kept=rank,
        unstable=unstable,
    )


def schmidt_number(decomposition):
    """Effective mode-pair count K = 1 / sum(kappa^4) (for sum(kappa^2)=1)."""
    return float(1.0 / np.sum(decomposition.coefficients**4))


def purity(decomposition):
    """sum(kappa^4) = 1/K; heralded-photon purity of an unfiltered source."""
    return float(np.sum(decomposition.coefficients**4))


def reconstruct(decomposition, rank):
    """Rank-`rank` partial sum sum_k kappa_k phi_k(w_in) psi_k(w_out).

    By the Eckart-Young theorem its weighted-Frobenius residual against
    the original kernel equals sqrt(sum of the dropped kappa^2).
    """
    if not 0 <= rank <= decomposition.rank_kept:
        raise DomainError(
            f"rank must lie in [0, {decomposition.rank_kept}], got {rank}"
        )
    grid_in = decomposition.input_grid
    grid_out = decomposition.output_grid
    values = np.zeros((grid_in.n_points, grid_out.n_points), dtype=complex)
    for k in range(rank):
        values += decomposition.coefficients[k] * np.outer(
            decomposition.input_modes[k].values,
            decomposition.output_modes[k].values,
        )
    return TransferMatrix(grid_in, grid_out, values)
