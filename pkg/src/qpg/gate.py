"""Beam-splitter dynamics on Schmidt modes and heralding figures of merit.

Each Schmidt pair (phi_k, psi_k) converts independently like a beam
splitter with angle theta * kappa_k, so the conversion probability is
eta_k = sin^2(theta kappa_k).  theta scales with the square root of the
gating pulse power, theta = gamma sqrt(P).
"""

from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import minimize_scalar

from .errors import DomainError, NoConversionError, NoHeraldError
from .pulses import FrequencyGrid, ModeSpec, hermite_mode, overlap
from .schmidt import DEFAULT_RANK, schmidt_decompose
from .transfer import build_transfer, default_output_grid

DEFAULT_GAMMA = np.pi / 2.0  # rad per sqrt(W): unit gating power gives theta = pi/2


@dataclass(frozen=True)
class GateSpec:
    """Gate coupling, either directly as theta [rad] or as power [W]."""

    theta: float = None
    power: float = None
    gamma: float = DEFAULT_GAMMA

    def __post_init__(self):
        if self.theta is None:
            if self.power is None:
                raise DomainError("specify either theta or power")
            if self.power < 0:
                raise DomainError("power must be non-negative")
            object.__setattr__(self, "theta", self.gamma * np.sqrt(self.power))
        if self.theta < 0:
            raise DomainError("theta must be non-negative")


def efficiency(gate, kappa):
    """Conversion probability sin^2(theta kappa) for one Schmidt pair."""
    kappa = np.asarray(kappa, dtype=float)
    if np.any(kappa < 0) or np.any(kappa > 1):
        raise DomainError("kappa must lie in [0, 1]")
    out = np.sin(gate.theta * kappa) ** 2
    return float(out) if out.ndim == 0 else out


@dataclass
class EfficiencyCurve:
    """eta_k(theta) for the leading Schmidt modes on a uniform theta grid."""

    theta: np.ndarray
    eta: np.ndarray  # shape (n_steps, n_modes)


def efficiency_curve(decomposition, theta_max, n_steps, n_modes=4):
    """Tabulate eta_k(theta) for the first `n_modes` modes on [0, theta_max]."""
    if n_steps < 2:
        raise DomainError("need at least 2 theta steps")
    if theta_max <= 0:
        raise DomainError("theta_max must be positive")
    m = min(n_modes, len(decomposition.coefficients))
    theta = np.linspace(0.0, theta_max, n_steps)
    kappa = decomposition.coefficients[:m]
    eta = np.sin(theta[:, None] * kappa[None, :]) ** 2
    return EfficiencyCurve(theta=theta, eta=eta)


def optimal_coupling(decomposition, mode=0):
    """Smallest theta with unit conversion of mode k: pi / (2 kappa_k)."""
    kappa = decomposition.coefficients[mode]
    if kappa <= 0:
        raise NoConversionError(f"mode {mode} has zero Schmidt coefficient")
    return float(np.pi / (2.0 * kappa))


def gated_decomposition(gate_order, gate_center, gate_sigma, spec, input_center,
                        n_points=512, span_sigmas=None, output_grid=None,
                        rank=DEFAULT_RANK):
    """Build the kernel for a Hermite gating pulse of given order and decompose it.

    Grids default to span_sigmas * gate_sigma around both carriers, with
    span_sigmas wide enough for the requested order; the output window
    follows the combined-span rule unless given explicitly.
    """
    mode = ModeSpec(gate_order, gate_center, gate_sigma)
    if span_sigmas is None:
        span_sigmas = max(16.0, 2.0 * (mode.coverage_radius + 2.0))
    gate_grid = FrequencyGrid(gate_center, span_sigmas * gate_sigma, n_points)
    input_grid = FrequencyGrid(input_center, span_sigmas * gate_sigma, n_points)
    gating = hermite_mode(mode, gate_grid)
    kernel = build_transfer(gating, spec, input_grid, output_grid)
    return schmidt_decompose(kernel, rank=rank), kernel


def fit_input_width(decomposition, input_center, sigma_guess):
    """Input-mode width maximizing |<u0|phi0>|^2 against the dominant mode.

    One-dimensional bounded search over log-width in [0.3, 3] x sigma_guess,
    capped so the trial mode still satisfies the grid-coverage precondition.
    """
    phi0 = decomposition.input_modes[0]
    grid = phi0.grid
    reach = min(grid.samples[-1] - input_center, input_center - grid.samples[0])
    upper = min(3.0 * sigma_guess, reach / ModeSpec(0, input_center, sigma_guess).coverage_radius)
    lower = 0.3 * sigma_guess
    if upper <= lower:
        raise DomainError("input grid too narrow to fit a comparison width")

    def mismatch(log_sigma):
        u0 = hermite_mode(ModeSpec(0, input_center, np.exp(log_sigma)), grid)
        return -abs(overlap(u0, phi0)) ** 2

    res = minimize_scalar(
        mismatch,
        bounds=(np.log(lower), np.log(upper)),
        method="bounded",
        options={"xatol": 1e-10},
    )
    return float(np.exp(res.x))


@dataclass
class OverlapMatrix:
    """|<u_l | phi_dominant(gate order k)>|^2 for k rows, l columns.

    row_deficit is the per-row Hermite-basis truncation gap 1 - rowsum;
    dominant_coefficients holds kappa_0 of each gating order's kernel.
    """

    entries: np.ndarray
    input_sigma: float
    fwhm_ratio: float
    matched: bool
    dominant_coefficients: np.ndarray
    row_deficit: np.ndarray = field(default=None, repr=False)

    def __post_init__(self):
        if np.any(self.entries < 0) or np.any(self.entries > 1 + 1e-9):
            raise DomainError("overlap entries must lie in [0, 1]")
        rowsums = self.entries.sum(axis=1)
        if np.any(rowsums > 1 + 1e-6):
            raise DomainError("overlap rows must sum to at most 1")
        if self.row_deficit is None:
            self.row_deficit = 1.0 - rowsums


def overlap_matrix_from_decompositions(decompositions, input_center, input_sigma,
                                       max_input_order, gate_sigma=None):
    """Project each decomposition's dominant input mode on Hermite modes u_l.

    Row k comes from decompositions[k]; entry (k, l) is |<u_l|phi_0^(k)>|^2
    with u_l the Hermite mode of width input_sigma at the input carrier.
    """
    entries = np.zeros((len(decompositions), max_input_order + 1))
    dominant = np.zeros(len(decompositions))
    for k, decomp in enumerate(decompositions):
        phi = decomp.input_modes[0]
        dominant[k] = decomp.coefficients[0]
        for l in range(max_input_order + 1):
            u = hermite_mode(ModeSpec(l, input_center, input_sigma), phi.grid)
            entries[k, l] = abs(overlap(u, phi)) ** 2
    ratio = (gate_sigma or input_sigma) / input_sigma
    return OverlapMatrix(
        entries=entries,
        input_sigma=input_sigma,
        fwhm_ratio=ratio,
        matched=bool(0.8 <= ratio <= 1.25),
        dominant_coefficients=dominant,
    )


def mode_overlap_matrix(spec, gate_center, gate_sigma, input_center,
                        input_sigma=None, max_gate_order=10, max_input_order=10,
                        n_points=512, rank=DEFAULT_RANK, output_grid=None):
    """Mode-selectivity matrix over gating orders 0..K and input orders 0..L.

    For each gating order the kernel is rebuilt and decomposed, and the
    dominant input Schmidt mode is projected on Hermite comparison modes
    u_l at the input carrier.  When input_sigma is None the comparison
    width is fitted on the order-0 kernel (mode matching); passing e.g.
    gate_sigma/2 reproduces the width-mismatched case.
    """
    top = max(max_gate_order, max_input_order)
    span_sigmas = max(16.0, 2.0 * (ModeSpec(top, gate_center, gate_sigma).coverage_radius + 2.0))

    decompositions = []
    for k in range(max_gate_order + 1):
        decomp, _ = gated_decomposition(
            k, gate_center, gate_sigma, spec, input_center,
            n_points=n_points, span_sigmas=span_sigmas, rank=rank,
            output_grid=output_grid,
        )
        decompositions.append(decomp)
    if input_sigma is None:
        input_sigma = fit_input_width(decompositions[0], input_center, gate_sigma)
    return overlap_matrix_from_decompositions(
        decompositions, input_center, input_sigma, max_input_order, gate_sigma
    )


@dataclass
class HeraldScenario:
    """First-order PDC pair source feeding the gate, plus its conversion matrix.

    pdc_coefficients c_k weight the source's Schmidt pairs (sum c^2 = 1);
    conversion_matrix M[m, k] = c_k sin(theta kappa_m) <phi_m | A_k> is the
    amplitude for pair k to produce a click in up-converted mode m.
    """

    pdc_coefficients: np.ndarray
    conversion_matrix: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.pdc_coefficients, dtype=float)
        if np.any(c < 0):
            raise DomainError("pdc coefficients must be non-negative")
        if abs(np.sum(c**2) - 1.0) > 1e-9:
            raise DomainError("pdc coefficients must satisfy sum(c^2) = 1")
        if np.any(np.abs(self.conversion_matrix) > 1 + 1e-9):
            raise DomainError("conversion amplitudes cannot exceed 1")
        self.pdc_coefficients = c


def geometric_pdc_coefficients(schmidt_number, n_modes):
    """Geometric Schmidt spectrum c_k^2 ~ (1-mu) mu^k with K = (1+mu)/(1-mu)."""
    if schmidt_number < 1:
        raise DomainError("Schmidt number must be >= 1")
    mu = (schmidt_number - 1.0) / (schmidt_number + 1.0)
    weights = (1.0 - mu) * mu ** np.arange(n_modes)
    return np.sqrt(weights / np.sum(weights))


def build_herald_scenario(decomposition, gate, pdc_coefficients,
                          source_center, source_sigma):
    """Assemble the conversion matrix for a PDC source behind the gate.

    Source signal modes are Hermite modes at (source_center, source_sigma)
    on the decomposition's input grid; mode matching means source_sigma
    equals the fitted gate width so A_0 coincides with phi_0.
    """
    c = np.asarray(pdc_coefficients, dtype=float)
    kappa = decomposition.coefficients[: decomposition.rank_kept]
    amps = np.sin(gate.theta * kappa)
    matrix = np.zeros((len(kappa), len(c)), dtype=complex)
    for k in range(len(c)):
        source_mode = hermite_mode(
            ModeSpec(k, source_center, source_sigma), decomposition.input_grid
        )
        for m in range(len(kappa)):
            matrix[m, k] = c[k] * amps[m] * overlap(
                decomposition.input_modes[m], source_mode
            )
    return HeraldScenario(pdc_coefficients=c, conversion_matrix=matrix)


def herald_purity(scenario):
    """Purity of the heralded photon after a mode-blind click in the sum arm.

    The reduced state is rho ~ M^dagger M (rows are undetected output
    modes); returns Tr(rho^2) / Tr(rho)^2.
    """
    m = np.asarray(scenario.conversion_matrix, dtype=complex)
    rho = m.conj().T @ m
    trace = np.real(np.trace(rho))
    if trace <= 0.0:
        raise NoHeraldError("conversion matrix is zero; no heralding click possible")
    return float(np.real(np.trace(rho @ rho)) / trace**2)
