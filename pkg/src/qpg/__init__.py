"""Quantum pulse gate simulator: spectrally engineered SFG mode selection.

Builds the SFG spectral transfer kernel from material dispersion and a
shaped gating pulse, Schmidt-decomposes it, and predicts mode-selective
conversion efficiencies, mode-overlap selectivity and heralded
single-photon purity.
"""

from .dispersion import (
    CONGRUENT_LN_E,
    PhasematchingSpec,
    SellmeierModel,
    calibrate_group_offset,
    calibrate_offset,
    calibrated_spec,
    group_index,
    phase_mismatch,
    phasematching_amplitude,
    refractive_index,
    ridge_angle_deg,
    wavenumber,
)
from .errors import (
    DomainError,
    GridMismatchError,
    NoConversionError,
    NoHeraldError,
    QpgError,
    ScenarioError,
    ScenarioParseError,
    TruncationError,
    WindowError,
)
from .gate import (
    EfficiencyCurve,
    GateSpec,
    HeraldScenario,
    OverlapMatrix,
    build_herald_scenario,
    efficiency,
    efficiency_curve,
    fit_input_width,
    gated_decomposition,
    geometric_pdc_coefficients,
    herald_purity,
    mode_overlap_matrix,
    optimal_coupling,
)
from .presets import (
    KernelRecipe,
    PRESETS,
    preset_engineered,
    preset_nonengineered,
    with_length,
)
from .pulses import (
    C,
    FrequencyGrid,
    MAX_HERMITE_ORDER,
    ModeSpec,
    SpectralAmplitude,
    fwhm_to_sigma,
    hermite_function,
    hermite_mode,
    omega_to_wavelength,
    overlap,
    sigma_to_fwhm,
    sum_frequency,
    superpose,
    wavelength_fwhm_to_omega_fwhm,
    wavelength_to_omega,
)
from .scenario import (
    Scenario,
    load_scenario_file,
    parse_scenario_text,
    run_scenario,
    sweep_scenario,
    validate_scenario,
)
from .schmidt import (
    SchmidtDecomposition,
    purity,
    reconstruct,
    schmidt_decompose,
    schmidt_number,
)
from .transfer import TransferMatrix, build_transfer, default_output_grid

__version__ = "0.1.0"
