"""Shipped parameter sets: the engineered device and its correlated foil.

The engineered recipe is the reference device: a 50 mm PPLN waveguide
with 4.2 um poling at 175 C, gated at 870 nm with 0.635 nm intensity FWHM
to up-convert a 1550 nm input band to about 557 nm.  The non-engineered
recipe keeps the wavelengths but shortens the crystal to 2 mm, so the
phasematching acceptance is no longer narrow against the gating bandwidth
and the kernel shows strong frequency correlation.
"""

from dataclasses import dataclass, replace

from .dispersion import PhasematchingSpec, calibrated_spec
from .gate import gated_decomposition
from .pulses import (
    fwhm_to_sigma,
    wavelength_fwhm_to_omega_fwhm,
    wavelength_to_omega,
)
from .schmidt import DEFAULT_RANK

GATE_CENTER_NM = 870.0
GATE_FWHM_NM = 0.635
INPUT_CENTER_NM = 1550.0
ENGINEERED_LENGTH_M = 50e-3
NONENGINEERED_LENGTH_M = 2e-3
POLING_PERIOD_M = 4.2e-6
TEMPERATURE_C = 175.0


@dataclass(frozen=True)
class KernelRecipe:
    """Everything needed to assemble and decompose one gated kernel."""

    spec: PhasematchingSpec
    gate_center_nm: float = GATE_CENTER_NM
    gate_fwhm_nm: float = GATE_FWHM_NM
    input_center_nm: float = INPUT_CENTER_NM
    gate_order: int = 0
    n_points: int = 512

    @property
    def gate_sigma(self):
        return fwhm_to_sigma(
            wavelength_fwhm_to_omega_fwhm(self.gate_fwhm_nm, self.gate_center_nm)
        )

    @property
    def gate_center_omega(self):
        return wavelength_to_omega(self.gate_center_nm)

    @property
    def input_center_omega(self):
        return wavelength_to_omega(self.input_center_nm)

    def decompose(self, rank=DEFAULT_RANK, n_points=None, span_sigmas=None):
        """Build the transfer kernel and return (decomposition, kernel)."""
        return gated_decomposition(
            self.gate_order,
            self.gate_center_omega,
            self.gate_sigma,
            self.spec,
            self.input_center_omega,
            n_points=n_points or self.n_points,
            span_sigmas=span_sigmas,
            rank=rank,
        )


def _paper_spec(length_m):
    bare = PhasematchingSpec(
        length=length_m,
        poling_period=POLING_PERIOD_M,
        temperature=TEMPERATURE_C,
    )
    return calibrated_spec(bare, INPUT_CENTER_NM, GATE_CENTER_NM,
                           match_group_velocity=True)


def preset_engineered(gate_order=0):
    """Separable (mode-selective) device: L = 50 mm, calibrated."""
    return KernelRecipe(spec=_paper_spec(ENGINEERED_LENGTH_M), gate_order=gate_order)


def preset_nonengineered():
    """Correlated counter-example: same wavelengths, L = 2 mm."""
    return KernelRecipe(spec=_paper_spec(NONENGINEERED_LENGTH_M))


def with_length(recipe, length_m):
    """Recipe with the crystal length swapped and the offset recalibrated."""
    return replace(recipe, spec=_paper_spec(length_m))


_MATERIAL = """\
[material]
length_mm = {length_mm}
poling_period_um = 4.2
temperature_c = 175.0
qpm_order = 1
calibrate = group
"""

_GATING = """\
[gating]
center_nm = 870.0
fwhm_nm = 0.635
order = {order}
span_sigmas = 16.0
n_points = 512
"""

_INPUT = """\
[input]
center_nm = 1550.0
span_sigmas = 16.0
n_points = 512
"""


def _single_kernel_preset(name, task, length_mm, order, extra=""):
    return (
        f"[task]\nname = {task}\n\n"
        + _MATERIAL.format(length_mm=length_mm)
        + "\n"
        + _GATING.format(order=order)
        + "\n"
        + _INPUT
        + extra
        + f"\n[output]\nprefix = {name}\n"
    )


_EFFICIENCY_BLOCK = """
[gate]
theta_max = 2.5
n_steps = 101
"""

_SELECTIVITY_MATCHED = """\
[task]
name = selectivity

[material]
length_mm = 50.0
poling_period_um = 4.2
temperature_c = 175.0
qpm_order = 1
calibrate = group

[gating]
center_nm = 870.0
fwhm_nm = 0.635
max_order = 10
n_points = 512

[input]
center_nm = 1550.0
max_order = 10
mode_width = fitted
n_points = 512

[output]
prefix = fig4_matched
"""

_SELECTIVITY_MISMATCHED = _SELECTIVITY_MATCHED.replace(
    "mode_width = fitted", "mode_fwhm_scale = 0.5"
).replace("prefix = fig4_matched", "prefix = fig4_mismatched")

_HERALD = """\
[task]
name = herald

[material]
length_mm = 50.0
poling_period_um = 4.2
temperature_c = 175.0
qpm_order = 1
calibrate = group

[gating]
center_nm = 870.0
fwhm_nm = 0.635
order = 0
span_sigmas = 20.0
n_points = 512

[input]
center_nm = 1550.0
span_sigmas = 20.0
mode_width = fitted
n_points = 512

[gate]
theta = optimal

[pdc]
schmidt_number = 2.0
n_modes = 8

[output]
prefix = herald
"""

PRESETS = {
    "paper_fig2_a1": _single_kernel_preset("fig2_a1", "transfer", "2.0", 0),
    "paper_fig2_b1": _single_kernel_preset("fig2_b1", "schmidt", "2.0", 0),
    "paper_fig2_c1": _single_kernel_preset(
        "fig2_c1", "efficiency", "2.0", 0, _EFFICIENCY_BLOCK
    ),
    "paper_fig2_a2": _single_kernel_preset("fig2_a2", "transfer", "50.0", 0),
    "paper_fig2_b2": _single_kernel_preset("fig2_b2", "schmidt", "50.0", 0),
    "paper_fig2_c2": _single_kernel_preset(
        "fig2_c2", "efficiency", "50.0", 0, _EFFICIENCY_BLOCK
    ),
    "paper_fig2_a3": _single_kernel_preset("fig2_a3", "transfer", "50.0", 1),
    "paper_fig2_b3": _single_kernel_preset("fig2_b3", "schmidt", "50.0", 1),
    "paper_fig2_c3": _single_kernel_preset(
        "fig2_c3", "efficiency", "50.0", 1, _EFFICIENCY_BLOCK
    ),
    "paper_fig4_matched": _SELECTIVITY_MATCHED,
    "paper_fig4_mismatched": _SELECTIVITY_MISMATCHED,
    "paper_herald": _HERALD,
}
