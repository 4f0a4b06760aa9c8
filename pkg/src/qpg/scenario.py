"""Declarative scenario files: parsing, validation, execution, export.

A scenario is a flat INI document with one block per concern (material,
gating, input, gate, pdc, output) plus a task selector.  Runs are
deterministic: fixed float formatting (shortest round-trip repr), sorted
JSON keys, no timestamps, so identical inputs give byte-identical
artifacts.
"""

import configparser
import json
import re
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .dispersion import (
    PhasematchingSpec,
    calibrated_spec,
    group_index,
    phase_mismatch,
    phasematching_amplitude,
    refractive_index,
    ridge_angle_deg,
)
from .errors import ScenarioError, ScenarioParseError
from .gate import (
    GateSpec,
    build_herald_scenario,
    efficiency_curve,
    fit_input_width,
    geometric_pdc_coefficients,
    herald_purity,
    mode_overlap_matrix,
    optimal_coupling,
)
from .presets import PRESETS
from .pulses import (
    C,
    FrequencyGrid,
    MAX_HERMITE_ORDER,
    ModeSpec,
    fwhm_to_sigma,
    hermite_mode,
    omega_to_wavelength,
    superpose,
    sum_frequency,
    wavelength_fwhm_to_omega_fwhm,
    wavelength_to_omega,
)
from .schmidt import DEFAULT_RANK, purity, schmidt_decompose, schmidt_number
from .transfer import build_transfer, default_output_grid

TASKS = ("phasematch", "transfer", "schmidt", "efficiency", "selectivity", "herald")


# ---------------------------------------------------------------------------
# parsing and validation


def _parse_float(text):
    return float(text)


def _parse_positive_float(text):
    v = float(text)
    if v <= 0:
        raise ValueError("must be positive")
    return v


def _parse_positive_int(text):
    v = int(text)
    if v <= 0:
        raise ValueError("must be positive")
    return v


def _parse_odd_int(text):
    v = int(text)
    if v <= 0 or v % 2 == 0:
        raise ValueError("must be a positive odd integer")
    return v


def _parse_order(text):
    v = int(text)
    if not 0 <= v <= MAX_HERMITE_ORDER:
        raise ValueError(f"must lie in [0, {MAX_HERMITE_ORDER}]")
    return v


def _parse_complex_list(text):
    items = [complex(t.strip().replace(" ", "")) for t in text.split(",") if t.strip()]
    if not items:
        raise ValueError("empty list")
    return items


def _parse_float_list(text):
    items = [float(t.strip()) for t in text.split(",") if t.strip()]
    if not items:
        raise ValueError("empty list")
    return items


def _parse_str(text):
    return text.strip()


def _choice(*options):
    def parse(text):
        v = text.strip()
        if v not in options:
            raise ValueError(f"must be one of {options}")
        return v

    return parse


def _parse_theta(text):
    v = text.strip()
    if v == "optimal":
        return "optimal"
    f = float(v)
    if f < 0:
        raise ValueError("must be non-negative or 'optimal'")
    return f


REQUIRED = object()

SCHEMA = {
    "material": {
        "length_mm": (_parse_positive_float, REQUIRED),
        "poling_period_um": (_parse_positive_float, REQUIRED),
        "temperature_c": (_parse_float, REQUIRED),
        "qpm_order": (_parse_odd_int, 1),
        "calibrate": (_choice("none", "offset", "group"), "group"),
        "delta_k_offset_rad_per_m": (_parse_float, 0.0),
    },
    "gating": {
        "center_nm": (_parse_positive_float, REQUIRED),
        "fwhm_nm": (_parse_positive_float, REQUIRED),
        "order": (_parse_order, None),
        "superposition": (_parse_complex_list, None),
        "span_sigmas": (_parse_positive_float, 16.0),
        "n_points": (_parse_positive_int, 512),
        "max_order": (_parse_order, 10),
    },
    "input": {
        "center_nm": (_parse_positive_float, REQUIRED),
        "span_sigmas": (_parse_positive_float, 16.0),
        "n_points": (_parse_positive_int, 512),
        "mode_width": (_choice("fitted", "matched"), None),
        "mode_fwhm_nm": (_parse_positive_float, None),
        "mode_fwhm_scale": (_parse_positive_float, None),
        "max_order": (_parse_order, 10),
        "sum_span_nm": (_parse_positive_float, None),
        "sum_n_points": (_parse_positive_int, None),
    },
    "gate": {
        "theta": (_parse_theta, None),
        "power": (_parse_positive_float, None),
        "gamma": (_parse_positive_float, float(np.pi / 2)),
        "theta_max": (_parse_positive_float, 2.5),
        "n_steps": (_parse_positive_int, 101),
    },
    "pdc": {
        "schmidt_number": (_parse_positive_float, 2.0),
        "n_modes": (_parse_positive_int, 8),
        "coefficients": (_parse_float_list, None),
    },
    "output": {
        "prefix": (_parse_str, None),
    },
}


class _Block(dict):
    __getattr__ = dict.__getitem__


@dataclass
class Scenario:
    """A validated scenario: typed blocks plus the raw text mapping."""

    task: str
    material: _Block
    gating: _Block
    input: _Block
    gate: _Block
    pdc: _Block
    output_prefix: str
    raw: dict = field(repr=False, default_factory=dict)


def parse_scenario_text(text):
    """INI text -> {section: {key: value-string}}; raises ScenarioParseError."""
    parser = configparser.ConfigParser(interpolation=None)
    try:
        parser.read_string(text)
    except configparser.Error as exc:
        raise ScenarioParseError("parse_error", f"cannot parse scenario: {exc}") from exc
    return {section: dict(parser.items(section)) for section in parser.sections()}


def load_scenario_file(path):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ScenarioParseError("unreadable_file", f"cannot read {path}: {exc}") from exc
    return parse_scenario_text(text)


def validate_scenario(raw):
    """Typed, cross-checked Scenario from a raw section mapping."""
    for section in raw:
        if section != "task" and section not in SCHEMA:
            raise ScenarioError("unknown_section", f"unknown section [{section}]")

    for key in raw.get("task", {}):
        if key != "name":
            raise ScenarioError("unknown_key", f"unknown key '{key}' in section [task]")
    task = raw.get("task", {}).get("name", "").strip()
    if not task:
        raise ScenarioError("missing_task", "scenario has no task name")
    if task not in TASKS:
        raise ScenarioError("unknown_task", f"unknown task '{task}'; expected one of {TASKS}")

    blocks = {}
    for section, keys in SCHEMA.items():
        given = raw.get(section, {})
        for key in given:
            if key not in keys:
                raise ScenarioError(
                    "unknown_key", f"unknown key '{key}' in section [{section}]"
                )
        block = _Block()
        for key, (parse, default) in keys.items():
            if key in given:
                try:
                    block[key] = parse(given[key])
                except ValueError as exc:
                    raise ScenarioError(
                        "invalid_value", f"[{section}] {key} = {given[key]!r}: {exc}"
                    ) from exc
            else:
                block[key] = None if default is REQUIRED else default
        for key, (parse, default) in keys.items():
            if default is REQUIRED and block[key] is None:
                raise ScenarioError(
                    "missing_key", f"section [{section}] requires key '{key}'"
                )
        blocks[section] = block

    gating = blocks["gating"]
    if gating.order is not None and gating.superposition is not None:
        raise ScenarioError(
            "conflicting_keys", "[gating] give either 'order' or 'superposition'"
        )
    if gating.order is None and gating.superposition is None:
        gating["order"] = 0
    if gating.superposition is not None and len(gating.superposition) > MAX_HERMITE_ORDER + 1:
        raise ScenarioError(
            "invalid_value",
            f"[gating] superposition supports at most {MAX_HERMITE_ORDER + 1} coefficients",
        )

    inp = blocks["input"]
    width_keys = [k for k in ("mode_width", "mode_fwhm_nm", "mode_fwhm_scale") if inp[k] is not None]
    if len(width_keys) > 1:
        raise ScenarioError(
            "conflicting_keys", f"[input] width keys conflict: {width_keys}"
        )
    if not width_keys:
        inp["mode_width"] = "fitted"

    gate = blocks["gate"]
    if gate.theta is not None and gate.power is not None:
        raise ScenarioError("conflicting_keys", "[gate] give either 'theta' or 'power'")

    pdc = blocks["pdc"]
    if pdc.n_modes > MAX_HERMITE_ORDER + 1:
        raise ScenarioError(
            "invalid_value", f"[pdc] n_modes cannot exceed {MAX_HERMITE_ORDER + 1}"
        )

    prefix = blocks["output"].prefix or task
    return Scenario(
        task=task,
        material=blocks["material"],
        gating=gating,
        input=inp,
        gate=gate,
        pdc=pdc,
        output_prefix=prefix,
        raw={section: dict(keys) for section, keys in raw.items()},
    )


# ---------------------------------------------------------------------------
# deterministic formatting and writers


def _fmt(value):
    """Shortest round-trip decimal representation of one scalar."""
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return repr(float(value))


def _sanitize(obj):
    """Make numpy containers JSON-serializable, recursively."""
    if isinstance(obj, dict):
        return {k: _sanitize(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_sanitize(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return [_sanitize(v) for v in obj.tolist()]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return float(obj)
    return obj


def write_json(path, payload):
    text = json.dumps(_sanitize(payload), sort_keys=True, indent=2)
    Path(path).write_text(text + "\n")


def _meta_line(meta):
    parts = [f"{k}={_fmt(v) if isinstance(v, (int, float, np.floating, np.integer, bool)) else v}"
             for k, v in sorted(meta.items())]
    return "# " + " ".join(parts)


def write_complex_matrix_csv(path, values, meta):
    """Complex matrix as paired re/im columns, one matrix row per line."""
    n_cols = values.shape[1]
    header = ",".join(f"re{j},im{j}" for j in range(n_cols))
    lines = [_meta_line(meta), header]
    re_part = np.real(values)
    im_part = np.imag(values)
    for i in range(values.shape[0]):
        row = np.empty(2 * n_cols)
        row[0::2] = re_part[i]
        row[1::2] = im_part[i]
        lines.append(",".join(map(repr, row.tolist())))
    Path(path).write_text("\n".join(lines) + "\n")


def write_real_matrix_csv(path, values, meta, col_prefix="c"):
    header = ",".join(f"{col_prefix}{j}" for j in range(values.shape[1]))
    lines = [_meta_line(meta), header]
    for i in range(values.shape[0]):
        lines.append(",".join(map(repr, np.asarray(values[i], dtype=float).tolist())))
    Path(path).write_text("\n".join(lines) + "\n")


def write_table_csv(path, columns, meta):
    """Named columns of equal length; `columns` is a list of (name, array)."""
    names = [name for name, _ in columns]
    arrays = [np.asarray(a, dtype=float).tolist() for _, a in columns]
    lines = [_meta_line(meta), ",".join(names)]
    for i in range(len(arrays[0])):
        lines.append(",".join(repr(a[i]) for a in arrays))
    Path(path).write_text("\n".join(lines) + "\n")


# ---------------------------------------------------------------------------
# assembly shared by the task runners


def _coverage_radius(order):
    return max(6.0, float(np.sqrt(2.0 * order + 1.0)) + 4.0)


@dataclass
class Assembly:
    gate_sigma: float
    gate_grid: FrequencyGrid
    input_grid: FrequencyGrid
    output_grid: FrequencyGrid  # None selects the default combined window
    gating: object
    spec: PhasematchingSpec
    rank: int


def _assemble(scn, resolution=None, min_input_order=0):
    gating_blk = scn.gating
    input_blk = scn.input
    material = scn.material

    sigma_g = fwhm_to_sigma(
        wavelength_fwhm_to_omega_fwhm(gating_blk.fwhm_nm, gating_blk.center_nm)
    )
    w_g0 = wavelength_to_omega(gating_blk.center_nm)
    w_i0 = wavelength_to_omega(input_blk.center_nm)

    if gating_blk.superposition is not None:
        top_gate_order = len(gating_blk.superposition) - 1
    else:
        top_gate_order = gating_blk.order
    span_g = max(gating_blk.span_sigmas, 2.0 * (_coverage_radius(top_gate_order) + 2.0))
    span_i = max(input_blk.span_sigmas, 2.0 * (_coverage_radius(min_input_order) + 2.0))

    n_gate = resolution or gating_blk.n_points
    n_input = resolution or input_blk.n_points
    gate_grid = FrequencyGrid(w_g0, span_g * sigma_g, n_gate)
    input_grid = FrequencyGrid(w_i0, span_i * sigma_g, n_input)

    spec = PhasematchingSpec(
        length=material.length_mm * 1e-3,
        poling_period=material.poling_period_um * 1e-6,
        temperature=material.temperature_c,
        qpm_order=material.qpm_order,
        delta_k_offset=material.delta_k_offset_rad_per_m,
    )
    if material.calibrate != "none":
        spec = calibrated_spec(
            spec,
            input_blk.center_nm,
            gating_blk.center_nm,
            match_group_velocity=(material.calibrate == "group"),
        )

    if gating_blk.superposition is not None:
        modes = [
            hermite_mode(ModeSpec(k, w_g0, sigma_g), gate_grid)
            for k in range(len(gating_blk.superposition))
        ]
        gating = superpose(gating_blk.superposition, modes)
    else:
        gating = hermite_mode(ModeSpec(gating_blk.order, w_g0, sigma_g), gate_grid)

    output_grid = None
    if input_blk.sum_span_nm is not None:
        w_sum = w_i0 + w_g0
        lam_sum = 2.0 * np.pi * C / w_sum
        span_sum = 2.0 * np.pi * C * (input_blk.sum_span_nm * 1e-9) / lam_sum**2
        output_grid = FrequencyGrid(
            w_sum, span_sum, input_blk.sum_n_points or n_input
        )

    rank = min(DEFAULT_RANK, n_input, (output_grid or input_grid).n_points)
    return Assembly(
        gate_sigma=sigma_g,
        gate_grid=gate_grid,
        input_grid=input_grid,
        output_grid=output_grid,
        gating=gating,
        spec=spec,
        rank=rank,
    )


def _build_kernel(asm):
    return build_transfer(asm.gating, asm.spec, asm.input_grid, asm.output_grid)


def _input_sigma(scn, asm, decomposition=None):
    """Comparison/source mode width per the scenario's input width keys."""
    blk = scn.input
    if blk.mode_fwhm_nm is not None:
        return fwhm_to_sigma(
            wavelength_fwhm_to_omega_fwhm(blk.mode_fwhm_nm, blk.center_nm)
        )
    if blk.mode_fwhm_scale is not None:
        return blk.mode_fwhm_scale * asm.gate_sigma
    if blk.mode_width == "matched":
        return asm.gate_sigma
    if decomposition is None:
        return None  # caller fits downstream
    return fit_input_width(decomposition, asm.input_grid.center, asm.gate_sigma)


def _grid_meta(grid, name):
    return {
        f"{name}_center_rad_per_s": grid.center,
        f"{name}_span_rad_per_s": grid.span,
        f"{name}_n": grid.n_points,
    }


def _resolve_theta(scn, decomposition):
    g = scn.gate
    if g.theta == "optimal":
        return optimal_coupling(decomposition, 0)
    if g.theta is not None:
        return float(g.theta)
    if g.power is not None:
        return GateSpec(power=g.power, gamma=g.gamma).theta
    return optimal_coupling(decomposition, 0)


# ---------------------------------------------------------------------------
# task runners


def _run_phasematch(scn, out_dir, resolution):
    asm = _assemble(scn, resolution)
    input_grid = asm.input_grid
    output_grid = asm.output_grid or default_output_grid(input_grid, asm.gate_grid)
    dk = phase_mismatch(
        input_grid.samples[:, None], output_grid.samples[None, :], asm.spec
    )
    phi = phasematching_amplitude(dk, asm.spec.length)

    lam_in_um = scn.input.center_nm * 1e-3
    lam_gate_um = scn.gating.center_nm * 1e-3
    lam_sum_nm = sum_frequency(scn.input.center_nm, scn.gating.center_nm)
    grating = asm.spec.grating_wavenumber
    results = {
        "delta_k_offset_rad_per_m": asm.spec.delta_k_offset,
        "offset_fraction_of_grating": asm.spec.delta_k_offset / grating,
        "group_offset_s_per_m": asm.spec.group_offset,
        "ridge_angle_deg": ridge_angle_deg(
            scn.input.center_nm, scn.gating.center_nm, asm.spec
        ),
        "nominal_sum_nm": lam_sum_nm,
        "pm_fwhm_delta_k_rad_per_m": 2.0 * 2.7831 / asm.spec.length,
        "refractive_index_input": refractive_index(lam_in_um, asm.spec.temperature),
        "refractive_index_gate": refractive_index(lam_gate_um, asm.spec.temperature),
        "refractive_index_sum": refractive_index(lam_sum_nm * 1e-3, asm.spec.temperature),
        "group_index_input": group_index(lam_in_um, asm.spec.temperature),
        "group_index_gate": group_index(lam_gate_um, asm.spec.temperature),
    }
    meta = {"content": "phasematching_amplitude", **_grid_meta(input_grid, "row"),
            **_grid_meta(output_grid, "col")}
    matrix_path = out_dir / f"{scn.output_prefix}_phasematching.csv"
    write_complex_matrix_csv(matrix_path, phi, meta)
    summary_path = out_dir / f"{scn.output_prefix}_summary.json"
    write_json(summary_path, {"task": scn.task, "results": results, "scenario": scn.raw})
    return [matrix_path, summary_path]


def _run_transfer(scn, out_dir, resolution):
    asm = _assemble(scn, resolution)
    kernel = _build_kernel(asm)
    results = {
        "clipped_fraction": kernel.clipped_fraction,
        "boundary_fraction": kernel.boundary_fraction,
        "frobenius_norm": kernel.frobenius_norm,
        "nominal_sum_nm": sum_frequency(scn.input.center_nm, scn.gating.center_nm),
        "output_mass_center_nm": omega_to_wavelength(kernel.output_mass_center()),
    }
    meta = {"content": "transfer_kernel", **_grid_meta(kernel.input_grid, "row"),
            **_grid_meta(kernel.output_grid, "col")}
    matrix_path = out_dir / f"{scn.output_prefix}_kernel.csv"
    write_complex_matrix_csv(matrix_path, kernel.values, meta)
    summary_path = out_dir / f"{scn.output_prefix}_summary.json"
    write_json(summary_path, {"task": scn.task, "results": results, "scenario": scn.raw})
    return [matrix_path, summary_path]


def _run_schmidt(scn, out_dir, resolution, n_modes_exported=4):
    asm = _assemble(scn, resolution)
    kernel = _build_kernel(asm)
    decomposition = schmidt_decompose(kernel, rank=asm.rank)
    kappa = decomposition.coefficients
    results = {
        "coefficients": kappa[: asm.rank],
        "kappa0_squared": float(kappa[0] ** 2),
        "schmidt_number": schmidt_number(decomposition),
        "purity": purity(decomposition),
        "tail_mass": decomposition.tail_mass(),
        "unstable": decomposition.unstable,
    }
    paths = []
    m = min(n_modes_exported, asm.rank)
    for name, modes, grid in (
        ("input_modes", decomposition.input_modes, decomposition.input_grid),
        ("output_modes", decomposition.output_modes, decomposition.output_grid),
    ):
        stacked = np.stack([mode.values for mode in modes[:m]], axis=1)
        meta = {"content": name, **_grid_meta(grid, "row"), "n_modes": m}
        path = out_dir / f"{scn.output_prefix}_{name}.csv"
        write_complex_matrix_csv(path, stacked, meta)
        paths.append(path)
    summary_path = out_dir / f"{scn.output_prefix}_summary.json"
    write_json(summary_path, {"task": scn.task, "results": results, "scenario": scn.raw})
    return paths + [summary_path]


def _run_efficiency(scn, out_dir, resolution):
    asm = _assemble(scn, resolution)
    kernel = _build_kernel(asm)
    decomposition = schmidt_decompose(kernel, rank=asm.rank)
    curve = efficiency_curve(decomposition, scn.gate.theta_max, scn.gate.n_steps)
    columns = [("theta", curve.theta)]
    for k in range(curve.eta.shape[1]):
        columns.append((f"eta{k}", curve.eta[:, k]))
    meta = {"content": "efficiency_curve", "n_steps": scn.gate.n_steps,
            "theta_max": scn.gate.theta_max}
    table_path = out_dir / f"{scn.output_prefix}_efficiency.csv"
    write_table_csv(table_path, columns, meta)
    results = {
        "coefficients": decomposition.coefficients[: curve.eta.shape[1]],
        "theta_optimal": optimal_coupling(decomposition, 0),
        "schmidt_number": schmidt_number(decomposition),
    }
    summary_path = out_dir / f"{scn.output_prefix}_summary.json"
    write_json(summary_path, {"task": scn.task, "results": results, "scenario": scn.raw})
    return [table_path, summary_path]


def _run_selectivity(scn, out_dir, resolution):
    asm = _assemble(scn, resolution)
    fixed_sigma = _input_sigma(scn, asm, decomposition=None)
    matrix = mode_overlap_matrix(
        asm.spec,
        asm.gate_grid.center,
        asm.gate_sigma,
        asm.input_grid.center,
        input_sigma=fixed_sigma,
        max_gate_order=scn.gating.max_order,
        max_input_order=scn.input.max_order,
        n_points=resolution or scn.input.n_points,
    )
    entries = matrix.entries
    square = min(entries.shape)
    diag = np.diag(entries[:square, :square])
    off_sums = np.array([
        entries[k].sum() - (entries[k, k] if k < entries.shape[1] else 0.0)
        for k in range(entries.shape[0])
    ])
    results = {
        "input_sigma_rad_per_s": matrix.input_sigma,
        "fwhm_ratio": matrix.fwhm_ratio,
        "matched": matrix.matched,
        "dominant_coefficients": matrix.dominant_coefficients,
        "diagonal": diag,
        "off_target_sums": off_sums,
        "row_deficit": matrix.row_deficit,
    }
    meta = {
        "content": "overlap_matrix",
        "rows": "gating_order",
        "cols": "input_order",
        "input_sigma_rad_per_s": matrix.input_sigma,
        "fwhm_ratio": matrix.fwhm_ratio,
        "matched": matrix.matched,
    }
    matrix_path = out_dir / f"{scn.output_prefix}_overlap.csv"
    write_real_matrix_csv(matrix_path, entries, meta, col_prefix="l")
    summary_path = out_dir / f"{scn.output_prefix}_summary.json"
    write_json(summary_path, {"task": scn.task, "results": results, "scenario": scn.raw})
    return [matrix_path, summary_path]


def _run_herald(scn, out_dir, resolution):
    asm = _assemble(scn, resolution, min_input_order=scn.pdc.n_modes - 1)
    kernel = _build_kernel(asm)
    decomposition = schmidt_decompose(kernel, rank=asm.rank)
    theta = _resolve_theta(scn, decomposition)

    if scn.pdc.coefficients is not None:
        c = np.sqrt(
            np.asarray(scn.pdc.coefficients, dtype=float) ** 2
            / np.sum(np.asarray(scn.pdc.coefficients, dtype=float) ** 2)
        )
    else:
        c = geometric_pdc_coefficients(scn.pdc.schmidt_number, scn.pdc.n_modes)

    source_sigma = _input_sigma(scn, asm, decomposition)
    scenario = build_herald_scenario(
        decomposition, GateSpec(theta=theta), c, asm.input_grid.center, source_sigma
    )
    results = {
        "source_purity": float(np.sum(c**4)),
        "heralded_purity": herald_purity(scenario),
        "theta": theta,
        "source_sigma_rad_per_s": source_sigma,
        "pdc_coefficients": c,
        "kappa": decomposition.coefficients[:8],
    }
    meta = {"content": "conversion_matrix", "rows": "gate_schmidt_mode",
            "cols": "pdc_mode", "theta": theta}
    matrix_path = out_dir / f"{scn.output_prefix}_conversion.csv"
    write_complex_matrix_csv(matrix_path, scenario.conversion_matrix, meta)
    summary_path = out_dir / f"{scn.output_prefix}_summary.json"
    write_json(summary_path, {"task": scn.task, "results": results, "scenario": scn.raw})
    return [matrix_path, summary_path]


_RUNNERS = {
    "phasematch": _run_phasematch,
    "transfer": _run_transfer,
    "schmidt": _run_schmidt,
    "efficiency": _run_efficiency,
    "selectivity": _run_selectivity,
    "herald": _run_herald,
}


def run_scenario(scn, out_dir, resolution=None):
    """Execute one validated scenario; returns the written paths."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    return _RUNNERS[scn.task](scn, out_dir, resolution)


# ---------------------------------------------------------------------------
# sweeps


def _sanitize_token(value):
    return re.sub(r"[^A-Za-z0-9.+-]", "_", str(value))


def sweep_scenario(raw, param_path, values, out_dir, resolution=None):
    """Run the scenario once per parameter value; returns all written paths.

    `param_path` is section.key into the scenario schema; values are the
    raw strings to substitute.  An index JSON maps each value to its
    artifact file names.
    """
    if not values:
        raise ScenarioError("empty_values", "sweep needs at least one value")
    if "." not in param_path:
        raise ScenarioError("unknown_param", f"parameter path '{param_path}' is not section.key")
    section, key = param_path.split(".", 1)
    if section not in SCHEMA or key not in SCHEMA[section]:
        raise ScenarioError("unknown_param", f"unknown parameter path '{param_path}'")
    if SCHEMA[section][key][0] in (_parse_complex_list, _parse_float_list):
        raise ScenarioError("unknown_param", f"'{param_path}' is not a scalar field")

    base = validate_scenario(raw)
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    index = {"parameter": param_path, "values": [str(v) for v in values], "artifacts": {}}
    written = []
    for value in values:
        raw_i = {sec: dict(kv) for sec, kv in raw.items()}
        raw_i.setdefault(section, {})[key] = str(value)
        scn = validate_scenario(raw_i)
        scn.output_prefix = f"{base.output_prefix}_{key}-{_sanitize_token(value)}"
        paths = run_scenario(scn, out_dir, resolution)
        index["artifacts"][str(value)] = [p.name for p in paths]
        written.extend(paths)

    index_path = out_dir / f"{base.output_prefix}_sweep_index.json"
    write_json(index_path, index)
    return written + [index_path]


def preset_text(name):
    if name not in PRESETS:
        raise ScenarioError(
            "unknown_preset",
            f"unknown preset '{name}'; available: {', '.join(sorted(PRESETS))}",
        )
    return PRESETS[name]
