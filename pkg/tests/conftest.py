import json
import sys
import time
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

import qpg


@pytest.fixture(scope="session")
def engineered():
    """Paper preset, u0 gating, 512 points: (recipe, decomposition, kernel)."""
    recipe = qpg.preset_engineered()
    decomposition, kernel = recipe.decompose()
    return recipe, decomposition, kernel


@pytest.fixture(scope="session")
def engineered_hi_res(engineered):
    recipe, _, _ = engineered
    decomposition, kernel = recipe.decompose(n_points=1024)
    return decomposition, kernel


@pytest.fixture(scope="session")
def nonengineered():
    recipe = qpg.preset_nonengineered()
    decomposition, kernel = recipe.decompose()
    return recipe, decomposition, kernel


@pytest.fixture(scope="session")
def fitted_sigma(engineered):
    recipe, decomposition, _ = engineered
    return qpg.fit_input_width(decomposition, recipe.input_center_omega, recipe.gate_sigma)


def run_preset(name, out_dir, resolution=None):
    raw = qpg.parse_scenario_text(qpg.PRESETS[name])
    scn = qpg.validate_scenario(raw)
    t0 = time.perf_counter()
    paths = qpg.run_scenario(scn, out_dir, resolution=resolution)
    elapsed = time.perf_counter() - t0
    summary = None
    for p in paths:
        if p.name.endswith("_summary.json"):
            summary = json.loads(Path(p).read_text())
    return {"paths": paths, "summary": summary, "elapsed": elapsed}


def read_matrix_csv(path, complex_pairs=False):
    data = np.loadtxt(path, delimiter=",", skiprows=2, ndmin=2)
    if complex_pairs:
        return data[:, 0::2] + 1j * data[:, 1::2]
    return data


@pytest.fixture(scope="session")
def fig4_matched(tmp_path_factory):
    out = tmp_path_factory.mktemp("fig4_matched")
    result = run_preset("paper_fig4_matched", out)
    result["entries"] = read_matrix_csv(out / "fig4_matched_overlap.csv")
    return result


@pytest.fixture(scope="session")
def fig4_mismatched(tmp_path_factory):
    out = tmp_path_factory.mktemp("fig4_mismatched")
    result = run_preset("paper_fig4_mismatched", out)
    result["entries"] = read_matrix_csv(out / "fig4_mismatched_overlap.csv")
    return result
