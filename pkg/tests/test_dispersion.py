import numpy as np
import pytest

import qpg
from qpg import (
    DomainError,
    PhasematchingSpec,
    calibrate_group_offset,
    calibrate_offset,
    calibrated_spec,
    group_index,
    phase_mismatch,
    phasematching_amplitude,
    refractive_index,
    wavelength_to_omega,
)
from qpg.dispersion import _sinc, wavenumber

W_IN = wavelength_to_omega(1550.0)
W_GATE = wavelength_to_omega(870.0)
W_OUT = W_IN + W_GATE


def paper_spec(length=50e-3, **kw):
    return PhasematchingSpec(length=length, poling_period=4.2e-6, temperature=175.0, **kw)


# --- Sellmeier series -------------------------------------------------------


def test_index_at_reference_temperature():
    # pinned by evaluating the Jundt series independently before the build
    assert refractive_index(1.55, 24.5) == pytest.approx(2.1378613831803728, rel=1e-12)


def test_index_at_operating_temperature():
    assert refractive_index(1.55, 175.0) == pytest.approx(2.1449114568943313, rel=1e-12)


def test_index_in_physical_window():
    lams = np.linspace(0.4, 2.0, 33)
    n = refractive_index(lams, 120.0)
    assert np.all(n > 1.5) and np.all(n < 3.0)


def test_index_monotone_decreasing_in_telecom_band():
    lams = np.linspace(0.9, 1.6, 51)
    n = refractive_index(lams, 80.0)
    assert np.all(np.diff(n) < 0)


def test_reference_temperature_kills_thermal_terms():
    # f(24.5 C) = 0: the series must agree with one whose b-coefficients are zeroed
    import dataclasses

    frozen = dataclasses.replace(qpg.CONGRUENT_LN_E, b1=0.0, b2=0.0, b3=0.0, b4=0.0)
    for lam in (0.6, 1.0, 1.55):
        assert refractive_index(lam, 24.5) == pytest.approx(
            frozen.index(lam, 100.0), rel=1e-14
        )


@pytest.mark.parametrize("lam,temp", [(0.3, 100.0), (2.5, 100.0), (1.0, 10.0), (1.0, 300.0)])
def test_index_domain_errors(lam, temp):
    with pytest.raises(DomainError):
        refractive_index(lam, temp)


def test_index_smoothness():
    h1, h2 = 1e-4, 5e-5
    for lam in (0.7, 1.2, 1.8):
        d1 = (refractive_index(lam + h1, 50.0) - refractive_index(lam - h1, 50.0)) / (2 * h1)
        d2 = (refractive_index(lam + h2, 50.0) - refractive_index(lam - h2, 50.0)) / (2 * h2)
        assert abs(d1 - d2) / abs(d1) < 1e-6


# --- group index ------------------------------------------------------------


def test_group_index_exceeds_phase_index_in_normal_dispersion():
    for lam in (0.6, 0.87, 1.2, 1.55):
        assert group_index(lam, 175.0) > refractive_index(lam, 175.0)


def test_group_index_pinned_value():
    assert group_index(1.55, 175.0) == pytest.approx(2.1903823525, rel=1e-9)
    assert group_index(0.87, 175.0) == pytest.approx(2.2557395178, rel=1e-9)


def test_group_index_step_converged():
    a = group_index(1.55, 175.0, step_um=1e-4)
    b = group_index(1.55, 175.0, step_um=5e-5)
    assert abs(a - b) < 1e-7


# --- wavenumber and mismatch ------------------------------------------------


def test_wavenumber_positive_and_increasing():
    omegas = np.linspace(wavelength_to_omega(1900.0), wavelength_to_omega(450.0), 64)
    k = wavenumber(omegas, 175.0)
    assert np.all(k > 0)
    assert np.all(np.diff(k) > 0)


def test_phase_mismatch_zero_after_calibration():
    spec = calibrated_spec(paper_spec(), 1550.0, 870.0)
    assert abs(phase_mismatch(W_IN, W_OUT, spec)) < 1e-6


def test_phase_mismatch_monotone_along_output():
    spec = calibrated_spec(paper_spec(), 1550.0, 870.0)
    w_out = np.linspace(W_OUT - 2e13, W_OUT + 2e13, 101)
    dk = phase_mismatch(W_IN, w_out, spec)
    assert np.all(np.diff(dk) > 0)


def test_phase_mismatch_qpm_order_shift():
    base = paper_spec()
    third = paper_spec(qpm_order=3)
    shift = phase_mismatch(W_IN, W_OUT, third) - phase_mismatch(W_IN, W_OUT, base)
    assert shift == pytest.approx(-2.0 * 2.0 * np.pi / 4.2e-6, rel=1e-12)


def test_phase_mismatch_preconditions():
    spec = paper_spec()
    with pytest.raises(DomainError):
        phase_mismatch(W_OUT, W_IN, spec)  # omega_out < omega_in
    with pytest.raises(DomainError):
        phase_mismatch(-1.0, W_OUT, spec)


def test_qpm_order_must_be_odd():
    with pytest.raises(DomainError):
        paper_spec(qpm_order=2)


# --- calibration ------------------------------------------------------------


def test_calibrate_offset_pinned_and_bounded():
    # oracle value for bulk Jundt at the reference operating point; the bulk
    # series needs 48% of the grating vector (waveguide dispersion absorbs it)
    offset = calibrate_offset(1550.0, 870.0, paper_spec())
    assert offset == pytest.approx(717633.2794643766, rel=1e-9)
    assert abs(offset) < 0.6 * 2.0 * np.pi / 4.2e-6


def test_calibrate_offset_ignores_existing_offset():
    a = calibrate_offset(1550.0, 870.0, paper_spec())
    b = calibrate_offset(1550.0, 870.0, paper_spec(delta_k_offset=123.0))
    assert a == b


def test_calibrate_group_offset_pinned():
    g = calibrate_group_offset(1550.0, 870.0, paper_spec())
    assert g == pytest.approx(-2.1800803698311166e-10, rel=1e-9)


def test_ridge_angle_diagnostic():
    uncal = calibrated_spec(paper_spec(), 1550.0, 870.0, match_group_velocity=False)
    cal = calibrated_spec(paper_spec(), 1550.0, 870.0, match_group_velocity=True)
    assert qpg.ridge_angle_deg(1550.0, 870.0, uncal) == pytest.approx(-19.53, abs=0.3)
    assert abs(qpg.ridge_angle_deg(1550.0, 870.0, cal)) < 0.01


# --- phasematching amplitude ------------------------------------------------


def test_phasematching_amplitude_special_points():
    length = 50e-3
    assert phasematching_amplitude(0.0, length) == pytest.approx(1.0 + 0.0j, abs=1e-15)
    first_zero = 2.0 * np.pi / length
    assert abs(phasematching_amplitude(first_zero, length)) < 1e-12
    half_pi = np.pi / length
    assert abs(phasematching_amplitude(half_pi, length)) == pytest.approx(
        2.0 / np.pi, rel=1e-12
    )


def test_phasematching_amplitude_bounded():
    dk = np.linspace(-5e4, 5e4, 4001)
    phi = phasematching_amplitude(dk, 50e-3)
    assert np.max(np.abs(phi)) <= 1.0 + 1e-12
    assert np.argmax(np.abs(phi)) == 2000  # global maximum at delta k = 0


def _pm_intensity_fwhm(length):
    dk = np.linspace(-8.0 / length, 8.0 / length, 200001)
    inten = np.abs(phasematching_amplitude(dk, length)) ** 2
    above = dk[inten >= 0.5]
    return above[-1] - above[0]


def test_phasematching_fwhm_scaling():
    for length in (10e-3, 50e-3):
        fwhm = _pm_intensity_fwhm(length)
        assert fwhm == pytest.approx(2.0 * 2.7831 / length, rel=0.01)
    assert _pm_intensity_fwhm(100e-3) == pytest.approx(
        _pm_intensity_fwhm(50e-3) / 2.0, rel=1e-4
    )


def test_sinc_series_branch_matches_direct():
    for x in (1e-5, 9.9e-5, 1.1e-4, 1e-3):
        assert _sinc(x) == pytest.approx(np.sin(x) / x, rel=1e-12)
    assert _sinc(0.0) == 1.0


def test_phasematching_length_domain():
    with pytest.raises(DomainError):
        phasematching_amplitude(0.0, 0.0)
