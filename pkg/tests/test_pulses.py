import numpy as np
import pytest

from oracles import gaussian_amplitude, rectangle_norm

import qpg
from qpg import (
    DomainError,
    FrequencyGrid,
    GridMismatchError,
    ModeSpec,
    SpectralAmplitude,
    TruncationError,
    fwhm_to_sigma,
    hermite_mode,
    overlap,
    sigma_to_fwhm,
    sum_frequency,
    superpose,
    wavelength_fwhm_to_omega_fwhm,
    wavelength_to_omega,
)

SIGMA = 9.49058679137695e11  # 0.635 nm intensity FWHM at 870 nm


def make_grid(span_sigmas=20.0, n=512, center=wavelength_to_omega(1550.0), sigma=SIGMA):
    return FrequencyGrid(center, span_sigmas * sigma, n)


# --- unit conversions -------------------------------------------------------


def test_wavelength_to_omega_1550():
    assert wavelength_to_omega(1550.0) == pytest.approx(1.215259075683131e15, rel=1e-12)


def test_wavelength_to_omega_870():
    # direct evaluation of 2 pi c / lambda
    assert wavelength_to_omega(870.0) == pytest.approx(2.1651167440331645e15, rel=1e-12)


def test_wavelength_omega_round_trip():
    assert qpg.omega_to_wavelength(wavelength_to_omega(1550.0)) == pytest.approx(
        1550.0, rel=1e-14
    )


@pytest.mark.parametrize("bad", [0.0, -1.0])
def test_wavelength_to_omega_domain(bad):
    with pytest.raises(DomainError):
        wavelength_to_omega(bad)
    with pytest.raises(DomainError):
        qpg.omega_to_wavelength(bad)


def test_sum_frequency_paper_point():
    assert sum_frequency(1550.0, 870.0) == pytest.approx(557.23, abs=0.01)


def test_sum_frequency_symmetry():
    assert sum_frequency(1310.0, 1310.0) == pytest.approx(655.0, rel=1e-14)


def test_sum_frequency_off_resonant_gate():
    assert sum_frequency(1000.0, 1000000.0) == pytest.approx(999.000999000999, rel=1e-12)


def test_sum_frequency_domain():
    with pytest.raises(DomainError):
        sum_frequency(-1550.0, 870.0)
    with pytest.raises(DomainError):
        sum_frequency(1550.0, 0.0)


def test_fwhm_conversion_paper_gate():
    dw = wavelength_fwhm_to_omega_fwhm(0.635, 870.0)
    assert dw == pytest.approx(1.580286359150643e12, rel=1e-12)
    assert fwhm_to_sigma(dw) == pytest.approx(9.490586791376948e11, rel=1e-12)


def test_fwhm_sigma_definition():
    # fwhm = 2 sqrt(ln 2) -> sigma = 1; half-intensity points at +- sqrt(ln 2)
    sigma = fwhm_to_sigma(2.0 * np.sqrt(np.log(2.0)))
    assert sigma == pytest.approx(1.0, rel=1e-14)
    x_half = np.sqrt(np.log(2.0))
    h = qpg.hermite_function(0, np.array([0.0, x_half]))
    assert (h[1] / h[0]) ** 2 == pytest.approx(0.5, rel=1e-12)
    assert sigma_to_fwhm(sigma) == pytest.approx(2.0 * np.sqrt(np.log(2.0)), rel=1e-14)


def test_fwhm_to_sigma_linearity():
    assert fwhm_to_sigma(2.0e12) == pytest.approx(2.0 * fwhm_to_sigma(1.0e12), rel=1e-14)


def test_fwhm_domain():
    with pytest.raises(DomainError):
        fwhm_to_sigma(0.0)
    with pytest.raises(DomainError):
        wavelength_fwhm_to_omega_fwhm(-0.1, 870.0)


# --- grids ------------------------------------------------------------------


def test_grid_samples_uniform_increasing():
    grid = make_grid(n=257)
    steps = np.diff(grid.samples)
    assert np.all(steps > 0)
    assert np.max(np.abs(steps - grid.spacing)) < 1e-9 * grid.spacing
    assert grid.samples[0] == pytest.approx(grid.center - grid.span / 2, rel=1e-15)
    assert grid.samples[-1] == pytest.approx(grid.center + grid.span / 2, rel=1e-15)


def test_grid_minimum_points():
    with pytest.raises(DomainError):
        FrequencyGrid(1e15, 1e12, 15)
    with pytest.raises(DomainError):
        FrequencyGrid(1e15, 0.0, 64)


def test_spectral_amplitude_length_checked():
    grid = make_grid(n=64)
    with pytest.raises(GridMismatchError):
        SpectralAmplitude(grid, np.ones(63))


def test_mode_spec_validation():
    with pytest.raises(DomainError):
        ModeSpec(-1, 1e15, 1e12)
    with pytest.raises(DomainError):
        ModeSpec(21, 1e15, 1e12)
    with pytest.raises(DomainError):
        ModeSpec(0, 1e15, 0.0)


# --- Hermite modes ----------------------------------------------------------


def test_hermite_orthonormality_to_order_10():
    grid = make_grid(span_sigmas=24.0, n=1024)
    modes = [hermite_mode(ModeSpec(k, grid.center, SIGMA), grid) for k in range(11)]
    for k in range(11):
        for l in range(k, 11):
            expect = 1.0 if k == l else 0.0
            assert abs(overlap(modes[k], modes[l]) - expect) < 1e-8


def test_hermite_parity_exact_on_symmetric_grid():
    grid = make_grid(span_sigmas=24.0, n=512)
    modes = [hermite_mode(ModeSpec(k, grid.center, SIGMA), grid) for k in range(6)]
    for k in range(6):
        for l in range(6):
            if (k + l) % 2 == 1:
                assert abs(overlap(modes[k], modes[l])) < 1e-12


def test_hermite_u1_zero_at_center():
    grid = make_grid(n=513)  # odd count puts a sample exactly at the center
    u1 = hermite_mode(ModeSpec(1, grid.center, SIGMA), grid)
    assert u1.values[256] == 0.0


def test_hermite_u0_peak_value():
    grid = make_grid(n=513)
    u0 = hermite_mode(ModeSpec(0, grid.center, SIGMA), grid)
    # quadrature oracle: normalize the analytic Gaussian on the same grid
    g = gaussian_amplitude(grid.samples, grid.center, SIGMA)
    g = g / rectangle_norm(g, grid.spacing)
    assert np.argmax(np.abs(u0.values)) == 256
    assert abs(u0.values[256]) == pytest.approx(g[256], rel=1e-9)
    assert abs(u0.values[256]) == pytest.approx((np.pi * SIGMA**2) ** -0.25, rel=1e-9)


def test_hermite_truncation_error_carries_lost_norm():
    # +-2 sigma window: lost intensity mass is erfc(2) ~ 4.7e-3
    grid = make_grid(span_sigmas=4.0)
    with pytest.raises(TruncationError) as err:
        hermite_mode(ModeSpec(0, grid.center, SIGMA), grid)
    assert err.value.lost_norm == pytest.approx(4.678e-3, rel=0.05)

    grid16 = make_grid(span_sigmas=16.0)
    with pytest.raises(TruncationError):
        hermite_mode(ModeSpec(10, grid16.center, SIGMA), grid16)  # needs 8.58 sigma


def test_hermite_normalization():
    grid = make_grid(span_sigmas=26.0, n=777)
    for k in (0, 7, 20):
        u = hermite_mode(ModeSpec(k, grid.center, SIGMA), grid)
        assert abs(u.norm - 1.0) < 1e-9


# --- superpose and overlap --------------------------------------------------


def test_superpose_identity():
    grid = make_grid()
    u0 = hermite_mode(ModeSpec(0, grid.center, SIGMA), grid)
    out = superpose([1.0], [u0])
    assert np.allclose(out.values, u0.values, rtol=0, atol=1e-15)


def test_superpose_balanced_pair():
    grid = make_grid()
    u0 = hermite_mode(ModeSpec(0, grid.center, SIGMA), grid)
    u1 = hermite_mode(ModeSpec(1, grid.center, SIGMA), grid)
    s = superpose([1 / np.sqrt(2), 1 / np.sqrt(2)], [u0, u1])
    assert s.norm == pytest.approx(1.0, abs=1e-9)
    assert abs(overlap(s, u0)) == pytest.approx(1 / np.sqrt(2), abs=1e-9)
    assert abs(overlap(s, u1)) == pytest.approx(1 / np.sqrt(2), abs=1e-9)


def test_superpose_degenerate_input():
    grid = make_grid()
    u0 = hermite_mode(ModeSpec(0, grid.center, SIGMA), grid)
    out = superpose([1.0, 1.0], [u0, u0])
    assert np.allclose(out.values, u0.values, rtol=1e-12, atol=0)


def test_superpose_errors():
    grid = make_grid()
    other = make_grid(n=513)
    u_a = hermite_mode(ModeSpec(0, grid.center, SIGMA), grid)
    u_b = hermite_mode(ModeSpec(0, other.center, SIGMA), other)
    with pytest.raises(GridMismatchError):
        superpose([1.0, 1.0], [u_a, u_b])
    with pytest.raises(DomainError):
        superpose([0.0, 0.0], [u_a, u_a])
    with pytest.raises(DomainError):
        superpose([1.0, -1.0], [u_a, u_a])  # exact cancellation


def test_overlap_unit_and_orthogonal():
    grid = make_grid(span_sigmas=24.0, n=1024)
    u0 = hermite_mode(ModeSpec(0, grid.center, SIGMA), grid)
    u1 = hermite_mode(ModeSpec(1, grid.center, SIGMA), grid)
    assert abs(overlap(u0, u0) - 1.0) < 1e-9
    assert abs(overlap(u0, u1)) < 1e-8


def test_overlap_gaussian_width_ratio_two():
    # analytic: <u0(s)|u0(2s)> = sqrt(2 * s * 2s / (s^2 + 4 s^2)) = sqrt(4/5)
    grid = make_grid(span_sigmas=28.0, n=1024)
    u_narrow = hermite_mode(ModeSpec(0, grid.center, SIGMA), grid)
    u_wide = hermite_mode(ModeSpec(0, grid.center, 2.0 * SIGMA), grid)
    assert overlap(u_narrow, u_wide).real == pytest.approx(0.8944271909999159, abs=1e-9)
    assert abs(overlap(u_narrow, u_wide).imag) < 1e-15


def test_overlap_grid_mismatch():
    a = hermite_mode(ModeSpec(0, make_grid().center, SIGMA), make_grid())
    b = hermite_mode(ModeSpec(0, make_grid(n=513).center, SIGMA), make_grid(n=513))
    with pytest.raises(GridMismatchError):
        overlap(a, b)


def test_overlap_bounded_for_normalized_inputs():
    grid = make_grid()
    u0 = hermite_mode(ModeSpec(0, grid.center, SIGMA), grid)
    u_shift = hermite_mode(ModeSpec(0, grid.center + 0.5 * SIGMA, SIGMA), grid)
    assert abs(overlap(u0, u_shift)) <= 1.0 + 1e-9


# --- completeness and refinement -------------------------------------------


def test_completeness_of_hermite_basis():
    grid = make_grid(span_sigmas=26.0, n=1024)
    pulse = gaussian_amplitude(grid.samples, grid.center + SIGMA, SIGMA)
    pulse = SpectralAmplitude(grid, pulse / rectangle_norm(pulse, grid.spacing))
    recovered = 0.0
    for k in range(21):
        u = hermite_mode(ModeSpec(k, grid.center, SIGMA), grid)
        recovered += abs(overlap(u, pulse)) ** 2
    assert recovered >= 1.0 - 1e-6


def test_overlap_stable_under_grid_refinement():
    values = []
    for n in (512, 1024):
        grid = make_grid(span_sigmas=28.0, n=n)
        u_narrow = hermite_mode(ModeSpec(0, grid.center, SIGMA), grid)
        u_wide = hermite_mode(ModeSpec(0, grid.center, 2.0 * SIGMA), grid)
        values.append(overlap(u_narrow, u_wide).real)
    assert abs(values[1] - values[0]) < 1e-8
