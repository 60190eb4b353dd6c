import numpy as np
import pytest

from relboost import (
    BoostModel,
    amplitude,
    build_matrix,
    mode_indices,
    nz2_axis_closed_form,
    zero_rm_closed_form,
)

MODELS = (BoostModel.ZERO_RM, BoostModel.NON_ZERO_RM1, BoostModel.NON_ZERO_RM2)


def test_mode_indices():
    assert list(mode_indices(2)) == [-2, -1, 0, 1, 2]
    assert list(mode_indices(0)) == [0]


def test_rest_frame_single_amplitudes():
    for model in MODELS:
        assert abs(amplitude(model, 1.0, 3, -3) - 1.0) <= 1e-12
        assert abs(amplitude(model, 1.0, 3, -2)) <= 1e-12


def test_zero_rm_example_values():
    assert abs(amplitude(BoostModel.ZERO_RM, 5.0, 1, 1) - (-2.0 / 3.0)) <= 1e-9
    for g in (5.0, 20.0):
        assert abs(amplitude(BoostModel.ZERO_RM, g, 2, 1)) <= 1e-10


def test_nz2_even_axis_example():
    want = (1e4 - 1.0) / (1e4 + 1.0)
    assert abs(amplitude(BoostModel.NON_ZERO_RM2, 1e4, 2, 0) - want) <= 1e-8


def test_zero_rm_closed_form_values():
    assert zero_rm_closed_form(1.0, 0) == 1.0
    assert zero_rm_closed_form(1.0, 4) == 0.0
    assert zero_rm_closed_form(5.0, 3) == 0.0
    assert abs(zero_rm_closed_form(100.0, 2) - (-99.0 / 101.0)) <= 1e-15
    assert abs(zero_rm_closed_form(5.0, -4) - 4.0 / 9.0) <= 1e-15


def test_nz2_axis_closed_form_values():
    assert nz2_axis_closed_form(1.0, 0) == 1.0
    assert nz2_axis_closed_form(20.0, 3) == 0.0
    assert abs(nz2_axis_closed_form(20.0, 2) - 19.0 / 21.0) <= 1e-15
    assert abs(nz2_axis_closed_form(1e4, 4) - (9999.0 / 10001.0) ** 2) <= 1e-15


@pytest.mark.parametrize("gamma", (5.0, 100.0))
def test_zero_rm_oracle_battery(gamma):
    for s in range(-16, 17, 2):
        got = amplitude(BoostModel.ZERO_RM, gamma, s, 0)
        assert abs(got - zero_rm_closed_form(gamma, s)) <= 1e-9


@pytest.mark.parametrize("gamma", (5.0, 1e4))
def test_nz2_axis_oracle_battery(gamma):
    for k in range(0, 13, 2):
        got = amplitude(BoostModel.NON_ZERO_RM2, gamma, k, 0)
        assert abs(got - nz2_axis_closed_form(gamma, k)) <= 1e-8


def test_rest_frame_matrices_identical_and_antidiagonal():
    grids = [build_matrix(model, 1.0, 10).entries for model in MODELS]
    anti = np.eye(21)[:, ::-1].astype(complex)
    for grid in grids:
        assert np.abs(grid - anti).max() <= 1e-11
    # all three models share the rest-frame path, so equality is bitwise
    assert np.array_equal(grids[0], grids[1])
    assert np.array_equal(grids[0], grids[2])


def test_zero_rm_matrix_is_toeplitz_in_s():
    grid = build_matrix(BoostModel.ZERO_RM, 5.0, 6)
    ks = mode_indices(6)
    for i, k in enumerate(ks):
        for j, m in enumerate(ks):
            want = zero_rm_closed_form(5.0, k + m)
            assert abs(grid.entries[i, j] - want) <= 1e-10


def test_at_accessor():
    grid = build_matrix(BoostModel.ZERO_RM, 5.0, 4)
    assert grid.at(1, 1) == grid.entries[5, 5]
    assert grid.at(-4, -4) == grid.entries[0, 0]
    assert grid.dim == 9


def test_conjugation_symmetry(matrices20):
    for (model, gamma), grid in matrices20.items():
        flipped = np.conj(grid.entries[::-1, ::-1])
        assert np.abs(grid.entries - flipped).max() <= 1e-10, (model, gamma)


def test_structural_zero_lanes():
    # zero-rm kills odd k+m at any gamma; the boosted-phase factor in the
    # moving-observer models is pi-periodic, which kills odd rows (rm1)
    # or odd columns (rm2) instead
    ks = mode_indices(6)
    odd = np.array([abs(v) % 2 == 1 for v in ks])
    zero = build_matrix(BoostModel.ZERO_RM, 20.0, 6).entries
    s_parity = (ks[:, None] + ks[None, :]) % 2 != 0
    assert np.abs(zero[s_parity]).max() <= 1e-14
    nz1 = build_matrix(BoostModel.NON_ZERO_RM1, 20.0, 6).entries
    assert np.abs(nz1[odd, :]).max() == 0.0
    nz2 = build_matrix(BoostModel.NON_ZERO_RM2, 20.0, 6).entries
    assert np.abs(nz2[:, odd]).max() == 0.0


def test_build_matches_single_amplitude():
    cases = (
        (BoostModel.NON_ZERO_RM1, 5.0, 2, 3),
        (BoostModel.NON_ZERO_RM1, 5.0, -4, 1),
        (BoostModel.NON_ZERO_RM2, 5.0, 3, 2),
        (BoostModel.NON_ZERO_RM2, 20.0, 0, -4),
        (BoostModel.ZERO_RM, 20.0, 2, 2),
    )
    for model, gamma, k, m in cases:
        grid = build_matrix(model, gamma, 6)
        direct = amplitude(model, gamma, k, m)
        # two independent adaptive integrations, each within abs_tol
        assert abs(grid.at(k, m) - direct) <= 2e-10, (model, gamma, k, m)


def test_parseval_column_growth_nz1():
    masses = []
    for lmax in (10, 20, 40):
        grid = build_matrix(BoostModel.NON_ZERO_RM1, 5.0, lmax).entries
        masses.append(float(np.sum(np.abs(grid[:, lmax]) ** 2)))
    assert masses[0] <= masses[1] <= masses[2] <= 1.0 + 1e-9
    assert masses[2] > 0.99


def test_parseval_row_growth_nz2():
    masses = []
    for lmax in (10, 20, 40):
        grid = build_matrix(BoostModel.NON_ZERO_RM2, 5.0, lmax).entries
        masses.append(float(np.sum(np.abs(grid[lmax, :]) ** 2)))
    assert masses[0] <= masses[1] <= masses[2] <= 1.0 + 1e-9
    assert masses[2] > 0.99


def test_parseval_offaxis_column_nz1():
    masses = []
    for lmax in (10, 20, 40):
        grid = build_matrix(BoostModel.NON_ZERO_RM1, 5.0, lmax).entries
        masses.append(float(np.sum(np.abs(grid[:, lmax + 3]) ** 2)))
    assert masses[0] <= masses[1] + 1e-12
    assert masses[1] <= masses[2] + 1e-12
    assert masses[2] <= 1.0 + 1e-9


def test_build_determinism():
    a = build_matrix(BoostModel.NON_ZERO_RM1, 5.0, 8).entries
    b = build_matrix(BoostModel.NON_ZERO_RM1, 5.0, 8).entries
    assert np.array_equal(a, b)


def test_gamma_below_one_rejected():
    with pytest.raises(ValueError):
        amplitude(BoostModel.ZERO_RM, 0.99, 0, 0)
    with pytest.raises(ValueError):
        build_matrix(BoostModel.ZERO_RM, 0.5, 4)


def test_frobenius_norm_positive(matrices20):
    for grid in matrices20.values():
        assert np.linalg.norm(grid.entries) > 0.0
