import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hardy.wco.errors import (
    BasePointOutsideDisk,
    BoundaryFixedPoint,
    GridDegenerate,
    InnerConstantTooLarge,
    InvalidParameter,
    InvalidWeights,
)
from hardy.wco.maps import FixedPointInfo, PPFParams, fixed_point_in_disk, involutive_automorphism, ppf_map, to_series
from hardy.wco.models import NormalityMethod, Tolerances
from hardy.wco.operator import (
    DEFAULT_SEED,
    MAX_SPECTRUM_SIZE,
    SAMPLE_KAPPAS,
    OperatorMatrix,
    adjoint_kernel_check,
    build_matrix,
    build_ppf_matrix,
    classify,
    commutator_block_residual,
    conjugate_coefficients,
    default_grid,
    eigen_ladder_check,
    hermitian_residual,
    normality_residual_grid,
    ppf_classify,
    sample_ppf_params,
    spectrum,
    spiral_grid,
    transpose_symmetry_residual,
)
from hardy.wco.series import constant, from_coeffs, identity, scale
from hardy.wco.space import beta_kappa, hardy


@pytest.fixture
def reference_pair():
    return PPFParams(0.3, 0.4, 1.0, 1.0)


def relative_symmetry(M):
    return transpose_symmetry_residual(M) / max(1.0, float(np.max(np.abs(M.entries))))


def test_square_is_not_symmetric():
    M = build_matrix(from_coeffs([0, 0, 1], degree=31), constant(1, 31), hardy(31), 32)
    assert M.entries[2, 1] == 1
    assert M.entries[1, 2] == 0
    assert transpose_symmetry_residual(M) >= 1


def test_matrix_entries_are_read_only(reference_pair):
    M = build_ppf_matrix(reference_pair, 8)
    with pytest.raises(ValueError):
        M.entries[0, 0] = 0
    assert M.size == 8
    assert M.block(3).shape == (3, 3)


def test_first_column_is_psi(reference_pair):
    M = build_ppf_matrix(reference_pair, 6)
    np.testing.assert_allclose(M.entries[:, 0], reference_pair.psi_series(5).coeffs)


def test_build_matrix_errors():
    psi = constant(1, 8)
    with pytest.raises(InnerConstantTooLarge):
        build_matrix(from_coeffs([1.0, 0.5]), psi, hardy(8), 8)
    with pytest.raises(InvalidParameter):
        build_matrix(identity(8), psi, hardy(8), 0)
    with pytest.raises(InvalidWeights):
        build_matrix(identity(8), psi, hardy(4), 8)


def test_truncation_keeps_leading_block():
    phi, psi = from_coeffs([0, 0, 1]), from_coeffs([1, 1])
    small = build_matrix(phi, psi, hardy(16), 16)
    large = build_matrix(phi, psi, hardy(32), 32)
    np.testing.assert_array_equal(small.entries, large.block(16))


def test_seeded_ppf_sweep_is_symmetric():
    for p in sample_ppf_params(np.random.default_rng(DEFAULT_SEED), 25):
        assert relative_symmetry(build_ppf_matrix(p, 32)) <= 1e-12


radius_a0 = st.floats(min_value=0, max_value=0.4)
radius_a1 = st.floats(min_value=0.01, max_value=0.3)
radius_b = st.floats(min_value=0, max_value=2)
angle = st.floats(min_value=0, max_value=2 * np.pi)


@settings(max_examples=30, deadline=None)
@given(radius_a0, angle, radius_a1, angle, radius_b, angle, st.sampled_from(SAMPLE_KAPPAS))
def test_ppf_matrices_are_transpose_symmetric(r0, t0, r1, t1, rb, tb, kappa):
    # |a0| + |a1|/(1 - |a0|) < 1 keeps phi a self-map
    p = PPFParams(r0 * np.exp(1j * t0), r1 * np.exp(1j * t1), rb * np.exp(1j * tb), kappa)
    assert relative_symmetry(build_ppf_matrix(p, 24)) <= 1e-12


def test_hermitian_for_real_parameters():
    assert hermitian_residual(build_ppf_matrix(PPFParams(0.2, 0.5, 1.0), 32)) <= 1e-12


def test_complex_multiplier_breaks_hermiticity():
    M = build_ppf_matrix(PPFParams(0.2, 0.5, np.exp(1e-3j)), 32)
    assert hermitian_residual(M) > 5e-4


def test_normality_grid():
    holds = PPFParams(0.5j, 0.75, 1.0)
    fails = PPFParams(0.5j, 0.25, 1.0)
    ppf_map(holds)
    ppf_map(fails)
    assert normality_residual_grid(holds) <= 1e-12
    assert normality_residual_grid(fails) >= 1e-3
    assert normality_residual_grid(PPFParams(0.3 + 0.2j, 0.4j, 0.0)) == 0


def test_normality_grid_rejects_degenerate_grids(reference_pair):
    with pytest.raises(GridDegenerate):
        normality_residual_grid(reference_pair, default_grid()[:8])
    with pytest.raises(GridDegenerate):
        normality_residual_grid(reference_pair, [(1.0, 0)] * 9)


def test_grids():
    assert len(default_grid()) == 25
    pairs = spiral_grid(4)
    assert len(pairs) == 16
    assert all(abs(w) < 0.6 and abs(z) < 0.6 for w, z in pairs)
    assert normality_residual_grid(PPFParams(0.5j, 0.75, 1.0), spiral_grid(5)) <= 1e-12


def test_commutator_of_diagonal_matrix_vanishes():
    M = build_matrix(scale(identity(16), 0.5), constant(1, 16), hardy(16), 16)
    assert commutator_block_residual(M) == 0


def test_conjugate_coefficients():
    np.testing.assert_array_equal(conjugate_coefficients([1j, 2]), [-1j, 2])


@pytest.mark.parametrize("order", [0, 1])
def test_adjoint_kernel_formulas(reference_pair, order):
    c = adjoint_kernel_check(build_ppf_matrix(reference_pair, 64), 0.5, order)
    assert c.residual <= 1e-6
    assert c.tail_bound >= 0


def test_adjoint_kernel_exact_for_diagonal():
    M = build_matrix(scale(identity(16), 0.5), constant(1, 16), hardy(16), 16)
    assert adjoint_kernel_check(M, 0, 0).residual == 0
    assert adjoint_kernel_check(M, 0, 1).residual == 0


def test_adjoint_kernel_input_checks(reference_pair):
    M = build_ppf_matrix(reference_pair, 16)
    with pytest.raises(BasePointOutsideDisk):
        adjoint_kernel_check(M, 0.95, 0)
    with pytest.raises(InvalidParameter):
        adjoint_kernel_check(M, 0.5, 2)


def test_spectrum_order():
    M = build_matrix(scale(identity(8), -0.5), constant(1, 8), hardy(8), 8)
    values = spectrum(M)
    np.testing.assert_allclose(values, (-0.5) ** np.arange(8))


def test_spectrum_size_limit():
    n = MAX_SPECTRUM_SIZE + 1
    M = OperatorMatrix(np.zeros((n, n)), hardy(n), identity(4), constant(1, 4))
    with pytest.raises(InvalidParameter):
        spectrum(M)


def _ladder(p, N):
    fp = fixed_point_in_disk(ppf_map(p))
    return eigen_ladder_check(build_ppf_matrix(p, N), fp, p.psi(fp.w0), 4)


def test_eigen_ladder(reference_pair):
    assert max(_ladder(reference_pair, 64)) <= 1e-6


def test_eigen_ladder_does_not_grow_with_truncation(reference_pair):
    runs = [_ladder(reference_pair, N) for N in (16, 32, 64)]
    for prev, nxt in zip(runs, runs[1:]):
        for a, b in zip(prev, nxt):
            assert b <= a + 1e-9


@pytest.mark.parametrize("N", [16, 32, 64])
def test_involution_ladder(N):
    m = involutive_automorphism(0.5)
    fp = fixed_point_in_disk(m)
    M = build_matrix(to_series(m, N), constant(1, N), hardy(N), N)
    assert fp.derivative_at_w0 == pytest.approx(-1)
    assert max(eigen_ladder_check(M, fp, 1, 4)) <= 1e-6


def test_eigen_ladder_needs_interior_point(reference_pair):
    with pytest.raises(BoundaryFixedPoint):
        eigen_ladder_check(build_ppf_matrix(reference_pair, 8), FixedPointInfo(1, 1, False), 1, 2)


def test_ppf_classify(reference_pair):
    fit = ppf_classify(reference_pair.phi_series(20), reference_pair.psi_series(20), 1.0)
    assert fit.is_ppf
    assert fit.residual <= 1e-12
    assert not ppf_classify(from_coeffs([0, 0, 1]), constant(1, 2), 1.0).is_ppf


def test_classify_reference_pair(reference_pair):
    report = classify(reference_pair.phi_series(32), reference_pair.psi_series(32), hardy(32), 32)
    assert report.verdicts == {"complex_symmetric_standard_J": True, "hermitian": True, "normal": True}
    assert report.normality_method is NormalityMethod.KERNEL_GRID
    assert report.ppf is not None


def test_classify_square():
    report = classify(from_coeffs([0, 0, 1], degree=31), constant(1, 31), hardy(31), 32)
    assert not report.complex_symmetric_standard_J
    assert report.hermitian is False
    assert report.normal is False
    assert report.normality_method is NormalityMethod.COMMUTATOR_BLOCK


def test_classify_non_normal_pair_on_its_own_space():
    p = PPFParams(0.5j, 0.25, 1.0, 2.0)
    report = classify(p.phi_series(32), p.psi_series(32), beta_kappa(2.0, 32), 32, 2.0)
    assert report.complex_symmetric_standard_J
    assert not report.hermitian
    assert not report.normal


def test_report_dict_moves_verdicts(reference_pair):
    report = classify(reference_pair.phi_series(16), reference_pair.psi_series(16), hardy(16), 16,
                      tolerances=Tolerances(exact=1e-10))
    out = report.to_dict()
    assert out["verdicts"]["hermitian"] is True
    assert "hermitian" not in out
    assert out["normality_method"] == "kernel_grid"
    assert out["tolerances"] == {"exact": 1e-10, "truncation": 1e-6}


def test_sampler_is_deterministic():
    a = sample_ppf_params(np.random.default_rng(7), 10)
    b = sample_ppf_params(np.random.default_rng(7), 10)
    assert a == b
    assert all(p.kappa in SAMPLE_KAPPAS for p in a)
    for p in a:
        ppf_map(p)


@pytest.mark.parametrize("a0", [0.1, 0.2j, 0.3])
def test_unweighted_pair_off_origin_is_not_symmetric(a0):
    p = PPFParams(a0, 0.4, 1.0)
    M = build_matrix(p.phi_series(32), constant(1, 32), hardy(32), 32)
    assert transpose_symmetry_residual(M) > 1e-2


@pytest.mark.parametrize("a1", [0.4, 0.5j, -0.7])
def test_unweighted_linear_map_is_symmetric(a1):
    p = PPFParams(0, a1, 1.0)
    M = build_matrix(p.phi_series(32), constant(1, 32), hardy(32), 32)
    assert transpose_symmetry_residual(M) <= 1e-13
