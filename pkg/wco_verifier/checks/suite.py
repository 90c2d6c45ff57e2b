"""
The verification suite: one registered check per verified statement.

Importing this module fills ``REGISTRY``.
"""

import logging

import numpy as np

from hardy.wco.errors import DegenerateMap, NoConvergence, NoFixedPointFound, NotSelfMap
from hardy.wco.koenigs import (
    KoenigsResult,
    consistency_check,
    koenigs_iterate,
    obstruction_value,
    phi_from_koenigs,
    power_membership_report,
)
from hardy.wco.maps import (
    IDENTITY,
    MobiusMap,
    PPFParams,
    compose_maps,
    fixed_point_in_disk,
    involutive_automorphism,
    linear_map,
    phi_injective_on_grid,
    ppf_map,
    psi_min_modulus,
    series_fixed_point,
    to_series,
)
from hardy.wco.operator import (
    adjoint_kernel_check,
    build_matrix,
    build_ppf_matrix,
    eigen_ladder_check,
    hermitian_residual,
    normality_residual_grid,
    sample_ppf_params,
    transpose_symmetry_residual,
)
from hardy.wco.series import (
    compose,
    constant,
    from_coeffs,
    geometric,
    identity,
    max_deviation,
    multiply,
    revert,
    scale,
)
from hardy.wco.space import beta_kappa, hardy, kernel, reproducing_check
from .registry import CheckContext, register

logger = logging.getLogger(__name__)

# the symmetric pair used by the ladder and adjoint checks
REFERENCE_PPF = PPFParams(0.3, 0.4, 1.0, 1.0)


def shortfall(threshold: float, residual: float) -> float:
    return max(0.0, threshold - residual)


def _scale(M) -> float:
    return max(1.0, float(np.max(np.abs(M.entries))))


# series


@register("series.identity_laws", "composition with z is neutral on both sides")
def check_identity_laws(ctx: CheckContext):
    f = geometric(0.5 + 0.2j, 12)
    g = scale(geometric(-0.4, 12), 0.3) - constant(0.3, 12)
    metric = max(max_deviation(compose(f, identity(12)), f), max_deviation(compose(identity(12), g), g))
    return {"degree": 12}, metric, ctx.tolerances.exact


@register("series.revert_geometric", "reversion of z/(1-z) is z/(1+z)")
def check_revert_geometric(ctx: CheckContext):
    s = from_coeffs([0] + [1] * 16)
    expected = from_coeffs([0] + [(-1) ** (n - 1) for n in range(1, 17)])
    return {"degree": 16}, max_deviation(revert(s), expected), 1e-10


@register("series.compose_mobius", "series composition agrees with Mobius composition")
def check_compose_mobius(ctx: CheckContext):
    f = MobiusMap(1, 0.2, 0.3, 1)
    g = MobiusMap(0.5, 0, 0.2, 1)
    exact = to_series(compose_maps(f, g), 16)
    metric = max_deviation(compose(to_series(f, 16), to_series(g, 16)), exact)
    return {"degree": 16}, metric, ctx.tolerances.exact


# space


@register("space.reproducing_kernel", "<f, K_w^(n)> = f^(n)(w)")
def check_reproducing_kernel(ctx: CheckContext):
    f = from_coeffs([1, -0.5, 0.25j, 0.3, 0, 0.1])
    w = 0.5 + 0.2j
    worst = 0.0
    for kappa in (1.0, 1.5, 2.0):
        weights = beta_kappa(kappa, 32)
        for order in (0, 1, 2):
            worst = max(worst, reproducing_check(f, w, order, weights))
    return {"w": w, "kappas": [1.0, 1.5, 2.0], "orders": [0, 1, 2]}, worst, ctx.tolerances.exact


@register("space.kernel_norm_closed_form", "||K_w||² = (1 - |w|²)^(-kappa) on H²(beta_kappa)")
def check_kernel_norm(ctx: CheckContext):
    w = 0.6j
    worst = 0.0
    for kappa in (1.0, 2.0, 3.0):
        k = kernel(w, 0, beta_kappa(kappa, 256), 256)
        exact = (1 - abs(w) ** 2) ** (-kappa)
        worst = max(worst, abs(k.norm() ** 2 - exact) / exact)
    return {"w": w, "N": 256}, worst, ctx.tolerances.exact


# maps


@register("maps.involution_example", "the involution at a = 1/2 fixes 2 - sqrt(3) with derivative -1")
def check_involution_example(ctx: CheckContext):
    fp = fixed_point_in_disk(involutive_automorphism(0.5))
    metric = max(abs(fp.w0 - (2 - np.sqrt(3))), abs(fp.derivative_at_w0 + 1))
    return {"a": 0.5, "w0": fp.w0, "derivative": fp.derivative_at_w0}, metric, ctx.tolerances.exact


@register("maps.involution_self_inverse", "the involutive automorphism satisfies phi∘phi = identity")
def check_involution_self_inverse(ctx: CheckContext):
    m = involutive_automorphism(0.5)
    return {"a": 0.5}, compose_maps(m, m).deviation(IDENTITY), 1e-14


@register("maps.ppf_involution_real", "for real a the symmetric pair with a1 = a² - 1 is the involution")
def check_ppf_involution(ctx: CheckContext):
    values = (0.5, -0.3, 0.7)
    metric = max(ppf_map(PPFParams(a, a * a - 1, 1.0)).deviation(involutive_automorphism(a)) for a in values)
    return {"a": list(values)}, metric, 1e-14


@register("maps.ppf_psi_nonvanishing", "psi of a symmetric pair never vanishes on the disk")
def check_psi_nonvanishing(ctx: CheckContext):
    worst = 0.0
    for p in sample_ppf_params(ctx.rng(), 50):
        bound = 0.99 * abs(p.b) * (1 + abs(p.a0)) ** (-p.kappa)
        worst = max(worst, shortfall(bound, psi_min_modulus(p, ctx.samples)))
    return {"count": 50, "seed": ctx.seed}, worst, 0.0


@register("maps.ppf_phi_injective", "phi of a symmetric pair is univalent")
def check_phi_injective(ctx: CheckContext):
    failures = sum(not phi_injective_on_grid(p) for p in sample_ppf_params(ctx.rng(), 50))
    return {"count": 50, "seed": ctx.seed}, failures, 0.0


# operator


@register("operator.ppf_random_symmetry", "symmetric pairs give transpose-symmetric matrices")
def check_ppf_random_symmetry(ctx: CheckContext):
    worst = 0.0
    for p in sample_ppf_params(ctx.rng(), 100):
        M = build_ppf_matrix(p, 32)
        worst = max(worst, transpose_symmetry_residual(M) / _scale(M))
    return {"count": 100, "N": 32, "seed": ctx.seed}, worst, ctx.tolerances.exact


@register("operator.non_ppf_falsification", "psi = 1, phi = z² is not J-symmetric")
def check_non_ppf(ctx: CheckContext):
    M = build_matrix(from_coeffs([0, 0, 1], degree=31), constant(1, 31), hardy(31), 32)
    residual = transpose_symmetry_residual(M)
    return {"phi": "z^2", "psi": "1", "residual": residual}, shortfall(1.0, residual), 0.0


@register("operator.ppf_hermitian_real", "real parameters give a hermitian operator")
def check_hermitian_real(ctx: CheckContext):
    M = build_ppf_matrix(PPFParams(0.2, 0.5, 1.0), 32)
    return {"a0": 0.2, "a1": 0.5, "b": 1.0}, hermitian_residual(M), ctx.tolerances.exact


@register("operator.ppf_hermitian_perturbed", "a complex multiplier breaks hermiticity")
def check_hermitian_perturbed(ctx: CheckContext):
    b = np.exp(1e-3j)
    residual = hermitian_residual(build_ppf_matrix(PPFParams(0.2, 0.5, b), 32))
    return {"a0": 0.2, "a1": 0.5, "b": b, "residual": residual}, shortfall(5e-4, residual), 0.0


@register("operator.ppf_hermitian_iff_real", "hermitian exactly when a0, a1 and b are real")
def check_hermitian_iff_real(ctx: CheckContext):
    rng = ctx.rng()
    mismatches = 0
    for k in range(20):
        a0 = rng.uniform(-0.4, 0.4)
        a1 = rng.choice([-1, 1]) * rng.uniform(0.05, 0.3)
        b = rng.choice([-1, 1]) * rng.uniform(0.5, 2.0)
        real = PPFParams(a0, a1, b)
        bumped = [a0, a1, b]
        bumped[k % 3] += 1e-3j
        for p, expected in ((real, True), (PPFParams(*bumped), False)):
            M = build_ppf_matrix(p, 32)
            verdict = hermitian_residual(M) <= ctx.tolerances.exact * _scale(M)
            mismatches += verdict != expected or p.is_real() != expected
    return {"count": 20, "perturbation": 1e-3, "seed": ctx.seed}, mismatches, 0.0


@register("operator.ppf_normality_condition_holds", "a0 = i/2, a1 = 3/4 satisfies the normality identity")
def check_normality_holds(ctx: CheckContext):
    p = PPFParams(0.5j, 0.75, 1.0)
    ppf_map(p, ctx.samples)
    return {"a0": p.a0, "a1": p.a1, "b": p.b}, normality_residual_grid(p), ctx.tolerances.exact


@register("operator.ppf_normality_condition_fails", "a0 = i/2, a1 = 1/4 violates the normality identity")
def check_normality_fails(ctx: CheckContext):
    p = PPFParams(0.5j, 0.25, 1.0)
    ppf_map(p, ctx.samples)
    residual = normality_residual_grid(p)
    return {"a0": p.a0, "a1": p.a1, "b": p.b, "residual": residual}, shortfall(1e-3, residual), 0.0


@register("operator.ppf_normality_zero_multiplier", "b = 0 is trivially normal")
def check_normality_zero(ctx: CheckContext):
    p = PPFParams(0.3 + 0.2j, 0.4j, 0.0)
    ppf_map(p, ctx.samples)
    return {"a0": p.a0, "a1": p.a1, "b": 0.0}, normality_residual_grid(p), ctx.tolerances.exact


def _normal_ppf(rng: np.random.Generator) -> PPFParams:
    """A self-map symmetric pair satisfying Im(a0 conj(a1)) = (1 - |a0|²) Im(a0)."""
    for _ in range(10_000):
        a0 = 0.4 * np.sqrt(rng.random()) * np.exp(2j * np.pi * rng.random())
        if abs(a0) < 0.05:
            continue
        shift = (1 - abs(a0) ** 2) * a0.imag / abs(a0) ** 2
        a1 = a0 * (rng.uniform(-0.5, 0.5) - 1j * shift)
        b = rng.uniform(0.5, 2.0) * np.exp(2j * np.pi * rng.random())
        p = PPFParams(a0, a1, b, float(rng.choice([1.0, 1.5, 2.0, 3.0])))
        try:
            ppf_map(p)
        except (NotSelfMap, DegenerateMap):
            continue
        return p
    raise NoConvergence("could not sample a normal symmetric pair")


@register("operator.ppf_normality_iff_condition", "the grid identity holds exactly when b = 0 or the normality condition holds")
def check_normality_iff(ctx: CheckContext):
    rng = ctx.rng()
    mismatches = 0
    for _ in range(10):
        p = _normal_ppf(rng)
        mismatches += normality_residual_grid(p) > ctx.tolerances.exact * max(1.0, abs(p.b) ** 2)
    violating = [
        p for p in sample_ppf_params(rng, 60)
        if p.normality_gap() >= 0.05 and abs(p.b) >= 0.5
    ][:10]
    for p in violating:
        mismatches += normality_residual_grid(p) < ctx.tolerances.truncation
    return {"normal": 10, "violating": len(violating), "seed": ctx.seed}, mismatches, 0.0


@register("operator.ppf_adjoint_kernel_order0", "W* K_w = conj(psi(w)) K_phi(w)")
def check_adjoint_order0(ctx: CheckContext):
    M = build_ppf_matrix(REFERENCE_PPF, 64)
    c = adjoint_kernel_check(M, 0.5, 0)
    return {"N": 64, "w": 0.5, "tail_bound": c.tail_bound}, c.residual, ctx.tolerances.truncation


@register("operator.ppf_adjoint_kernel_order1", "adjoint formula for the derivative kernel")
def check_adjoint_order1(ctx: CheckContext):
    M = build_ppf_matrix(REFERENCE_PPF, 64)
    c = adjoint_kernel_check(M, 0.5, 1)
    return {"N": 64, "w": 0.5, "tail_bound": c.tail_bound}, c.residual, ctx.tolerances.truncation


@register("operator.adjoint_kernel_diagonal", "phi = az, psi = 1 maps K_0 and K_0^(1) exactly")
def check_adjoint_diagonal(ctx: CheckContext):
    M = build_matrix(scale(identity(16), 0.5), constant(1, 16), hardy(16), 16)
    metric = max(adjoint_kernel_check(M, 0, 0).residual, adjoint_kernel_check(M, 0, 1).residual)
    return {"a": 0.5, "w": 0}, metric, 0.0


def _ladder(N: int):
    fp = fixed_point_in_disk(ppf_map(REFERENCE_PPF))
    return eigen_ladder_check(build_ppf_matrix(REFERENCE_PPF, N), fp, REFERENCE_PPF.psi(fp.w0), 4)


@register("operator.ppf_eigen_ladder", "psi(w0) phi'(w0)^n are eigenvalues")
def check_eigen_ladder(ctx: CheckContext):
    distances = _ladder(64)
    return {"N": 64, "n_max": 4, "distances": distances}, max(distances), ctx.tolerances.truncation


@register("operator.ppf_eigen_ladder_monotone", "ladder distances do not grow with N")
def check_eigen_ladder_monotone(ctx: CheckContext):
    sizes = (16, 32, 64)
    runs = [_ladder(N) for N in sizes]
    growth = max(max(0.0, b - a) for prev, nxt in zip(runs, runs[1:]) for a, b in zip(prev, nxt))
    return {"sizes": list(sizes)}, growth, ctx.tolerances.truncation * 1e-3


@register("operator.involution_ladder", "C_phi for the involution at a = 1/2 has eigenvalues 1 and -1")
def check_involution_ladder(ctx: CheckContext):
    m = involutive_automorphism(0.5)
    fp = fixed_point_in_disk(m)
    worst = 0.0
    for N in (16, 32, 64):
        M = build_matrix(to_series(m, N), constant(1, N), hardy(N), N)
        worst = max(worst, max(eigen_ladder_check(M, fp, 1, 4)))
    return {"a": 0.5, "psi": 1, "sizes": [16, 32, 64]}, worst, ctx.tolerances.truncation


def _unweighted_residual(a0: complex, a1: complex) -> float:
    p = PPFParams(a0, a1, 1.0)
    ppf_map(p)
    M = build_matrix(p.phi_series(32), constant(1, 32), hardy(32), 32)
    return transpose_symmetry_residual(M)


@register("operator.ppf_unweighted_converse", "with psi = 1 only phi(0) = 0 gives a J-symmetric operator")
def check_unweighted_converse(ctx: CheckContext):
    values = (0.1, 0.2j, 0.3)
    residual = min(_unweighted_residual(a0, 0.4) for a0 in values)
    return {"a0": list(values), "a1": 0.4, "min_residual": residual}, shortfall(1e-2, residual), 0.0


@register("operator.ppf_unweighted_origin", "phi = az with psi = 1 is J-symmetric")
def check_unweighted_origin(ctx: CheckContext):
    values = (0.4, 0.5j, -0.7)
    return {"a1": list(values)}, max(_unweighted_residual(0, a1) for a1 in values), 1e-13


@register("operator.truncation_stability", "growing N never changes existing entries")
def check_truncation_stability(ctx: CheckContext):
    p = PPFParams(0.3 + 0.1j, 0.35, 1.5 - 0.5j, 2.0)
    small, large = build_ppf_matrix(p, 16), build_ppf_matrix(p, 32)
    worst = float(np.max(np.abs(small.entries - large.block(16)))) / _scale(large)
    phi, psi = from_coeffs([0, 0, 1]), from_coeffs([1, 1])
    small = build_matrix(phi, psi, hardy(16), 16)
    large = build_matrix(phi, psi, hardy(32), 32)
    worst = max(worst, float(np.max(np.abs(small.entries - large.block(16)))))
    return {"sizes": [16, 32]}, worst, 1e-14


# koenigs


@register("koenigs.linear_map", "phi = z/2 has Koenigs function z after one step")
def check_koenigs_linear(ctx: CheckContext):
    m = linear_map(0.5)
    kr = koenigs_iterate(m, fixed_point_in_disk(m), 16)
    metric = max_deviation(kr.kappa_series, identity(16)) + abs(kr.iterations - 1)
    return {"lambda": 0.5, "iterations": kr.iterations}, metric, ctx.tolerances.exact


@register("koenigs.inverse_construction", "kappa = 2z/(1-z) yields phi = lambda z/(1 + (lambda-1) z)")
def check_inverse_construction(ctx: CheckContext):
    kappa = from_coeffs([0] + [2] * 16)
    phi = phi_from_koenigs(kappa, 0.5)
    target = to_series(MobiusMap(0.5, 0, -0.5, 1), 16)
    metric = float(np.max(np.abs(phi.coeffs[:13] - target.coeffs[:13])))
    return {"lambda": 0.5, "degree": 12}, metric, 1e-8


@register("koenigs.iterate_all_ones", "the Koenigs function of lambda z/(1 + (lambda-1) z) is z/(1-z)")
def check_iterate_all_ones(ctx: CheckContext):
    m = MobiusMap(0.5, 0, -0.5, 1)
    kr = koenigs_iterate(m, fixed_point_in_disk(m), 16)
    metric = float(np.max(np.abs(kr.kappa_series.coeffs[1:11] - 1)))
    return {"lambda": 0.5, "degree": 10}, metric, 1e-8


@register("koenigs.divergent_hardy", "2z/(1-z) and its powers are not in the Hardy space")
def check_divergent_hardy(ctx: CheckContext):
    kr = KoenigsResult(from_coeffs([0] + [2] * 32), 0.5, 0j, 0, 0.0)
    report = power_membership_report(kr, hardy(32), 4, ctx.divergence_slope)
    missed = sum(not m.divergent for m in report)
    return {"powers": 4, "slopes": [m.tail_slope for m in report]}, missed, 0.0


@register("koenigs.geometric_convergent", "powers of z/(1-z/2) stay in the Hardy space")
def check_geometric_convergent(ctx: CheckContext):
    kr = KoenigsResult(multiply(identity(32), geometric(0.5, 32)), 1 / 3, 0j, 0, 0.0)
    report = power_membership_report(kr, hardy(32), 4, ctx.divergence_slope)
    flagged = sum(m.divergent for m in report)
    return {"powers": 4}, flagged, 0.0


@register("koenigs.schroeder_sweep", "kappa∘phi = phi'(w0) kappa for Mobius self-maps")
def check_schroeder_sweep(ctx: CheckContext):
    worst, used = 0.0, 0
    for p in sample_ppf_params(ctx.rng(), 20):
        m = ppf_map(p)
        try:
            fp = fixed_point_in_disk(m)
        except NoFixedPointFound:
            continue
        if not fp.interior or not 0.05 <= abs(fp.derivative_at_w0) <= 0.95:
            continue
        kr = koenigs_iterate(m, fp, 32)
        size = max(1.0, float(np.max(np.abs(kr.kappa_series.coeffs))))
        worst = max(worst, kr.schroeder_residual / size)
        used += 1
    return {"sampled": 20, "used": used, "seed": ctx.seed}, worst, 1e-8


@register("koenigs.uniqueness", "phi and phi∘phi share the normalized Koenigs function")
def check_uniqueness(ctx: CheckContext):
    m = ppf_map(REFERENCE_PPF)
    mm = compose_maps(m, m)
    k1 = koenigs_iterate(m, fixed_point_in_disk(m), 24)
    k2 = koenigs_iterate(mm, fixed_point_in_disk(mm), 24)
    return {"N": 24}, max_deviation(k1.kappa_series, k2.kappa_series), 1e-10


@register("koenigs.schroeder_polynomial", "Schroeder residual for phi = z/2 + z²/8")
def check_schroeder_polynomial(ctx: CheckContext):
    phi = from_coeffs([0, 0.5, 0.125], degree=16)
    kr = koenigs_iterate(phi, series_fixed_point(phi), 16)
    return {"degree": 16}, kr.schroeder_residual, 1e-10


@register("koenigs.inverse_geometric", "phi built from kappa = z/(1-z/2) solves the Schroeder equation")
def check_inverse_geometric(ctx: CheckContext):
    kappa = multiply(identity(16), geometric(0.5, 16))
    phi = phi_from_koenigs(kappa, 1 / 3)
    residual = max_deviation(compose(kappa, phi), scale(kappa, 1 / 3))
    return {"lambda": 1 / 3, "degree": 16}, residual, 1e-10


@register("koenigs.obstruction_closed_form", "kernel obstruction matches r/sqrt(1+r²) on the Hardy space")
def check_obstruction_closed_form(ctx: CheckContext):
    r = 0.5
    value = obstruction_value(r, hardy(128), 128)
    return {"w0": r, "N": 128}, abs(value - r / np.sqrt(1 + r * r)), 1e-10


@register("koenigs.obstruction_origin", "the obstruction vanishes at w0 = 0")
def check_obstruction_origin(ctx: CheckContext):
    return {"w0": 0}, obstruction_value(0, hardy(64), 64), 0.0


@register("koenigs.obstruction_truncation", "obstruction values at N and 2N agree")
def check_obstruction_truncation(ctx: CheckContext):
    worst = 0.0
    for kappa in (1.0, 2.0):
        for w0 in (0.3, 0.5j, -0.7):
            a = obstruction_value(w0, beta_kappa(kappa, 64), 64)
            b = obstruction_value(w0, beta_kappa(kappa, 128), 128)
            worst = max(worst, abs(a - b))
    return {"sizes": [64, 128]}, worst, 1e-9


@register("koenigs.obstruction_monotone", "the Hardy obstruction increases with |w0|")
def check_obstruction_monotone(ctx: CheckContext):
    radii = np.linspace(0, 0.9, 19)
    values = [obstruction_value(r, hardy(256), 256) for r in radii]
    drop = max(0.0, -float(np.min(np.diff(values))))
    return {"radii": radii.tolist()}, drop, 0.0


@register("koenigs.consistency_origin", "at w0 = 0 both sides of the |kappa(0)| identity vanish")
def check_consistency_origin(ctx: CheckContext):
    phi = from_coeffs([0, 0.5, 0.125], degree=16)
    kr = koenigs_iterate(phi, series_fixed_point(phi), 16)
    c = consistency_check(kr, hardy(16), ctx.divergence_slope)
    return {"lhs": c.lhs, "rhs": c.rhs}, c.residual, ctx.tolerances.exact


@register("koenigs.consistency_offcenter_report", "the |kappa(0)| comparison runs for a recentred linear map")
def check_consistency_offcenter(ctx: CheckContext):
    # reported, not judged: the identity is a necessary condition only
    sigma = involutive_automorphism(0.3)
    m = compose_maps(sigma, compose_maps(linear_map(0.5), sigma))
    kr = koenigs_iterate(m, fixed_point_in_disk(m), 32)
    c = consistency_check(kr, hardy(32), ctx.divergence_slope)
    return {"w0": kr.w0, "lhs": c.lhs, "rhs": c.rhs, "residual": c.residual}, 0.0, 0.0
