"""End-to-end acceptance checks of the model's analytic identities, each at
its stated tolerance.  Run with `pytest tests/test_acceptance.py -v -s` to see
one PASS line per criterion.
"""

import math
import time

import numpy as np
import pytest

from hcb2 import (
    ModelParams,
    LatticeSpec,
    build_all_pairs,
    build_EJE,
    build_h_lambda,
    ccr_parameter,
    condensate_bound,
    critical_beta,
    diagonalize_h,
    dynamics_residual,
    eta_value,
    expectation,
    f_beta,
    free_energy_density,
    gibbs_density,
    ground_state_solution,
    independence_matrix,
    lattice_observables,
    max_cross_moment,
    measured_variances,
    pauli_site_operator,
    solve_gap,
    tricritical_kappa,
    zero_mode_density,
)
from hcb2.fluctuations import PAIR_LABELS, generator_matrix

T, U, BETA = -1.0, 0.25, 4.0
POINT = ModelParams(t=T, U=U, beta=BETA)


def _report(num, text):
    print(f"criterion {num:02d} PASS: {text}")


def test_criterion_01_spectrum_identity():
    rng = np.random.default_rng(0)
    worst_eig, worst_vec = 0.0, 0.0
    for _ in range(1000):
        p = ModelParams(t=-float(rng.uniform(0.01, 2.0)), U=float(rng.uniform(0.0, 2.0)), beta=1.0)
        lam = float(rng.uniform(0.0, 1.0)) * np.exp(1j * float(rng.uniform(0.0, 2 * math.pi)))
        h = build_h_lambda(p, lam)
        eta = eta_value(p, lam)
        vals = np.linalg.eigvalsh(h)
        worst_eig = max(worst_eig, float(np.max(np.abs(vals - np.array([-eta, -p.U, p.U, eta])))))
        spec = diagonalize_h(p, lam)
        for i in range(4):
            v = spec.eigenvectors[:, i]
            worst_vec = max(worst_vec, float(np.linalg.norm(h @ v - spec.eigenvalues[i] * v)))
    assert worst_eig < 1e-11
    assert worst_vec < 1e-11
    _report(1, f"1000 random points: eigenvalue err {worst_eig:.2e}, eigenvector residual {worst_vec:.2e}")


def test_criterion_02_gap_equation_closure():
    sol = solve_gap(POINT)
    assert sol.condensed
    gap = abs(sol.selected_eta - f_beta(sol.selected_eta, POINT))
    assert gap < 1e-12
    rho = gibbs_density(POINT, sol.lambda_mod)
    traced = expectation(rho, pauli_site_operator(1, "minus"))
    closure = abs(traced - sol.lambda_mod)
    assert closure < 1e-10
    _report(2, f"gap residual {gap:.2e}, self-consistency trace {closure:.2e}")


def test_criterion_03_critical_temperature():
    bc = critical_beta(POINT)
    assert bc == pytest.approx(2.0 * math.log(3.0), abs=1e-12)
    below = solve_gap(ModelParams(t=T, U=U, beta=0.999 * bc))
    above = solve_gap(ModelParams(t=T, U=U, beta=1.001 * bc))
    assert not below.condensed
    assert above.condensed
    _report(3, f"beta_c = {bc:.9f} = 2 ln 3; normal below, condensed above")


def test_criterion_04_tricritical_coupling():
    kappa = tricritical_kappa()
    assert kappa == pytest.approx(0.461292, abs=1e-6)
    residual = abs(math.log((1 + 2 * kappa) / (1 - 2 * kappa)) - 4 * kappa / (1 - 2 * kappa**2))
    assert residual < 1e-12
    _report(4, f"kappa = {kappa:.9f}, equation residual {residual:.2e}")


def test_criterion_05_ground_state():
    sol = ground_state_solution(ModelParams.ground_state(-1.0, 0.6))
    assert sol.lambda_mod == pytest.approx(0.4, abs=1e-14)
    assert sol.rho0 == pytest.approx(0.32, abs=1e-14)
    assert sol.rho0 == condensate_bound(ModelParams.ground_state(-1.0, 0.6))
    empty = ground_state_solution(ModelParams.ground_state(-1.0, 1.2))
    assert empty.rho0 == 0.0
    _report(5, "T=0: |lambda| = 0.4, rho0 = 0.32 = bound; strong coupling empty")


def test_criterion_06_ccr_identities():
    sol = solve_gap(POINT)
    rho = gibbs_density(POINT, sol.lambda_mod)
    eta = sol.selected_eta
    xi_p, xi_m = eta + U, eta - U
    worst_ccr, worst_var = 0.0, 0.0
    for pair in build_all_pairs(POINT, sol.lambda_mod):
        if pair.id.frequency_class == "xi+":
            hbar = (4 * xi_m / eta) * math.tanh(BETA * xi_p / 2)
            var = 2 * xi_m / eta
        else:
            hbar = (4 * xi_p / eta) * math.tanh(BETA * xi_m / 2)
            var = 2 * xi_p / eta
        predicted = pair.x_sign * 1j * pair.n**2 * hbar
        worst_ccr = max(worst_ccr, abs(ccr_parameter(pair, rho) - predicted))
        ve, vj = measured_variances(pair, rho)
        worst_var = max(worst_var, abs(ve - var), abs(vj - var))
    assert worst_ccr < 1e-12
    assert worst_var < 1e-12
    _report(6, f"all four pairs: CCR residual {worst_ccr:.2e}, variance residual {worst_var:.2e}")


def test_criterion_07_selection_rules():
    sol = solve_gap(POINT)
    spec = diagonalize_h(POINT, sol.lambda_mod)
    surviving = {("02", "Q-"), ("03", "Q-"), ("12", "Q+"), ("13", "Q+")}
    worst = 0.0
    for i in range(4):
        for j in range(i + 1, 4):
            for gen in ("Q+", "Q-"):
                if (f"{i}{j}", gen) in surviving:
                    continue
                e, je = build_EJE(i, j, generator_matrix(gen), spec)
                worst = max(worst, float(np.max(np.abs(e))), float(np.max(np.abs(je))))
    assert worst < 1e-13
    _report(7, f"all non-surviving blocks vanish, max magnitude {worst:.2e}")


def test_criterion_08_degeneracy_independence():
    sol = solve_gap(POINT)
    rho = gibbs_density(POINT, sol.lambda_mod)
    pairs = build_all_pairs(POINT, sol.lambda_mod)
    cross = max_cross_moment(pairs, rho)
    assert cross < 1e-12
    m = independence_matrix(pairs, rho)
    for a in range(8):
        for b in range(8):
            if a // 2 != b // 2:
                diff_sq = (m[a, a] + m[b, b] - m[a, b] - m[b, a]).real
                assert diff_sq > 0.0
    _report(8, f"cross moments {cross:.2e}; all distinct-pair difference variances positive")


def test_criterion_09_dynamics():
    sol = solve_gap(POINT)
    spec = diagonalize_h(POINT, sol.lambda_mod)
    worst = 0.0
    for pair in build_all_pairs(POINT, sol.lambda_mod):
        for t_ev in (0.1, 1.0, 10.0):
            worst = max(worst, dynamics_residual(pair, spec, t_ev))
    assert worst < 1e-10
    _report(9, f"matrix-exponential vs closed rotation, residual {worst:.2e}")


def test_criterion_10_free_energy_equivalence():
    sol = solve_gap(POINT)
    step = 1e-6

    def deriv(lam):
        # central difference; phi is even in lambda, so phi(-x) = phi(|x|)
        return (free_energy_density(POINT, lam + step)
                - free_energy_density(POINT, abs(lam - step))) / (2 * step)

    stationary = [0.0] + [math.sqrt(r**2 - U**2) / (2 * abs(T)) for r in sol.fixed_points]
    for lam in stationary:
        assert abs(deriv(lam)) < 1e-6
    for lam in np.arange(0.0, 1.0 / math.sqrt(2.0), 1e-3):
        if abs(deriv(float(lam))) < 1e-6:
            assert min(abs(lam - s) for s in stationary) <= 2e-3
    assert free_energy_density(POINT, sol.lambda_mod) < free_energy_density(POINT, 0.0)
    _report(10, "free energy stationary exactly at the gap-equation solutions; condensed minimum lower")


def test_criterion_11_oracle_trends():
    start = time.perf_counter()
    cold, warm, residuals = [], [], []
    for n in (2, 3, 4, 5):
        obs = lattice_observables(LatticeSpec(n_sites=n, params=POINT))
        cold.append(obs.zero_mode_density)
        residuals.append(max(obs.symmetry_residuals.values()))
        warm.append(zero_mode_density(LatticeSpec(n_sites=n, params=ModelParams(t=T, U=U, beta=1.0))))
    elapsed = time.perf_counter() - start

    assert max(residuals) < 1e-10
    assert all(c > w for c, w in zip(cold, warm)), (cold, warm)
    assert elapsed < 60.0
    print(f"criterion 11 data: beta=4 sequence {[f'{v:.6f}' for v in cold]}, "
          f"beta=1 sequence {[f'{v:.6f}' for v in warm]}, "
          f"runtime {elapsed:.1f}s, max residual {max(residuals):.2e}")
    assert all(b >= a for a, b in zip(cold, cold[1:])), (
        "zero-mode density is not nondecreasing over N: the finite-size "
        f"sequence {[f'{v:.6f}' for v in cold]} converges to rho0 = "
        f"{solve_gap(POINT).rho0:.6f} from above (positive O(1/N) correction "
        "from the on-site i=j term); only the off-diagonal part "
        "density - 1/N rises with N"
    )
    _report(11, "zero-mode density trends, symmetry residuals, runtime")


def test_criterion_12_classical_critical_limits():
    bc = critical_beta(POINT)

    def beta_for_lambda(lam):
        # continuation along the critical line: pick beta so that the solved
        # order parameter equals lam (f is increasing in beta => bisection)
        eta = eta_value(POINT, lam)

        def g(b):
            return f_beta(eta, ModelParams(t=T, U=U, beta=b)) - eta

        lo, hi = bc, bc + 10.0
        assert g(lo) < 0.0 < g(hi)
        for _ in range(200):
            mid = 0.5 * (lo + hi)
            if mid <= lo or mid >= hi:
                break
            if g(mid) < 0.0:
                lo = mid
            else:
                hi = mid
        return 0.5 * (lo + hi)

    rows = []
    for lam in (1e-3, 1e-4):
        params = ModelParams(t=T, U=U, beta=beta_for_lambda(lam))
        pairs = {p.id.label: p for p in build_all_pairs(params, lam)}
        rows.append(pairs)

    for label in ("03", "12"):
        hbars = [r[label].hbar for r in rows]
        variances = [r[label].variance for r in rows]
        assert hbars[0] > hbars[1] > 0.0
        assert abs(variances[1] - 4.0) < abs(variances[0] - 4.0)
        assert variances[1] == pytest.approx(4.0, abs=1e-5)
    for label in ("02", "13"):
        hbars = [r[label].hbar for r in rows]
        variances = [r[label].variance for r in rows]
        assert hbars[0] > hbars[1] > 0.0
        assert variances[0] > variances[1] > 0.0
        assert variances[1] < 1e-6
    _report(12, "hbar and xi+ variances decrease monotonically along the "
               "critical continuation; xi- variances approach 4")
