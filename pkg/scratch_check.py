"""Scratch validation of the physics before freezing tests. Not part of the package."""
import math
import numpy as np

from hcb2 import *
from hcb2 import operators as ops, mean_field as mf, fluctuations as fl, lattice as lat

np.set_printoptions(linewidth=140, precision=6, suppress=True)

# --- spectrum check
p = ModelParams(t=-1.0, U=0.3, beta=5.0)
h = build_h_lambda(p, 0.2)
print("h:\n", np.real(h))
print("eigvals numeric:", np.linalg.eigvalsh(h))
spec = diagonalize_h(p, 0.2)
print("eigvals fixed order:", spec.eigenvalues)
print("orthonormality:", np.max(np.abs(spec.eigenvectors.conj().T @ spec.eigenvectors - np.eye(4))))
print("reconstruct:", np.max(np.abs(spec.hamiltonian() - h)))
for i in range(4):
    r = np.linalg.norm(h @ spec.eigenvectors[:, i] - spec.eigenvalues[i] * spec.eigenvectors[:, i])
    print(f"residual phi_{i}: {r:.2e}")

# --- gibbs checks
rho = gibbs_density(p, 0.2)
print("trace:", np.trace(rho), "commute:", np.max(np.abs(rho @ h - h @ rho)))
Z_closed = 2*math.cosh(5*0.3) + 2*math.cosh(5*0.5)
Z_direct = np.trace(np.real(np.linalg.eigh(h)[1] @ np.diag(np.exp(-5*np.linalg.eigvalsh(h))) @ np.linalg.eigh(h)[1].T.conj())).real
print("Z closed:", Z_closed, "direct:", Z_direct)
print("sz1, sz2:", expectation(rho, pauli_site_operator(1,'z')).real, expectation(rho, pauli_site_operator(2,'z')).real)

# --- symmetry parities
u12 = type_exchange_unitary()
sx12 = particle_hole_unitary()
print("u12 unitary:", np.max(np.abs(u12 @ u12.conj().T - np.eye(4))))
for i, expect_u, expect_x in [(0,-1,-1),(1,1,-1),(2,1,1),(3,1,1)]:
    v = spec.eigenvectors[:, i]
    pu = v.conj() @ (u12 @ v)
    px = v.conj() @ (sx12 @ v)
    print(f"phi_{i}: u12 parity {pu.real:+.3f} (expect {expect_u}), sx12 parity {px.real:+.3f} (expect {expect_x})")

# --- gauge covariance
phi = 0.7
g = gauge_unitary(phi, phi)
h_rot = g.conj().T @ h @ g
h_target = build_h_lambda(p, 0.2*np.exp(-1j*phi))
print("gauge covariance U^dag h U = h_{e^{-i phi} lam}:", np.max(np.abs(h_rot - h_target)))

# --- gap equation at (t=-1, U=0.25, beta=4)
p2 = ModelParams(t=-1.0, U=0.25, beta=4.0)
sol = solve_gap(p2)
print("\nsolution:", sol.phase, "eta*:", sol.selected_eta, "lam:", sol.lambda_mod, "rho0:", sol.rho0)
print("gap residual:", sol.gap_residual)
rho2 = gibbs_density(p2, sol.lambda_mod)
tr = expectation(rho2, pauli_site_operator(1, "minus"))
print("self-consistency |Tr(rho s-) - lam|:", abs(tr - sol.lambda_mod))
print("beta_c:", critical_beta(p2), "2ln3:", 2*math.log(3))
print("kappa:", tricritical_kappa())

# fixed-point iteration oracle
eta = gap_interval(p2)[1]
for _ in range(200):
    eta = f_beta(eta, p2)
print("fixed-point oracle eta:", eta, "matches:", abs(eta - sol.selected_eta))

# --- free energy
for lam in [0.0, sol.lambda_mod]:
    h_step = 1e-6
    d = (free_energy_density(p2, lam + h_step) - free_energy_density(p2, max(lam - h_step, 0.0) if lam == 0 else lam - h_step)) / (2*h_step) if lam > 0 else (free_energy_density(p2, h_step) - free_energy_density(p2, 0.0))/h_step
    print(f"dphi at lam={lam}: {d:.2e}")
print("phi(lam*) < phi(0):", free_energy_density(p2, sol.lambda_mod), free_energy_density(p2, 0.0))

# --- ground state
gs = ground_state_solution(ModelParams.ground_state(-1.0, 0.6))
print("\nground state lam:", gs.lambda_mod, "rho0:", gs.rho0, "bound:", condensate_bound(ModelParams.ground_state(-1.0, 0.6)))

# --- fluctuation pairs
pairs = build_all_pairs(p2, sol.lambda_mod)
h2 = build_h_lambda(p2, sol.lambda_mod)
spec2 = diagonalize_h(p2, sol.lambda_mod)
for pr in pairs:
    dyn = commutator_dynamics_check(pr, h2)
    ccr = ccr_residual(pr, rho2)
    ve, vj = measured_variances(pr, rho2)
    print(f"pair {pr.id.label} ({pr.id.generator}, {pr.id.frequency_class}): freq {pr.frequency:.6f} hbar {pr.hbar:.6f} "
          f"var {pr.variance:.6f} | dyn res {dyn:.2e} ccr res {ccr:.2e} var res {abs(ve-pr.variance):.2e},{abs(vj-pr.variance):.2e}")

print("max cross moment:", max_cross_moment(pairs, rho2))
print("dynamics residual t=10:", max(dynamics_residual(pr, spec2, 10.0) for pr in pairs))

# selection rules: all 12 combos
worst_zero, worst_nonzero = 0.0, 1.0
nonzero_set = {("02","Q-"),("03","Q-"),("12","Q+"),("13","Q+")}
for i in range(4):
    for j in range(i+1, 4):
        for gen in ("Q+", "Q-"):
            E, JE = build_EJE(i, j, fl.generator_matrix(gen), spec2)
            mx = max(np.max(np.abs(E)), np.max(np.abs(JE)))
            if (f"{i}{j}", gen) in nonzero_set:
                worst_nonzero = min(worst_nonzero, mx)
            else:
                worst_zero = max(worst_zero, mx)
print("selection rules: max |zero combos|:", worst_zero, "min nonzero magnitude:", worst_nonzero)

# E_02 explicit Pauli expansion
lam = sol.lambda_mod
t, U = p2.t, p2.U
eta_v = sol.selected_eta
xi_m = eta_v - U
sp1, sm1 = pauli_site_operator(1,"plus"), pauli_site_operator(1,"minus")
sp2_, sm2_ = pauli_site_operator(2,"plus"), pauli_site_operator(2,"minus")
sz1, sz2 = pauli_site_operator(1,"z"), pauli_site_operator(2,"z")
E02_formula = (xi_m/(2*eta_v))*q_minus() + (t*lam/eta_v)*(sz1@sp2_ - sz2@sp1) + (t*lam/eta_v)*(sz1@sm2_ - sz2@sm1)
JE02_formula = 1j*(xi_m/(2*eta_v))*(sp1@sm2_ - sp2_@sm1) + 1j*(t*lam/eta_v)*(sp1 - sp2_) - 1j*(t*lam/eta_v)*(sm1 - sm2_)
E02, JE02 = build_EJE(0, 2, q_minus(), spec2)
print("E02 vs printed expansion:", np.max(np.abs(E02 - E02_formula)))
print("JE02 vs printed expansion:", np.max(np.abs(JE02 - JE02_formula)))

# --- lattice oracle
pl = ModelParams(t=-1.0, U=0.25, beta=4.0)
for n in (1, 2, 3):
    s = lat.LatticeSpec(n_sites=n, params=pl)
    obs = lattice_observables(s)
    print(f"N={n}: zero-mode {obs.zero_mode_density:.6f} sz {obs.sigma_z_per_site:.2e} "
          f"res {max(obs.symmetry_residuals.values()):.2e}")
s1 = lat.LatticeSpec(n_sites=1, params=pl)
H1 = build_lattice_hamiltonian(s1)
print("N=1 H:", np.diag(H1), "(expect U * (1,-1,-1,1))")
s2 = lat.LatticeSpec(n_sites=2, params=pl)
H2 = build_lattice_hamiltonian(s2)
H2u = build_lattice_hamiltonian_unscaled(lat.LatticeSpec(n_sites=2, params=ModelParams(t=-1.0, U=4*0.25, beta=4.0)))
print("unscaled relation:", np.max(np.abs(H2u - (H2 - 2*0.25*np.eye(16)))))
perm = lat.swap_sites_permutation(s2, 0, 1)
print("permutation invariance:", np.linalg.norm(H2[:, perm] - H2[perm, :]))
