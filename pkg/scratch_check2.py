"""Follow-ups: JE02 deviation structure; zero-mode N-sequences; first-order root scan."""
import math
import time
import numpy as np

from hcb2 import *
from hcb2 import fluctuations as fl, lattice as lat, mean_field as mf

np.set_printoptions(linewidth=160, precision=6, suppress=True)

p2 = ModelParams(t=-1.0, U=0.25, beta=4.0)
sol = solve_gap(p2)
spec2 = diagonalize_h(p2, sol.lambda_mod)
lam, t, U, eta_v = sol.lambda_mod, p2.t, p2.U, sol.selected_eta
xi_m = eta_v - U
sp1, sm1 = pauli_site_operator(1, "plus"), pauli_site_operator(1, "minus")
sp2_, sm2_ = pauli_site_operator(2, "plus"), pauli_site_operator(2, "minus")

JE02_printed = (1j*(xi_m/(2*eta_v))*(sp1@sm2_ - sp2_@sm1)
                + 1j*(t*lam/eta_v)*(sp1 - sp2_) - 1j*(t*lam/eta_v)*(sm1 - sm2_))
JE02_corrected = (1j*(xi_m/eta_v)*(sp1@sm2_ - sp2_@sm1)
                  + 1j*(t*lam/eta_v)*(sp1 - sp2_) - 1j*(t*lam/eta_v)*(sm1 - sm2_))
E02, JE02 = build_EJE(0, 2, q_minus(), spec2)
print("JE02 vs printed:", np.max(np.abs(JE02 - JE02_printed)))
print("JE02 vs corrected (xi-/eta):", np.max(np.abs(JE02 - JE02_corrected)))
print("difference matrix (printed):")
print(np.abs(JE02 - JE02_printed))

# --- zero-mode sequences
for beta in (4.0, 1.0):
    pl = ModelParams(t=-1.0, U=0.25, beta=beta)
    seq = []
    t0 = time.perf_counter()
    for n in range(1, 6):
        seq.append(zero_mode_density(lat.LatticeSpec(n_sites=n, params=pl)))
    print(f"beta={beta}: zero-mode N=1..5: {[f'{v:.6f}' for v in seq]}  ({time.perf_counter()-t0:.1f}s)")
print("mean-field rho0 at beta=4:", sol.rho0, "| beta=1 phase:", solve_gap(ModelParams(t=-1.0, U=0.25, beta=1.0)).phase)

# --- first-order window root multiplicity at U=0.48
p48 = lambda b: ModelParams(t=-1.0, U=0.48, beta=b)
for b in np.linspace(20, 60, 21):
    roots = gap_fixed_points(p48(float(b)))
    if len(roots) != 1:
        print(f"beta={b:.1f}: roots={roots}")
print("scan betas done; now finer around suspected window")
for b in np.linspace(30, 45, 31):
    roots = gap_fixed_points(p48(float(b)))
    lams = [f"{r:.6f}" for r in roots]
    sel = solve_gap(p48(float(b)))
    print(f"beta={b:.1f}: n_roots={len(roots)} {lams} selected lam={sel.lambda_mod:.6f} phase={sel.phase}")
