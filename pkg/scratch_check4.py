"""Edge cases: big beta, lam=0 paths, CLI smoke, continuation points."""
import json
import math
import subprocess
import sys
import numpy as np

from hcb2 import *
from hcb2 import fluctuations as fl, mean_field as mf
from hcb2.cli import main as cli_main

# beta = 1000
p = ModelParams(t=-1.0, U=0.3, beta=1000.0)
sol = solve_gap(p)
print("beta=1000:", sol.phase, sol.lambda_mod, sol.selected_eta, "residual:", sol.gap_residual)
print("  vs ground state:", ground_state_solution(ModelParams.ground_state(-1.0, 0.3)).lambda_mod)
rho = gibbs_density(p, sol.lambda_mod)
print("  rho trace:", np.trace(rho).real, "free energy:", free_energy_density(p, sol.lambda_mod))

# lam = 0 spectrum paths
p0 = ModelParams(t=-1.0, U=0.3, beta=5.0)
s0 = diagonalize_h(p0, 0.0)
print("lam=0 eigenvalues:", s0.eigenvalues)
print("lam=0 completeness:", np.max(np.abs(s0.projections.sum(axis=0) - np.eye(4))))
print("lam=0 residuals:", max(np.linalg.norm(build_h_lambda(p0, 0.0) @ s0.eigenvectors[:, i] - s0.eigenvalues[i]*s0.eigenvectors[:, i]) for i in range(4)))
try:
    diagonalize_h(p0, 0.0, closed_form=True)
except DegenerateSpectrumError as e:
    print("closed_form at lam=0 raises ok")
# U=0, lam=0
sz = diagonalize_h(ModelParams(t=-1.0, U=0.0, beta=5.0), 0.0)
print("U=0,lam=0 evals:", sz.eigenvalues)

# degenerate pair limit values
pair = fl.build_pair("03", p0, 0.0)
print("degenerate pair 03: hbar", pair.hbar, "var", pair.variance, "freq", pair.frequency, "ops None:", pair.E_op is None)
pair2 = fl.build_pair("02", p0, 0.0)
print("degenerate pair 02: hbar", pair2.hbar, "var", pair2.variance)

# continuation points for lam -> 0: solve beta(lam) at U=0.25
def beta_for_lambda(t, U, lam):
    params0 = ModelParams(t=t, U=U, beta=1.0)
    bc = critical_beta(params0)
    eta = math.hypot(U, 2*abs(t)*lam)
    def g(b):
        return f_beta(eta, ModelParams(t=t, U=U, beta=b)) - eta
    lo, hi = bc, bc + 10.0
    glo, ghi = g(lo), g(hi)
    assert glo < 0 < ghi, (glo, ghi)
    for _ in range(200):
        mid = 0.5*(lo+hi)
        if mid <= lo or mid >= hi:
            break
        if g(mid) < 0:
            lo = mid
        else:
            hi = mid
    return 0.5*(lo+hi)

for lam in (1e-3, 1e-4):
    b = beta_for_lambda(-1.0, 0.25, lam)
    params = ModelParams(t=-1.0, U=0.25, beta=b)
    prs = fl.build_all_pairs(params, lam)
    print(f"lam={lam}: beta={b:.9f}", {pr.id.label: (f"{pr.hbar:.3e}", f"{pr.variance:.6f}") for pr in prs})

# Heisenberg-type bound: variance >= hbar/2 at a generic condensed point
p2 = ModelParams(t=-1.0, U=0.25, beta=4.0)
sol2 = solve_gap(p2)
for pr in fl.build_all_pairs(p2, sol2.lambda_mod):
    assert pr.variance**2 >= (pr.hbar/2)**2 - 1e-15, pr
print("uncertainty bound holds")

# evolve composition
pr = fl.build_pair("02", p2, sol2.lambda_mod)
r1, r2, r12 = fl.evolve(pr, 0.3), fl.evolve(pr, 1.1), fl.evolve(pr, 1.4)
print("rotation composition:", np.max(np.abs(r2 @ r1 - r12)))

# CLI smoke tests (in-process)
rc = cli_main(["solve", "--t", "-1", "--U", "0.25", "--beta", "4"])
print("solve rc:", rc)
rc = cli_main(["solve", "--t", "0.5", "--U", "0.25", "--beta", "4"])
print("solve t>0 rc:", rc)
rc = cli_main(["fluct", "--t", "-1", "--U", "1.5", "--beta", "50"])
print("fluct normal rc:", rc)
rc = cli_main(["critical", "--t", "-1", "--U", "0.6"])
print("critical undefined rc:", rc)
rc = cli_main(["scan", "--t", "-1", "--U", "0.25", "--beta", "1,4"])
print("scan rc:", rc)
rc = cli_main(["oracle", "--t", "-1", "--U", "0.25", "--beta", "4", "--n-max", "2"])
print("oracle rc:", rc)
