"""Root multiplicity near beta_c at U=0.48; ODLRO part monotonicity; mpmath oracle value."""
import math
import numpy as np
import mpmath as mp

from hcb2 import *
from hcb2 import lattice as lat

pcrit = critical_beta(ModelParams(t=-1.0, U=0.48, beta=1.0))
print("beta_c(U=0.48):", pcrit)

for b in np.linspace(pcrit - 0.5, pcrit + 0.15, 27):
    params = ModelParams(t=-1.0, U=0.48, beta=float(b))
    roots = gap_fixed_points(params)
    sel = solve_gap(params)
    print(f"beta={b:.4f}: roots={[f'{r:.8f}' for r in roots]} -> lam={sel.lambda_mod:.6f} {sel.phase}")

# high-precision oracle for f_beta(0.4; t=-1, U=0.3, beta=5)
mp.mp.dps = 60
t, U, beta, eta = mp.mpf(-1), mp.mpf("0.3"), mp.mpf(5), mp.mpf("0.4")
val = -t * mp.sinh(beta * eta) / (mp.cosh(beta * U) + mp.cosh(beta * eta))
print("mpmath f_beta(0.4; t=-1, U=0.3, beta=5) =", mp.nstr(val, 25))
print("float  f_beta:", f_beta(0.4, ModelParams(t=-1.0, U=0.3, beta=5.0)))
print("diff:", abs(float(val) - f_beta(0.4, ModelParams(t=-1.0, U=0.3, beta=5.0))))

# U -> 0 limit of critical beta
p_small = ModelParams(t=-1.0, U=1e-6, beta=1.0)
print("beta_c(U=1e-6):", critical_beta(p_small), "vs limit 2:", abs(critical_beta(p_small) - 2.0))

# off-diagonal (ODLRO) part of the zero-mode density: is it nondecreasing at beta=4?
for beta in (4.0, 1.0):
    pl = ModelParams(t=-1.0, U=0.25, beta=beta)
    vals = []
    for n in range(2, 6):
        d = zero_mode_density(lat.LatticeSpec(n_sites=n, params=pl))
        vals.append(d - 1.0 / n)  # remove the trivial on-site i=j part
    print(f"beta={beta}: off-diagonal part N=2..5: {[f'{v:.6f}' for v in vals]}")
