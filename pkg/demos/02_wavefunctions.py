#!/usr/bin/env python3
# Wavefunctions u(r) = C J_nu(z0 exp(-beta r / 2)) and their anatomy.
#
# As r runs from 0 to infinity the Bessel argument slides from z0 down to
# 0, so u(r) traverses the first n oscillations of J_nu and then decays
# like exp(-alpha r).  Node counts follow Sturm ordering: the n-th state
# has exactly n interior zeros.

import numpy as np

from expwell import make_params, normalize, ode_residual, spectrum, \
    wavefunction, wavefunction_table

p = make_params(v0=25.0, beta=1.0)
states = [normalize(p, s) for s in spectrum(p)]

r = np.linspace(0.0, 20.0, 4001)
for s in states:
    u = wavefunction(p, s, r)
    interior = u[1:]
    sgn = np.sign(interior[interior != 0.0])
    nodes = int(np.sum(sgn[1:] != sgn[:-1]))
    norm = np.trapezoid(u * u, r)
    print(f"n={s.n}: nu={s.nu:.6f}  norm_c={s.norm_c:.8f}  "
          f"nodes={nodes}  u(0)={u[0]:.2e}  trapz(u^2)={norm:.8f}")

# The boundary condition u(0) = 0 is the quantization condition itself:
# u(0) = C J_nu(z0), and nu was chosen to be a zero of J_nu(z0).

# Every tabulated u solves the working ODE.  The 5-point finite-difference
# residual is scaled by max |u|; a wrong energy is flagged immediately.
s0 = states[0]
table = wavefunction_table(p, s0, np.arange(0.0, 12.0, 1e-3),
                           with_radial=False)
print(f"\nODE residual with the true alpha    : "
      f"{ode_residual(p, table, s0.alpha):.2e}")
print(f"ODE residual with alpha off by 0.1% : "
      f"{ode_residual(p, table, 1.001 * s0.alpha):.2e}")

# Optional: draw the three levels (written next to this script).
try:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None
if plt is not None:
    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    for s in states:
        ax.plot(r, wavefunction(p, s, r),
                label=f"n={s.n}, E={s.energy:.4f}")
    ax.set_xlim(0.0, 12.0)
    ax.set_xlabel("r")
    ax.set_ylabel("u(r)")
    ax.set_title("normalized bound states, V0=25, beta=1")
    ax.legend()
    ax.axhline(0.0, color="gray", lw=0.6)
    fig.tight_layout()
    fig.savefig("wavefunctions.png", dpi=120)
    print("\nwrote wavefunctions.png")
