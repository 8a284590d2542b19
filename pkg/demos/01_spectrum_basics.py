#!/usr/bin/env python3
# Bound states of the exponential well, start to finish.
#
# The well V(r) = -V0 exp(-beta r) binds a state for every order nu > 0
# with J_nu(z0) = 0, where z0 = 2 gamma / beta measures the well strength.
# Below we compute the spectrum of a z0 = 10 well three independent ways
# and watch them agree.

import numpy as np

from expwell import (
    fd_spectrum,
    find_nu_zeros,
    make_params,
    numerov_spectrum,
    spectrum,
)

# V0 = 25, beta = 1 in the hbar = 1, 2 mu = 1 convention: gamma = 5, z0 = 10.
p = make_params(v0=25.0, beta=1.0)
print(f"well: V0={p.v0}, beta={p.beta} -> gamma={p.gamma}, z0={p.z0}")

# The quantization condition J_nu(z0) = 0 has three solutions below z0.
zeros = find_nu_zeros(p.z0)
print(f"\norders nu with J_nu(10) = 0: {np.round(zeros.zeros, 6)}")
print(f"(the scan is complete: the first Bessel zero j_(nu,1) exceeds nu,")
print(f" so nothing can hide above the ceiling {zeros.search_ceiling})")

# Each order gives one bound state with E = -(nu beta / 2)^2.
states = spectrum(p)
print("\nanalytic spectrum (most bound first):")
for s in states:
    print(f"  n={s.n}: nu={s.nu:.10f}  alpha={s.alpha:.10f}  "
          f"E={s.energy:.10f}")

# Now forget the analytic route entirely: shoot the ODE inward with the
# Numerov scheme, and separately diagonalize the finite-difference matrix.
num = numerov_spectrum(p)
fd = fd_spectrum(p)
print("\nNumerov shooting   :", [f"{e:.10f}" for e in num.energies])
print("finite differences :", [f"{e:.10f}" for e in fd.energies])

analytic = np.sort([s.energy for s in states])
print("\nrelative deviations from the analytic energies:")
for i, (e_n, e_f) in enumerate(zip(num.energies, fd.energies)):
    dn = abs(e_n - analytic[i]) / abs(analytic[i])
    df = abs(e_f - analytic[i]) / abs(analytic[i])
    print(f"  level {i}: numerov {dn:.2e}, finite-difference {df:.2e}")

# A well with z0 < j_(0,1) ~ 2.405 binds nothing at all.
weak = make_params(v0=1.0, beta=1.0)  # z0 = 2
print(f"\nweak well z0={weak.z0}: analytic={len(spectrum(weak))} states, "
      f"numerov={len(numerov_spectrum(weak).energies)}, "
      f"fd={len(fd_spectrum(weak).energies)}")
