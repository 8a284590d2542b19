#!/usr/bin/env python3
# How fast do the oracles converge, and what does Richardson buy?
#
# Numerov has O(h^4) local error, the 3-point finite-difference Laplacian
# O(h^2).  Combining two grids as (16 E_h/2 - E_h)/15 and (4 E_h/2 - E_h)/3
# cancels the leading term; the plot of error vs h below shows the slopes.

import numpy as np

from expwell import (
    RadialGrid,
    fd_spectrum,
    make_params,
    numerov_spectrum,
    spectrum,
)

p = make_params(v0=25.0, beta=1.0)
exact = np.sort([s.energy for s in spectrum(p)])
print(f"reference analytic energies: {exact}")

print("\nNumerov, ground state error vs step (raw and extrapolated):")
print(f"{'h':>10s} {'raw error':>14s} {'richardson':>14s}")
for n in (563, 1125, 2251, 4501):
    g = RadialGrid(r_max=45.0, n_points=n)
    raw = numerov_spectrum(p, g, richardson=False).energies[0]
    rich = numerov_spectrum(p, g, richardson=True).energies[0]
    print(f"{g.h:>10.5f} {abs(raw - exact[0]):>14.3e} "
          f"{abs(rich - exact[0]):>14.3e}")

print("\nfinite differences, ground state:")
print(f"{'h':>10s} {'raw error':>14s} {'richardson':>14s}")
for n in (1126, 2251, 4501, 9001):
    g = RadialGrid(r_max=45.0, n_points=n)
    raw = fd_spectrum(p, g, richardson=False).energies[0]
    rich = fd_spectrum(p, g, richardson=True).energies[0]
    print(f"{g.h:>10.5f} {abs(raw - exact[0]):>14.3e} "
          f"{abs(rich - exact[0]):>14.3e}")

# Quadrupling the point count should cut the raw Numerov error ~256x and
# the raw finite-difference error ~16x; the extrapolated columns sit at
# the rounding floor almost immediately.

print("\nall three levels with the default grids:")
num = numerov_spectrum(p)
fd = fd_spectrum(p)
for i in range(3):
    print(f"  level {i}: analytic {exact[i]:.12f}  "
          f"numerov {num.energies[i]:.12f}  fd {fd.energies[i]:.12f}")
