"""
Thermal states in coherent-state pictures
=========================================

Partition functions by direct Boltzmann sums, the Husimi function and
the Glauber-Sudarshan P function that reproduces the diagonal weights.
"""

import math

import numpy as np

from isocs.fock import FockSpace
from isocs.thermal import (ThermalParams, husimi_closed_form, husimi_normalization, husimi_radial, p_function,
                           p_reconstruction, partition_function, printed_partition_function, printed_husimi,
                           thermal_moment)

space = FockSpace(2.0, 64)
for beta in (0.25, 0.5, 1.0):
    p = ThermalParams(beta, 2.0)
    row = {f: partition_function(f, p) / printed_partition_function(f, p) for f in ("bgcs_even", "bgcs_odd", "gkcs")}
    print(f"beta={beta}: Z/Z_printed =", {k: round(v, 12) for k, v in row.items()}, " e^-2beta =", math.exp(-2 * beta))

p = ThermalParams(0.5, 2.0)
print("<K-K+> (GK) =", thermal_moment("gkcs", p, 1, space))

x = np.array([0.5, 2.0, 8.0])
for fam in ("bgcs_even", "bgcs_odd", "gkcs"):
    print(f"{fam:9s} Q direct:", husimi_radial(fam, p, x), "closed:", husimi_closed_form(fam, p, x),
          "printed:", printed_husimi(fam, p, x))
    print(f"{fam:9s} int Q dnu =", husimi_normalization(fam, p))

recon, weights, idx = p_reconstruction("gkcs", p, space, n_max=8)
print("P reconstruction - Boltzmann weights:", recon - weights)
print("P(x) on a grid:", p_function("gkcs", p, np.array([0.1, 1.0, 5.0])))
