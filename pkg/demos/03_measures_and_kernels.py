"""
Weights, resolution of the identity and reproducing kernels
===========================================================

The Gamma-density weight resolves the identity on every family's sector.
The printed Meijer-G weights are tabulated against x = |z| and
checked the same way.
"""

import numpy as np

from isocs.fock import FockSpace
from isocs.kernels import idempotence_residual, kernel
from isocs.measures import RadialMeasure, identity_resolution_residual, meijer_lambda, reduced_weight
from isocs.states import bgcs_label, gkcs_label

# the reducing Meijer function reduces to the Gamma density
J = np.linspace(0.5, 20, 6)
print("lambda (Meijer):   ", meijer_lambda(J, 2.0))
print("lambda (elementary):", reduced_weight(J, 2.0))

# printed weights against x = |z| for three gammas (the data behind the weight figure)
xs = np.linspace(0.1, 6.0, 7)
for g in (1.5, 2.0, 2.5):
    print(f"W_e, gamma={g}:", np.round(RadialMeasure("paper_meijer_even", g).weight(xs ** 2), 5))

space = FockSpace(2.0, 64)
for family, form in (("bgcs_even", "elementary_even"), ("bgcs_odd", "elementary_odd"), ("gkcs", "elementary_gk"),
                     ("bgcs_even", "paper_meijer_even"), ("gkcs", "paper_meijer_gk")):
    m = RadialMeasure(form, 2.0)
    mode = "paper" if m.printed and family != "gkcs" else "canonical"
    print(f"{family:9s} {form:18s} max |M_nn - 1| =", identity_resolution_residual(family, m, space, mode))

# kernels: hermitian, unit on the diagonal, and idempotent under the measure
a, b = gkcs_label(2.0, 0.1), gkcs_label(3.0, -0.4)
k = kernel("gkcs", a, b, space)
print("K_GK(a,b) =", k.value, " printed form:", k.paper_value)
m = RadialMeasure("elementary_gk", 2.0)
for nodes in (24, 48, 96):
    print(f"idempotence with {nodes} nodes:", idempotence_residual("gkcs", a, b, m, space, nodes=nodes))
print("even idempotence, adaptive:", idempotence_residual(
    "bgcs_even", bgcs_label(1.0, "even"), bgcs_label(0.5 + 0.5j, "even"), RadialMeasure("elementary_even", 2.0), space))
