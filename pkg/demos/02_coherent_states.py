"""
Even, odd and Gazeau-Klauder coherent states
============================================

Normalization (canonical against the closed-form normalizers), photon
number distributions and the revival period of each family.
"""

import math

import numpy as np

from isocs.fock import FockSpace
from isocs.specfun import hyp1f1
from isocs.states import bgcs_even, bgcs_odd, evolve, gkcs, normalization, overlap, pnd_vector

space = FockSpace(2.0, 64)
z = 1.5 + 0.5j
x = abs(z) ** 2

# the closed-form normalizers are F and F - 1; the actual sums are the parity parts of F
f = hyp1f1(1.0, 2.0, x / 4)
print("F =", f, " N_e =", normalization("bgcs_even", x, 2.0), " N_o =", normalization("bgcs_odd", x, 2.0))
print("paper-normalized even state, |s|^2 =", bgcs_even(z, space, norm_mode="paper").norm_sq)
print("paper-normalized odd state,  |s|^2 =", bgcs_odd(z, space, norm_mode="paper").norm_sq)

# PND of each family; the GK vacuum probability is 1/F
for name, s in (("even", bgcs_even(z, space)), ("odd", bgcs_odd(z, space)), ("GK", gkcs(4.0, 0.0, space))):
    p = pnd_vector(s)
    print(f"{name:4s} P_0..P_5 =", np.round(p[:6], 5), " sum =", p.sum())
print("1/F(1) =", 1 / hyp1f1(1.0, 2.0, 1.0))

# energy gaps are 4 (all n) and 8 (one parity), so the autocorrelation repeats with period pi/2 and pi/4
ts = np.linspace(0, math.pi, 9)
for name, s in (("GK", gkcs(3.0, 0.4, space)), ("even", bgcs_even(1.3 + 0.2j, space))):
    a = [abs(overlap(s, evolve(s, t))) for t in ts]
    print(f"{name:4s} |<s|s(t)>| at t = k pi/8:", np.round(a, 6))
