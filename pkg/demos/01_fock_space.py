"""
Fock space of the isotonic oscillator
=====================================

Generators on a truncated ladder, the su(1,1) commutator, and the
position-space eigenfunctions with their Gram matrix.
"""

import numpy as np

from isocs.fock import FockSpace, ModelParams, commutator, energy, generator, wavefunction, wavefunction_gram

# A = 3/4 gives Bargmann index 2
model = ModelParams(A=0.75)
print("gamma =", model.gamma)
print("first energies:", energy(np.arange(5), model.gamma))

space = FockSpace(model.gamma, 64)
km = generator(space, "Kminus")
kp = generator(space, "Kplus")
k0 = generator(space, "K0")

# [K-, K+] = 2 K0 everywhere except the last row, where truncation cuts K+
c = commutator(km, kp).entries - 2 * k0.entries
print("max |[K-,K+] - 2K0| below the edge:", np.abs(c[:-1, :-1]).max())
print("at the edge:", abs(c[-1, -1]))

# eigenfunctions vanish at the origin and are orthonormal on the half-line
x = np.array([1e-3, 0.5, 1.0, 2.0, 4.0])
for m in (0, 1, 5):
    print(f"Phi_{m}(x) =", np.round(wavefunction(m, model.gamma, x), 6))
gram = wavefunction_gram(10, model.gamma)
print("Gram deviation, m,n <= 10:", np.abs(gram - np.eye(11)).max())
