"""
Toeplitz quantization
=====================

Symbols z^p conj(z)^q become banded matrices.  Within one parity sector
the literal z has nothing to couple, z^2 carries the two-step band, and
|z|^2 is diagonal.
"""

import numpy as np

from isocs.fock import FockSpace, generator, identity
from isocs.measures import RadialMeasure
from isocs.quantize import doot_claim_compare, sector_block, toeplitz

space = FockSpace(2.0, 16)
m = RadialMeasure("elementary_even", 2.0)
np.set_printoptions(precision=3, suppress=True, linewidth=120)

print("A[1] on the even sector:\n", sector_block(toeplitz("one", "bgcs_even", m, space), "bgcs_even").real)
print("A[z] is identically zero:", not np.any(toeplitz("z", "bgcs_even", m, space).entries))
print("A[z^2] even block:\n", sector_block(toeplitz("z2", "bgcs_even", m, space), "bgcs_even").real)

# |z|^2 quantizes to 2K0 + 4I on either parity
a = toeplitz("modz2", "bgcs_odd", RadialMeasure("elementary_odd", 2.0), space).entries
target = 2 * generator(space, "K0").entries + 4 * identity(space).entries
print("odd sector, A[|z|^2] - (2K0 + 4I) diagonal:", np.diag(a - target)[1::2].real)

for row in doot_claim_compare(FockSpace(2.0, 24)):
    print(f"{row.family:9s} {row.quantized:6s} vs {row.target:7s} [{row.convention:13s}] {row.max_residual:.3g}")
