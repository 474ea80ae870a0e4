"""Truncated Fock space of the isotonic oscillator and its su(1,1) generators.

Basis vectors |n, gamma> for n = 0..N-1 with

    K0 |n> = (2n + gamma) |n>
    K- |n> = sqrt(2n (n + gamma - 1)) |n-1>
    K+ |n> = sqrt(2(n+1)(n + gamma)) |n+1>

Operators are dense N x N matrices indexed by the full ladder; the even and
odd sectors are index subsets of the same ladder.
"""

from dataclasses import dataclass, field
import math

import numpy as np
from scipy import special as _sp

from .errors import DomainError
from .specfun import hyp1f1, pochhammer
from .quadrature import gauss_legendre

SECTORS = ("full", "even", "odd")
DEFAULT_TRUNC = 64
WAVEFUNCTION_MAX_M = 30


@dataclass(frozen=True)
class ModelParams:
    """Coupling g, potential strength A = g(g+1) and Bargmann index gamma."""

    A: float
    g: float | None = None
    gamma: float = field(init=False)

    def __post_init__(self):
        if self.g is not None and not math.isclose(self.A, self.g * (self.g + 1.0), rel_tol=1e-12, abs_tol=1e-15):
            raise ValueError("A must equal g(g+1)")
        object.__setattr__(self, "gamma", gamma_from_A(self.A))

    @classmethod
    def from_g(cls, g):
        return cls(A=g * (g + 1.0), g=g)


def gamma_from_A(A):
    """Bargmann index 1 + sqrt(1 + 4A)/2 for potential strength A >= 0."""
    if A < 0:
        raise DomainError("A must be non-negative")
    return 1.0 + 0.5 * math.sqrt(1.0 + 4.0 * A)


def energy(m, gamma):
    """Eigenvalue E_m = 2(2m + gamma); accepts integer arrays."""
    if np.ndim(m) == 0:
        return 2.0 * (2.0 * m + gamma)
    return 2.0 * (2.0 * np.asarray(m) + gamma)


@dataclass(frozen=True)
class FockSpace:
    gamma: float
    trunc: int = DEFAULT_TRUNC
    sector: str = "full"

    def __post_init__(self):
        if self.trunc < 1:
            raise ValueError("trunc must be positive")
        if self.sector not in SECTORS:
            raise ValueError(f"sector must be one of {SECTORS}")
        if not self.gamma > 1:
            raise DomainError("Bargmann index must exceed 1")

    @property
    def indices(self):
        """Full-ladder indices spanned by this sector."""
        start, step = {"full": (0, 1), "even": (0, 2), "odd": (1, 2)}[self.sector]
        return np.arange(start, self.trunc, step)

    @property
    def interior(self):
        """Sector indices away from the truncation edge (top two rows dropped)."""
        idx = self.indices
        return idx[idx <= self.trunc - 3]

    def with_sector(self, sector):
        return FockSpace(self.gamma, self.trunc, sector)

    def projector(self):
        p = np.zeros((self.trunc, self.trunc))
        p[self.indices, self.indices] = 1.0
        return p

    def energies(self):
        return energy(np.arange(self.trunc), self.gamma)


@dataclass(frozen=True, eq=False)
class OperatorMatrix:
    space: FockSpace
    entries: np.ndarray
    label: str

    def __post_init__(self):
        self.entries.setflags(write=False)

    def __matmul__(self, other):
        if isinstance(other, OperatorMatrix):
            _check_same(self.space, other.space)
            return OperatorMatrix(self.space, self.entries @ other.entries, f"{self.label}*{other.label}")
        return self.entries @ other

    def dagger(self):
        return OperatorMatrix(self.space, self.entries.conj().T.copy(), f"({self.label})^dagger")

    def interior_block(self):
        """Entries with both indices in the sector's interior."""
        idx = self.space.interior
        return self.entries[np.ix_(idx, idx)]


def _check_same(a, b):
    if a.gamma != b.gamma or a.trunc != b.trunc:
        raise ValueError("operators live on different Fock spaces")


def generator(space, which, convention="canonical", dtype=complex):
    """K0, Kplus or Kminus as a dense matrix on the full ladder.

    ``convention="sector_ladder"`` builds the parity-preserving family
    K+|m> = sqrt(2m(m+gamma)) |m+2>, K-|m> = sqrt(2m(m+gamma-2)) |m-2>,
    which keeps even and odd vectors in their own sectors.  K0 is the same
    in both conventions.  ``dtype=np.clongdouble`` builds the matrix in
    extended precision for algebra checks near the truncation edge.
    """
    if space.trunc < 2:
        raise ValueError("need trunc >= 2")
    real = np.finfo(dtype).dtype
    n = np.arange(space.trunc, dtype=real)
    g = real.type(space.gamma)
    mat = np.zeros((space.trunc, space.trunc), dtype=dtype)
    if which == "K0":
        mat[np.diag_indices(space.trunc)] = 2.0 * n + g
    elif convention == "canonical":
        amp = np.sqrt(2.0 * n[1:] * (n[1:] + g - 1.0))  # <n-1|K-|n>
        if which == "Kminus":
            mat[n[:-1].astype(int), n[1:].astype(int)] = amp
        elif which == "Kplus":
            mat[n[1:].astype(int), n[:-1].astype(int)] = amp
        else:
            raise ValueError(f"unknown generator {which!r}")
    elif convention == "sector_ladder":
        m = n[:-2]
        if which == "Kplus":
            mat[(m + 2).astype(int), m.astype(int)] = np.sqrt(2.0 * m * (m + g))
        elif which == "Kminus":
            top = n[2:]
            mat[(top - 2).astype(int), top.astype(int)] = np.sqrt(2.0 * top * (top + g - 2.0))
        else:
            raise ValueError(f"unknown generator {which!r}")
    else:
        raise ValueError(f"unknown convention {convention!r}")
    label = which if convention == "canonical" else f"{which}[sector_ladder]"
    return OperatorMatrix(space, mat, label)


def hamiltonian(space):
    return OperatorMatrix(space, np.diag(space.energies()).astype(complex), "H")


def identity(space):
    return OperatorMatrix(space, np.eye(space.trunc, dtype=complex), "I")


def commutator(a, b):
    _check_same(a.space, b.space)
    return OperatorMatrix(a.space, a.entries @ b.entries - b.entries @ a.entries, f"[{a.label},{b.label}]")


def vacuum_ladder_norm(n, gamma):
    """||(K+)^n |0>|| = sqrt(2^n n! (gamma)_n), evaluated in log space."""
    if n < 0:
        raise DomainError("n must be non-negative")
    if n == 0:
        return 1.0
    log_sq = n * math.log(2.0) + math.lgamma(n + 1.0) + math.lgamma(gamma + n) - math.lgamma(gamma)
    return math.exp(0.5 * log_sq)


def vacuum_ladder_norm_printed(n, gamma):
    """The closed form sqrt(4^n (gamma/2 + 1)_n) offered for the same norm."""
    if n == 0:
        return 1.0
    logp, _ = pochhammer(gamma / 2.0 + 1.0, n, log=True)
    return math.exp(0.5 * (n * math.log(4.0) + logp))


def wavefunction(m, gamma, x, max_m=WAVEFUNCTION_MAX_M):
    """Position-space eigenfunction Phi_m(x) on the half-line.

    sqrt(2 (gamma)_m / (m! Gamma(gamma))) x^(gamma-1/2) e^(-x^2/2) 1F1(-m; gamma; x^2);
    the 1F1 terminates, so it is a degree-m polynomial in x^2.
    """
    if m < 0 or m > max_m:
        raise DomainError(f"m must lie in [0, {max_m}]")
    x = np.asarray(x, dtype=float)
    if np.any(x <= 0):
        raise DomainError("wavefunction requires x > 0")
    log_norm = 0.5 * (math.log(2.0) + pochhammer(gamma, m, log=True)[0] - math.lgamma(m + 1.0) - _sp.gammaln(gamma))
    poly = hyp1f1(-m, gamma, x * x)
    with np.errstate(under="ignore"):
        envelope = np.exp(log_norm + (gamma - 0.5) * np.log(x) - 0.5 * x * x)
    out = envelope * poly
    return float(out) if np.ndim(out) == 0 else out


def wavefunction_gram(m_max, gamma, nodes=400):
    """Gram matrix of Phi_0..Phi_{m_max} by Gauss-Legendre after x = tan(pi u / 2)."""
    u, w = gauss_legendre(nodes)
    u = 0.5 * (u + 1.0)
    w = 0.5 * w
    x = np.tan(0.5 * math.pi * u)
    jac = 0.5 * math.pi / np.cos(0.5 * math.pi * u) ** 2
    phi = np.array([wavefunction(m, gamma, x) for m in range(m_max + 1)])
    return (phi * (w * jac)) @ phi.T
