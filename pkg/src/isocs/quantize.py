"""Berezin-Toeplitz quantization of polynomial symbols in z and its conjugate.

For a symbol term c z^p conj(z)^q and states |z> = sum c_m(z) |m>,

    <m| A |n> = c int W(x) z^p conj(z)^q c_m(z) conj(c_n(z)) d^2z / pi.

With z = sqrt(x) e^{i theta} the angular integral keeps only p + m = q + n,
and what remains is the radial moment

    c int (W / N)(x) x^(p+m) dx / sqrt(rho_m rho_n),

so a symbol couples Fock indices that differ by p - q.  No angular
quadrature is ever done.
"""

from dataclasses import dataclass, field

import numpy as np

from .fock import OperatorMatrix, generator, identity
from .measures import RadialMeasure, normalized_moments
from .states import bgcs_label, expectation, log_rho, make_state, support

NAMED_SYMBOLS = {
    "one": {(0, 0): 1.0},
    "z": {(1, 0): 1.0},
    "zbar": {(0, 1): 1.0},
    "modz2": {(1, 1): 1.0},
    "z2": {(2, 0): 1.0},
    "zbar2": {(0, 2): 1.0},
}


@dataclass(frozen=True)
class Symbol:
    """Polynomial symbol sum_{(p,q)} coeff z^p conj(z)^q."""

    terms: dict = field(default_factory=dict)
    id: str = ""

    @classmethod
    def named(cls, name):
        if name not in NAMED_SYMBOLS:
            raise ValueError(f"unknown symbol {name!r}; choose from {sorted(NAMED_SYMBOLS)}")
        return cls(dict(NAMED_SYMBOLS[name]), name)

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0.0) + v
        return Symbol(out, f"{self.id}+{other.id}")

    def scaled(self, c):
        return Symbol({k: c * v for k, v in self.terms.items()}, f"{c}*{self.id}")

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        return sum(c * z ** p * np.conj(z) ** q for (p, q), c in self.terms.items())


def toeplitz(sym, family, measure, space, state_mode="canonical"):
    """Quantized operator of ``sym`` against the ``family`` states and ``measure``."""
    if isinstance(sym, str):
        sym = Symbol.named(sym)
    if family == "gkcs":
        raise ValueError("Toeplitz quantization is defined here for the BGCS families")
    if measure.family != family:
        raise ValueError(f"measure {measure.form} does not belong to family {family}")
    idx = support(family, space.trunc)
    top = max(p for p, _ in sym.terms) + int(idx[-1]) if sym.terms else 0
    ks = np.arange(top + 1)
    moments = normalized_moments(measure, ks, state_mode)
    lr = log_rho(space.gamma, top)
    mat = np.zeros((space.trunc, space.trunc), dtype=complex)
    in_support = np.zeros(space.trunc, dtype=bool)
    in_support[idx] = True
    for (p, q), c in sym.terms.items():
        for m in idx:
            n = m + p - q
            if 0 <= n < space.trunc and in_support[n]:
                k = m + p
                mat[m, n] += c * moments[k] * np.exp(lr[k] - 0.5 * (lr[m] + lr[n]))
    return OperatorMatrix(space, mat, f"A[{sym.id or 'symbol'}]")


def sector_block(op, family):
    """Entries with both indices in the family's interior sector."""
    idx = support(family, op.space.trunc)
    idx = idx[idx <= op.space.trunc - 3]
    return op.entries[np.ix_(idx, idx)]


@dataclass(frozen=True)
class Comparison:
    family: str
    quantized: str
    target: str
    convention: str
    max_residual: float


def _targets(space, convention):
    km = generator(space, "Kminus", convention)
    kp = generator(space, "Kplus", convention)
    k0 = generator(space, "K0", convention)
    eye = identity(space).entries
    return {
        "K-^2": km.entries @ km.entries,
        "K+^2": kp.entries @ kp.entries,
        "2K0+4I": 2.0 * k0.entries + 4.0 * eye,
        "2K0+8I": 2.0 * k0.entries + 8.0 * eye,
    }


PAIRINGS = (("z", "K-^2"), ("zbar", "K+^2"), ("z2", "K-^2"), ("zbar2", "K+^2"),
            ("modz2", "2K0+4I"), ("modz2", "2K0+8I"))


def doot_claim_compare(space, conventions=("canonical", "sector_ladder")):
    """Interior-sector comparison of quantized symbols with generator polynomials.

    The literal symbols z and zbar are paired with K-^2 and K+^2 as printed;
    z^2 and zbar^2 are included because their quantizations carry the
    two-step band that K-^2 and K+^2 have.
    """
    out = []
    for family in ("bgcs_even", "bgcs_odd"):
        measure = RadialMeasure("elementary_" + family.split("_")[1], space.gamma)
        ops = {name: toeplitz(name, family, measure, space) for name in dict.fromkeys(p[0] for p in PAIRINGS)}
        for convention in conventions:
            targets = _targets(space, convention)
            for sym, tgt in PAIRINGS:
                a = sector_block(ops[sym], family)
                t = sector_block(OperatorMatrix(space, targets[tgt], tgt), family)
                out.append(Comparison(family, sym, tgt, convention, float(np.max(np.abs(a - t)))))
    return out


def expectation_value(sym, family, z, space, measure=None):
    """<z| A_sym |z> for a canonical state; compared to sym(z) by the caller."""
    if measure is None:
        measure = RadialMeasure("elementary_" + family.split("_")[1], space.gamma)
    state = make_state(bgcs_label(z, family.split("_")[1]), space)
    return expectation(state, toeplitz(sym, family, measure, space))
