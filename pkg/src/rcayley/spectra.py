"""Closed-form Cayley graph spectra and the Ramanujan verdict.

Three formula paths are provided: the generic character sum for normal
subsets, the specialized Frobenius formulas, and the z/w eigenvalues for
arbitrary dihedral subsets.  All are cross-checked against the Jacobi
oracle in the test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .cayley import CayleySubset, NormalSubsetSpec, ab_values, make_normal_subset
from .errors import ValidationError
from .groups import DIHEDRAL, GroupTable, character_table

EPS_GUARD = 1e-9  # borderline detection width for mu vs the Ramanujan bound
_IMAG_TOL = 1e-10
_VALENCY_TOL = 1e-7  # |lambda| this close to k counts as a trivial eigenvalue

RAMANUJAN = "ramanujan"
NOT_RAMANUJAN = "not_ramanujan"
BORDERLINE = "borderline"


@dataclass(frozen=True)
class Spectrum:
    """Real eigenvalue multiset, sorted descending."""

    entries: tuple[tuple[float, int], ...]  # (eigenvalue, multiplicity)
    valency: int
    source: str  # "character-formula", "zw-formula" or "oracle"

    @property
    def order(self) -> int:
        return sum(m for _, m in self.entries)

    def values_sorted(self) -> np.ndarray:
        """Eigenvalues expanded by multiplicity, descending."""
        out = np.concatenate([np.full(m, v) for v, m in self.entries])
        return np.sort(out)[::-1]

    def mu(self) -> float:
        """Largest |lambda| among eigenvalues with |lambda| != valency."""
        best = 0.0
        for v, _ in self.entries:
            if abs(abs(v) - self.valency) <= _VALENCY_TOL:
                continue
            best = max(best, abs(v))
        return best


@dataclass(frozen=True)
class RamanujanVerdict:
    mu: float
    bound: float  # 2 sqrt(k - 1)
    status: str
    margin: float  # mu - bound

    @property
    def is_ramanujan(self) -> bool:
        return self.status != NOT_RAMANUJAN


def verdict(spec: Spectrum) -> RamanujanVerdict:
    if not spec.entries:
        raise ValidationError("empty spectrum")
    mu = spec.mu()
    bound = 2.0 * math.sqrt(spec.valency - 1)
    margin = mu - bound
    if abs(margin) < EPS_GUARD:
        status = BORDERLINE
    elif mu <= bound:
        status = RAMANUJAN
    else:
        status = NOT_RAMANUJAN
    return RamanujanVerdict(mu=mu, bound=bound, status=status, margin=margin)


def _entries_sorted(pairs) -> tuple[tuple[float, int], ...]:
    return tuple(sorted(pairs, key=lambda e: -e[0]))


def _real_or_raise(value: complex, what: str) -> float:
    if abs(value.imag) > _IMAG_TOL:
        raise ValidationError(
            f"{what} has imaginary residue {value.imag:.3e}; subset not symmetric?"
        )
    return value.real


def normal_spectrum(G: GroupTable, S: NormalSubsetSpec) -> Spectrum:
    """One eigenvalue per irreducible character: (1/chi(1)) sum_{s in S} chi(s),
    with multiplicity chi(1)^2."""
    subset = make_normal_subset(G, S)
    table = character_table(G)
    chosen = np.array(subset.members(), dtype=np.int64)
    entries = []
    for i, row in enumerate(table.rows):
        lam = table.values_on_elements(i)[chosen].sum() / row.degree
        entries.append((_real_or_raise(lam, f"lambda_{i}"), row.degree**2))
    return Spectrum(
        entries=_entries_sorted(entries),
        valency=subset.size,
        source="character-formula",
    )


def frobenius_spectrum(G: GroupTable, S: NormalSubsetSpec) -> Spectrum:
    """Same multiset as normal_spectrum, via the specialized Frobenius
    formulas for the trivial, lifted and induced rows."""
    subset = make_normal_subset(G, S)  # validates symmetry / Y nonempty
    p, q = G.p, G.q
    twist = G.twist_powers()
    # kernel class of x^v has |Conj_N| = 1 per twist element, i.e. q members
    lookup_sizes = {v: 1 for v in S.x_reps}
    sum_x = sum(lookup_sizes.values())  # = |X|
    sum_y = len(S.y_reps)
    entries = [(float(q * sum_x + p * sum_y), 1)]
    assert entries[0][0] == subset.size
    for alpha in range(1, q):
        lam = q * sum_x + p * sum(
            np.exp(2j * np.pi * alpha * b / q) for b in S.y_reps
        )
        entries.append((_real_or_raise(lam, f"lambda_chi_{alpha}"), 1))
    kernel_reps = [
        cl.representative
        for cl in _kernel_classes(G)
    ]
    for beta in kernel_reps:
        lam = sum(
            np.exp(2j * np.pi * ((beta * v * s) % p) / p)
            for v in S.x_reps
            for s in twist
        )
        entries.append((_real_or_raise(complex(lam), f"lambda_phi_{beta}"), q * q))
    spec = Spectrum(
        entries=_entries_sorted(entries),
        valency=subset.size,
        source="character-formula",
    )
    assert spec.order == G.order
    return spec


def _kernel_classes(G: GroupTable):
    from .groups import conjugacy_classes

    return [
        cl
        for cl in conjugacy_classes(G)
        if cl.representative != 0 and G.in_kernel(cl.representative)
    ]


@dataclass(frozen=True, eq=False)
class DihedralSpectrumData:
    """Fourier data of a dihedral subset.

    For j >= 1, z_j and w_j are the rotation/reflection exponential sums and
    the eigenvalue pair at j is z_j +- |w_j|.  The j = 0 slots follow the
    convention z_0 = |S_1| + |S_2| (the valency) and w_0 = |S_1| - |S_2|
    (the remaining degree-one eigenvalue).
    """

    z: np.ndarray  # real, length p
    w: np.ndarray  # complex, length p

    def mu_abs(self) -> np.ndarray:
        """|mu_j| = |z_j| + |w_j| for j >= 1 (index 0 is |w_0|)."""
        out = np.abs(self.z) + np.abs(self.w)
        out[0] = abs(self.w[0])
        return out


def dihedral_zw(G: GroupTable, S: CayleySubset) -> DihedralSpectrumData:
    if G.family != DIHEDRAL:
        raise ValidationError("dihedral_zw needs a dihedral group")
    p = G.p
    s1 = np.zeros(p)
    s2 = np.zeros(p)
    rot = S.mask & ((1 << p) - 1)
    refl = S.mask >> p
    for a in range(p):
        if rot >> a & 1:
            s1[a] = 1.0
        if refl >> a & 1:
            s2[a] = 1.0
    # z_j = sum_{x^a in S_1} e^{2 pi i j a / p}: conjugate of the forward DFT
    zf = np.fft.fft(s1).conj()
    wf = np.fft.fft(s2).conj()
    if np.abs(zf.imag).max() > _IMAG_TOL:
        raise ValidationError("S_1 is not symmetric: z_j not real")
    z = zf.real.copy()
    w = wf.copy()
    n1, n2 = int(s1.sum()), int(s2.sum())
    z[0] = n1 + n2
    w[0] = n1 - n2
    return DihedralSpectrumData(z=z, w=w)


def dihedral_spectrum(G: GroupTable, S: CayleySubset) -> Spectrum:
    """All 2p eigenvalues from the z/w data."""
    data = dihedral_zw(G, S)
    entries = [(float(data.z[0]), 1), (float(data.w[0].real), 1)]
    absw = np.abs(data.w[1:])
    for zj, awj in zip(data.z[1:], absw):
        entries.append((float(zj + awj), 1))
        entries.append((float(zj - awj), 1))
    return Spectrum(
        entries=_entries_sorted(entries), valency=S.size, source="zw-formula"
    )


def spectrum_record(
    G: GroupTable, subset_spec: str, spec: Spectrum, v: RamanujanVerdict
) -> dict:
    """JSON-serializable record for the CLI."""
    return {
        "schema": 1,
        "group": G.spec_string(),
        "subset": subset_spec,
        "valency": spec.valency,
        "eigenvalues": [[val, mult] for val, mult in spec.entries],
        "mu": v.mu,
        "bound": v.bound,
        "status": v.status,
    }
