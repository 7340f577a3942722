"""Covalency lattice, the trivial bound l0 and the exact bound l_hat.

All comparisons against 2(sqrt|G| - 1) and the related square roots are
done with exact integer arithmetic: l <= 2(sqrt(n) - 1) iff (l+2)^2 <= 4n.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .cayley import NormalSubsetSpec, class_orbits, enumerate_normal_subsets
from .errors import GuardError, ValidationError
from .groups import DIHEDRAL, GroupTable
from .spectra import frobenius_spectrum, verdict

# Per-covalency enumeration budget in verify_l_hat; above it, the exact
# sorted-tail-sum maximization takes over (dihedral only).
ENUM_PER_COVALENCY = 2_000_000


@dataclass(frozen=True)
class CovalencyLattice:
    group: GroupTable
    a_values: tuple[int, ...]  # achievable a, ascending, a_1 = 0, a_m = r
    b_values: tuple[int, ...]  # achievable b, ascending, b_1 = 0

    def l(self, a: int, b: int) -> int:
        return 1 + a * self.group.q + b * self.group.p

    @property
    def values(self) -> tuple[int, ...]:
        return tuple(
            sorted(self.l(a, b) for a in self.a_values for b in self.b_values)
        )


def _subset_sums(weights: list[int], nonempty: bool = False) -> set[int]:
    sums = {0}
    for w in weights:
        sums |= {s + w for s in sums}
    if nonempty:
        sums.discard(0)
        if not weights:
            return set()
        sums |= {w for w in weights}
    return sums


def covalency_lattice(G: GroupTable) -> CovalencyLattice:
    """Achievable (a, b) pairs from symmetric unions of conjugacy classes."""
    x_orbits, y_orbits = class_orbits(G)
    r, q = G.ratio, G.q
    x_weights = [sum(len(cl.members) // q for cl in orb) for orb in x_orbits]
    y_weights = [sum(len(cl.members) // G.p for cl in orb) for orb in y_orbits]
    a_values = tuple(sorted(r - s for s in _subset_sums(x_weights)))
    b_values = tuple(
        sorted((q - 1) - s for s in _subset_sums(y_weights, nonempty=True))
    )
    lattice = CovalencyLattice(group=G, a_values=a_values, b_values=b_values)
    assert a_values[0] == 0 and a_values[-1] == r
    assert b_values[0] == 0 and b_values[-1] < q - 1
    return lattice


def compute_l0(G: GroupTable) -> int:
    """max{l in L | l <= 2(sqrt|G| - 1)}, by exact integer comparison."""
    four_n = 4 * G.order
    return max(l for l in covalency_lattice(G).values if (l + 2) ** 2 <= four_n)


@dataclass(frozen=True)
class BoundsReport:
    group_spec: str
    l0: int
    l_hat: int
    i0: int | None  # index into a_values with l0 = l(a_i0, 0)
    l1_next: int | None  # min{l in L | l > l0}
    witness: NormalSubsetSpec | None  # non-Ramanujan subset at the first failing covalency
    witness_covalency: int | None
    method: str  # "theorem" or "exhaustive"

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "group": self.group_spec,
            "l0": self.l0,
            "l_hat": self.l_hat,
            "i0": self.i0,
            "l1_next": self.l1_next,
            "witness": None
            if self.witness is None
            else {"X": list(self.witness.x_reps), "Y": list(self.witness.y_reps)},
            "witness_covalency": self.witness_covalency,
            "method": self.method,
        }


def _x_reps_with_a(G: GroupTable, target_a: int) -> tuple[int, ...]:
    """Symmetric X with a_X = target_a, built by greedy orbit selection."""
    x_orbits, _ = class_orbits(G)
    weights = [sum(len(cl.members) // G.q for cl in orb) for orb in x_orbits]
    need = G.ratio - target_a  # weight to include
    reps: list[int] = []
    for orb, w in zip(x_orbits, weights):
        if w <= need:
            need -= w
            reps.extend(cl.representative for cl in orb)
        if need == 0:
            break
    if need != 0:
        raise ValidationError(f"a = {target_a} is not achievable")
    return tuple(sorted(reps))


def _all_y_reps(G: GroupTable) -> tuple[int, ...]:
    return tuple(range(1, G.q))


def compute_l_hat(G: GroupTable) -> BoundsReport:
    """Fast path for r >= 4: l_hat = l0 with an explicit non-Ramanujan
    witness one lattice step above.  For r < 4 falls back to the sweep."""
    if G.ratio < 4:
        return verify_l_hat(G)
    lattice = covalency_lattice(G)
    q, p = G.q, G.p
    # a_i0 = max{a in A | a|H| + 3 <= 2 sqrt(|N||H|)}, integer-exact
    i0 = max(
        i for i, a in enumerate(lattice.a_values) if (a * q + 3) ** 2 <= 4 * p * q
    )
    l_hat = lattice.l(lattice.a_values[i0], 0)
    l0 = compute_l0(G)
    assert l_hat == l0, "theorem index disagrees with the direct l0 computation"
    values = lattice.values
    l1_next = min(l for l in values if l > l0)
    witness = NormalSubsetSpec.make(
        _x_reps_with_a(G, lattice.a_values[i0 + 1]), _all_y_reps(G)
    )
    return BoundsReport(
        group_spec=G.spec_string(),
        l0=l0,
        l_hat=l_hat,
        i0=i0,
        l1_next=l1_next,
        witness=witness,
        witness_covalency=l1_next,
        method="theorem",
    )


def _rb_exceeded(mu: float, l: int, order: int) -> bool:
    # mu > 2 sqrt(order - l - 1), guarded against roundoff at equality
    return mu > 2.0 * np.sqrt(order - l - 1) + 1e-9


def _dihedral_max_mu(G: GroupTable, a: int):
    """Exact maximum of mu over all normal subsets at covalency l = 1 + 2a.

    Enumerates the removed class sets when their count fits the budget;
    otherwise uses the exact rearrangement bound: for each induced character
    the extremal removed set is the a smallest (or largest) summands, so
    sorted tail sums give the true maximum.  Returns (max_mu, witness_x_reps).
    """
    p, r = G.p, G.ratio
    l = 1 + 2 * a
    reps = np.arange(1, r + 1)
    # c[v-1, j-1] = 2 cos(2 pi j v / p), the induced-character summand
    j = np.arange(1, r + 1)
    c = 2.0 * np.cos(2.0 * np.pi * np.outer(reps, j) / p)
    full = c.sum(axis=0)  # = -1 for every j
    best = -np.inf
    best_removed: tuple[int, ...] = ()
    n_comb = 1
    for i in range(a):
        n_comb = n_comb * (r - i) // (i + 1)
    if n_comb <= ENUM_PER_COVALENCY:
        combos = np.fromiter(
            itertools.chain.from_iterable(itertools.combinations(range(r), a)),
            dtype=np.int64,
            count=n_comb * a,
        ).reshape(n_comb, a)
        chunk = max(1, 4_000_000 // max(1, a * r))
        for lo in range(0, n_comb, chunk):
            block = combos[lo : lo + chunk]
            lam = full[None, :] - c[block].sum(axis=1)
            absmax = np.abs(lam).max(axis=1)
            k = int(absmax.argmax())
            if absmax[k] > best:
                best = float(absmax[k])
                best_removed = tuple(int(x) + 1 for x in block[k])
    else:
        order = np.argsort(c, axis=0)
        sorted_c = np.take_along_axis(c, order, axis=0)
        bot = sorted_c[:a].sum(axis=0)  # a smallest summands per character
        top = sorted_c[-a:].sum(axis=0) if a else np.zeros(r)
        lam_hi = full - bot  # remove the smallest -> largest eigenvalue
        lam_lo = full - top
        cand = np.maximum(lam_hi, -lam_lo)
        k = int(cand.argmax())
        best = float(cand[k])
        if lam_hi[k] >= -lam_lo[k]:
            best_removed = tuple(int(v) + 1 for v in order[:a, k])
        else:
            best_removed = tuple(int(v) + 1 for v in order[-a:, k]) if a else ()
    # the lifted (sign) eigenvalue is -l for every X; excluded when l = p = k
    if l != p:
        best = max(best, float(l))
    witness_x = tuple(sorted(set(range(1, r + 1)) - set(best_removed)))
    return best, witness_x


def verify_l_hat(G: GroupTable) -> BoundsReport:
    """Exhaustive sweep: ascend the covalency lattice, testing every normal
    subset at each level, until a non-Ramanujan graph appears."""
    lattice = covalency_lattice(G)
    values = lattice.values
    l0 = compute_l0(G)
    above = [l for l in values if l > l0]
    l1_next = min(above) if above else None
    fail_l = None
    witness = None
    if G.family == DIHEDRAL:
        for a, l in enumerate(1 + 2 * np.array(lattice.a_values)):
            l = int(l)
            max_mu, witness_x = _dihedral_max_mu(G, a)
            if _rb_exceeded(max_mu, l, G.order):
                if l <= l0:
                    raise AssertionError(
                        f"trivial-estimate violation at covalency {l} <= l0 = {l0}"
                    )
                fail_l = l
                witness = NormalSubsetSpec.make(witness_x, _all_y_reps(G))
                break
    else:
        by_l: dict[int, list[NormalSubsetSpec]] = {}
        for spec in enumerate_normal_subsets(G):
            a, b = _spec_ab(G, spec)
            by_l.setdefault(lattice.l(a, b), []).append(spec)
        for l in values:
            for spec in by_l[l]:
                v = verdict(frobenius_spectrum(G, spec))
                if not v.is_ramanujan:
                    if l <= l0:
                        raise AssertionError(
                            f"trivial-estimate violation at covalency {l} <= l0 = {l0}"
                        )
                    fail_l = l
                    witness = spec
                    break
            if fail_l is not None:
                break
    if fail_l is None:
        l_hat = max(values)
    else:
        l_hat = max(l for l in values if l < fail_l)
    i0 = None
    if (l0 - 1) % G.q == 0 and (l0 - 1) // G.q in lattice.a_values:
        i0 = lattice.a_values.index((l0 - 1) // G.q)
    return BoundsReport(
        group_spec=G.spec_string(),
        l0=l0,
        l_hat=l_hat,
        i0=i0,
        l1_next=l1_next,
        witness=witness,
        witness_covalency=fail_l,
        method="exhaustive",
    )


def _spec_ab(G: GroupTable, spec: NormalSubsetSpec) -> tuple[int, int]:
    from .cayley import ab_values

    return ab_values(G, spec)
