"""Cayley subsets: construction, validation, enumeration, adjacency matrices.

Subsets are immutable bitmask values over element indices 0..|G|-1 (the
identity bit is always 0).  Serialized form is the little-endian hex string
of that mask, so CLI round-trips are bit-exact.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass

import numpy as np

from .errors import GuardError, ValidationError
from .groups import DIHEDRAL, ConjugacyClass, GroupTable, conjugacy_classes

ENUM_GUARD = 1 << 24


@dataclass(frozen=True)
class NormalSubsetSpec:
    """A union of conjugacy classes: X kernel reps (exponents v) and
    Y complement reps (exponents b, classes of y^b)."""

    x_reps: tuple[int, ...]
    y_reps: tuple[int, ...]

    @staticmethod
    def make(x_reps, y_reps) -> "NormalSubsetSpec":
        return NormalSubsetSpec(tuple(sorted(x_reps)), tuple(sorted(y_reps)))


@dataclass(frozen=True, eq=False)
class CayleySubset:
    group: GroupTable
    mask: int
    l1: int | None = None  # dihedral: |D_1 \ S_1|, always odd
    l2: int | None = None  # dihedral: |D_2 \ S_2|

    @property
    def size(self) -> int:
        return self.mask.bit_count()

    @property
    def covalency(self) -> int:
        return self.group.order - self.size

    def members(self) -> list[int]:
        m = self.mask
        out = []
        while m:
            low = m & -m
            out.append(low.bit_length() - 1)
            m ^= low
        return out

    def contains(self, g: int) -> bool:
        return bool(self.mask >> g & 1)

    def mask_hex(self) -> str:
        nbytes = (self.group.order + 7) // 8
        return self.mask.to_bytes(nbytes, "little").hex()


def subset_from_hex(G: GroupTable, hexstr: str) -> CayleySubset:
    """Inverse of CayleySubset.mask_hex; validates symmetry and generation."""
    try:
        mask = int.from_bytes(bytes.fromhex(hexstr), "little")
    except ValueError as exc:
        raise ValidationError(f"bad mask hex {hexstr!r}: {exc}") from exc
    if mask >> G.order:
        raise ValidationError("mask has bits beyond the group order")
    return _checked_subset(G, mask)


def _kernel_class_lookup(G: GroupTable) -> dict[int, ConjugacyClass]:
    """Kernel classes keyed by every exponent they contain."""
    lookup = {}
    for cl in conjugacy_classes(G):
        if cl.representative != 0 and G.in_kernel(cl.representative):
            for m in cl.members:
                lookup[m] = cl
    return lookup


def class_orbits(G: GroupTable):
    """Inversion orbits of non-identity classes, split into kernel ones
    (the X choices) and off-kernel ones (the Y choices).

    Each orbit is a tuple of ConjugacyClass; a symmetric class is a
    singleton orbit, an asymmetric class pairs with its inverse class.
    """
    classes = conjugacy_classes(G)
    by_rep = {cl.representative: cl for cl in classes}
    inv = G.inv
    x_orbits, y_orbits = [], []
    done = set()
    for cl in classes:
        if cl.representative == 0 or cl.representative in done:
            continue
        if cl.is_symmetric:
            orbit = (cl,)
        else:
            partner_rep = min(int(inv[m]) for m in cl.members)
            partner = by_rep[partner_rep]
            orbit = (cl, partner)
            done.add(partner_rep)
        done.add(cl.representative)
        if G.in_kernel(cl.representative):
            x_orbits.append(orbit)
        else:
            y_orbits.append(orbit)
    return x_orbits, y_orbits


def ab_values(G: GroupTable, spec: NormalSubsetSpec) -> tuple[int, int]:
    """(a_X, b_Y): the removed-weight coordinates of the covalency lattice."""
    lookup = _kernel_class_lookup(G)
    a = G.ratio - sum(len(lookup[v].members) // G.q for v in spec.x_reps)
    b = (G.q - 1) - len(spec.y_reps)
    return a, b


def _check_spec_symmetric(G: GroupTable, spec: NormalSubsetSpec) -> None:
    lookup = _kernel_class_lookup(G)
    for v in spec.x_reps:
        if v not in lookup:
            raise ValidationError(f"{v} is not a kernel class representative")
        inv_rep = lookup[int(G.inv[v])].representative
        if inv_rep not in spec.x_reps:
            raise ValidationError(
                f"X is not symmetric: class of x^{v} chosen without its inverse class"
            )
    for b in spec.y_reps:
        if not 1 <= b < G.q:
            raise ValidationError(f"bad complement exponent {b}")
        if (G.q - b) % G.q not in spec.y_reps:
            raise ValidationError(
                f"Y is not symmetric: class of y^{b} chosen without y^{G.q - b}"
            )


def make_normal_subset(G: GroupTable, spec: NormalSubsetSpec) -> CayleySubset:
    """Union of the chosen conjugacy classes, with covalency 1 + a|H| + b|N|."""
    _check_spec_symmetric(G, spec)
    if not spec.y_reps:
        raise ValidationError(
            "Y must be nonempty: a subset of the kernel never generates the group"
        )
    lookup = _kernel_class_lookup(G)
    mask = 0
    for v in set(spec.x_reps):
        for m in lookup[v].members:
            mask |= 1 << m
    for b in set(spec.y_reps):
        for a_exp in range(G.p):
            mask |= 1 << G.element(a_exp, b)
    subset = _finish(G, mask)
    a, b = ab_values(G, spec)
    assert subset.covalency == 1 + a * G.q + b * G.p
    return subset


def _finish(G: GroupTable, mask: int) -> CayleySubset:
    l1 = l2 = None
    if G.family == DIHEDRAL:
        p = G.p
        rot = mask & ((1 << p) - 1)
        refl = mask >> p
        l1 = p - rot.bit_count()
        l2 = p - refl.bit_count()
    return CayleySubset(group=G, mask=mask, l1=l1, l2=l2)


def _checked_subset(G: GroupTable, mask: int) -> CayleySubset:
    if mask & 1:
        raise ValidationError("identity must not be in a Cayley subset")
    members = []
    m = mask
    while m:
        low = m & -m
        members.append(low.bit_length() - 1)
        m ^= low
    for g in members:
        if not mask >> int(G.inv[g]) & 1:
            raise ValidationError(f"subset is not symmetric: {g} in S but not its inverse")
    subset = _finish(G, mask)
    if not is_generating(subset):
        raise ValidationError("subset does not generate the group")
    return subset


def make_dihedral_subset(G: GroupTable, s1_mask: int, s2_mask: int) -> CayleySubset:
    """Dihedral subset from exponent masks: bit a of s1_mask is x^a, bit a of
    s2_mask is x^a y."""
    if G.family != DIHEDRAL:
        raise ValidationError("make_dihedral_subset needs a dihedral group")
    p = G.p
    if (s1_mask | s2_mask) >> p:
        raise ValidationError("exponent mask has bits >= p")
    if s1_mask & 1:
        raise ValidationError("identity must not be in S_1")
    for a in range(1, p):
        if (s1_mask >> a & 1) != (s1_mask >> (p - a) & 1):
            raise ValidationError("S_1 is not symmetric under a -> -a mod p")
    mask = s1_mask | (s2_mask << p)
    subset = _finish(G, mask)
    if not is_generating(subset):
        raise ValidationError("subset does not generate the group")
    return subset


def make_interval_subset(G: GroupTable, l1: int, l2: int) -> CayleySubset:
    """The extremal construction: remove the centered rotation block
    {1, x^(+-1), ..., x^(+-(l1-1)/2)} and the reflection block
    {y, xy, ..., x^(l2-1) y}."""
    if G.family != DIHEDRAL:
        raise ValidationError("interval subsets are dihedral-only")
    p = G.p
    if l1 % 2 == 0 or not 1 <= l1 <= p:
        raise ValidationError(f"l1 must be odd in 1..p, got {l1}")
    if not 0 <= l2 <= p:
        raise ValidationError(f"l2 must be in 0..p, got {l2}")
    if (l1, l2) == (p, p):
        raise ValidationError("empty subset")
    s1 = (1 << p) - 1
    for h in range(-(l1 - 1) // 2, (l1 - 1) // 2 + 1):
        s1 &= ~(1 << (h % p))
    s2 = (1 << p) - 1
    for a in range(l2):
        s2 &= ~(1 << a)
    return make_dihedral_subset(G, s1, s2)


def is_generating(S: CayleySubset) -> bool:
    """Connectivity of the Cayley graph; skipped (True) when |S| > |G|/2,
    where generation is automatic."""
    G = S.group
    if S.size == 0:
        return False
    if 2 * S.size > G.order:
        return True
    members = S.members()
    seen = 1  # identity reached
    frontier = deque([0])
    count = 1
    while frontier:
        g = frontier.popleft()
        for s in members:
            h = int(G.mul[g, s])
            if not seen >> h & 1:
                seen |= 1 << h
                count += 1
                frontier.append(h)
    return count == G.order


def enumerate_normal_subsets(G: GroupTable):
    """Every symmetric (X, Y) pair with Y nonempty, as NormalSubsetSpec."""
    x_orbits, y_orbits = class_orbits(G)
    total = (1 << len(x_orbits)) * (1 << len(y_orbits))
    if total > ENUM_GUARD:
        raise GuardError(f"{total} (X, Y) combinations exceed guard {ENUM_GUARD}")
    x_choices = []
    for picks in itertools.product((False, True), repeat=len(x_orbits)):
        reps = []
        for take, orbit in zip(picks, x_orbits):
            if take:
                reps.extend(cl.representative for cl in orbit)
        x_choices.append(tuple(sorted(reps)))
    y_choices = []
    for picks in itertools.product((False, True), repeat=len(y_orbits)):
        if not any(picks):
            continue
        reps = []
        for take, orbit in zip(picks, y_orbits):
            if take:
                reps.extend(cl.representative // G.p for cl in orbit)
        y_choices.append(tuple(sorted(reps)))
    for xr in x_choices:
        for yr in y_choices:
            yield NormalSubsetSpec(x_reps=xr, y_reps=yr)


def random_dihedral_subset(G: GroupTable, rng) -> CayleySubset:
    """Uniform random symmetric generating subset of a dihedral group."""
    if G.family != DIHEDRAL:
        raise ValidationError("random_dihedral_subset needs a dihedral group")
    p = G.p
    n_pairs = (p - 1) // 2
    while True:
        s1 = 0
        for b in range(n_pairs):
            if rng.random() < 0.5:
                v = b + 1
                s1 |= (1 << v) | (1 << (p - v))
        s2 = 0
        for a in range(p):
            if rng.random() < 0.5:
                s2 |= 1 << a
        n2 = s2.bit_count()
        if n2 >= 2 or (n2 == 1 and s1):
            return make_dihedral_subset(G, s1, s2)


def adjacency_matrix(S: CayleySubset) -> np.ndarray:
    """0/1 matrix with A[g, h] = 1 iff g^-1 h in S."""
    G = S.group
    n = G.order
    member = np.zeros(n, dtype=np.int8)
    for g in S.members():
        member[g] = 1
    prod = G.mul[G.inv]  # prod[g, h] = g^-1 h
    return member[prod]
