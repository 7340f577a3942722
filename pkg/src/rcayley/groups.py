"""Concrete dihedral groups D_2p and non-abelian pq-groups F_{p,q}.

Both families are semidirect products Z_p x| Z_q (dihedral: q = 2, twist
u = p - 1).  Elements x^a y^b are encoded as the index a + p*b, so for the
dihedral group 0..p-1 are the rotations and p..2p-1 the reflections.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ValidationError
from .primes import is_prime

DIHEDRAL = "dihedral"
FROBENIUS_PQ = "fpq"


@dataclass(frozen=True, eq=False)
class GroupTable:
    """A finite group given by full multiplication and inverse tables."""

    family: str  # DIHEDRAL or FROBENIUS_PQ
    p: int  # |N|, the kernel Z_p
    q: int  # |H|, the complement Z_q
    u: int  # twist: y^-1 x y = x^u (p - 1 for dihedral)
    mul: np.ndarray  # order x order element indices
    inv: np.ndarray  # inverse per element

    identity = 0

    @property
    def order(self) -> int:
        return self.p * self.q

    @property
    def kernel_size(self) -> int:
        return self.p

    @property
    def complement_size(self) -> int:
        return self.q

    @property
    def ratio(self) -> int:
        """r = (|N| - 1)/|H|, a positive integer for Frobenius groups."""
        return (self.p - 1) // self.q

    def element(self, a: int, b: int) -> int:
        """Index of x^a y^b."""
        return a % self.p + self.p * (b % self.q)

    def exponents(self, g: int) -> tuple[int, int]:
        """(a, b) with g = x^a y^b."""
        return g % self.p, g // self.p

    def in_kernel(self, g: int) -> bool:
        return g < self.p

    def twist_powers(self) -> list[int]:
        """The subgroup <u> of Z_p^x, as a sorted list."""
        return sorted(pow(self.u, b, self.p) for b in range(self.q))

    def spec_string(self) -> str:
        if self.family == DIHEDRAL:
            return f"d2p:{self.p}"
        return f"fpq:{self.p},{self.q}"


def _build_table(family: str, p: int, q: int, u: int) -> GroupTable:
    order = p * q
    idx = np.arange(order)
    a = idx % p
    b = idx // p
    # y^b x y^-b = x^(u^-b); u^-b = u^(q-b) since u^q = 1 mod p.
    uinv_b = np.array([pow(u, (q - bb) % q, p) for bb in range(q)], dtype=np.int64)
    upow_b = np.array([pow(u, bb, p) for bb in range(q)], dtype=np.int64)
    mul = (a[:, None] + a[None, :] * uinv_b[b][:, None]) % p + p * (
        (b[:, None] + b[None, :]) % q
    )
    inv = (-a * upow_b[b]) % p + p * ((q - b) % q)
    mul.setflags(write=False)
    inv.setflags(write=False)
    return GroupTable(family=family, p=p, q=q, u=u, mul=mul, inv=inv)


def build_dihedral(p: int) -> GroupTable:
    """D_2p = <x, y | x^p = y^2 = 1, y^-1 x y = x^-1> for an odd prime p."""
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise ValidationError(f"dihedral parameter must be an odd prime >= 3, got {p}")
    return _build_table(DIHEDRAL, p, 2, p - 1)


def build_fpq(p: int, q: int) -> GroupTable:
    """F_{p,q} = <x, y | x^p = y^q = 1, y^-1 x y = x^u> with q | p - 1.

    u is chosen as the smallest integer in 2..p-1 of multiplicative order
    exactly q mod p; the isomorphism class does not depend on the choice.
    """
    if not (is_prime(p) and p % 2 == 1 and p >= 3):
        raise ValidationError(f"p must be an odd prime, got {p}")
    if not (is_prime(q) and q % 2 == 1 and q >= 3):
        raise ValidationError(f"q must be an odd prime, got {q}")
    if (p - 1) % q != 0:
        raise ValidationError(f"q = {q} does not divide p - 1 = {p - 1}")
    u = None
    for cand in range(2, p):
        if pow(cand, q, p) == 1 and cand != 1:
            # order divides the prime q and is not 1, hence exactly q
            u = cand
            break
    assert u is not None
    return _build_table(FROBENIUS_PQ, p, q, u)


def build_group(spec: str) -> GroupTable:
    """Parse a CLI group spec: "d2p:<p>" or "fpq:<p>,<q>"."""
    try:
        kind, _, args = spec.partition(":")
        if kind == "d2p":
            return build_dihedral(int(args))
        if kind == "fpq":
            ps, qs = args.split(",")
            return build_fpq(int(ps), int(qs))
    except (ValueError, TypeError) as exc:
        raise ValidationError(f"bad group spec {spec!r}: {exc}") from exc
    raise ValidationError(f"unknown group family in spec {spec!r}")


@dataclass(frozen=True)
class ConjugacyClass:
    representative: int  # smallest member
    members: tuple[int, ...]
    is_symmetric: bool  # closed under inversion


def conjugacy_classes(G: GroupTable) -> list[ConjugacyClass]:
    """Brute-force conjugation orbits; identity class first, then by representative."""
    n = G.order
    mul, inv = G.mul, G.inv
    seen = np.zeros(n, dtype=bool)
    classes = []
    for g in range(n):
        if seen[g]:
            continue
        members = np.unique(mul[inv[np.arange(n)], mul[g, np.arange(n)]])
        seen[members] = True
        member_set = set(int(m) for m in members)
        symmetric = all(int(inv[m]) in member_set for m in members)
        classes.append(
            ConjugacyClass(
                representative=int(members.min()),
                members=tuple(int(m) for m in members),
                is_symmetric=symmetric,
            )
        )
    classes.sort(key=lambda c: c.representative)
    return classes


@dataclass(frozen=True, eq=False)
class Character:
    degree: int
    tag: str  # "trivial", "lifted" (from H) or "induced" (from N)
    label: int  # alpha for lifted rows, the coset representative for induced rows
    values: np.ndarray  # complex, one entry per conjugacy class


@dataclass(frozen=True, eq=False)
class CharacterTable:
    group: GroupTable
    classes: tuple[ConjugacyClass, ...]
    rows: tuple[Character, ...]
    class_of: np.ndarray  # element index -> class index

    def values_on_elements(self, row: int) -> np.ndarray:
        """The character as a function on elements (constant on classes)."""
        return self.rows[row].values[self.class_of]


def character_table(G: GroupTable) -> CharacterTable:
    """Full complex character table for the two supported families.

    Rows: trivial; q-1 degree-1 characters lifted from H ~ Z_q; and one
    degree-q character induced from each inversion-coset of non-trivial
    characters of N ~ Z_p.  For q = 2 the induced rows are the familiar
    two-dimensional dihedral characters 2cos(2 pi v a / p).
    """
    if G.family not in (DIHEDRAL, FROBENIUS_PQ):
        raise ValidationError(f"unsupported family {G.family!r}")
    p, q = G.p, G.q
    classes = tuple(conjugacy_classes(G))
    n = G.order
    class_of = np.empty(n, dtype=np.int64)
    for ci, cl in enumerate(classes):
        class_of[list(cl.members)] = ci

    # class metadata: identity / kernel rep v / complement exponent b
    kinds = []
    for cl in classes:
        rep = cl.representative
        if rep == 0:
            kinds.append(("id", 0))
        elif G.in_kernel(rep):
            kinds.append(("x", rep))
        else:
            kinds.append(("y", rep // p))

    twist = G.twist_powers()
    omega_p = np.exp(2j * np.pi / p)
    omega_q = np.exp(2j * np.pi / q)

    rows = [
        Character(
            degree=1,
            tag="trivial",
            label=0,
            values=np.ones(len(classes), dtype=complex),
        )
    ]
    for alpha in range(1, q):
        vals = np.empty(len(classes), dtype=complex)
        for ci, (kind, param) in enumerate(kinds):
            vals[ci] = omega_q ** (alpha * param) if kind == "y" else 1.0
        rows.append(Character(degree=1, tag="lifted", label=alpha, values=vals))
    kernel_reps = [param for kind, param in kinds if kind == "x"]
    for beta in kernel_reps:
        vals = np.empty(len(classes), dtype=complex)
        for ci, (kind, param) in enumerate(kinds):
            if kind == "id":
                vals[ci] = q
            elif kind == "x":
                vals[ci] = sum(omega_p ** ((beta * param * s) % p) for s in twist)
            else:
                vals[ci] = 0.0
        rows.append(Character(degree=q, tag="induced", label=beta, values=vals))

    table = CharacterTable(
        group=G, classes=classes, rows=tuple(rows), class_of=class_of
    )
    assert sum(r.degree**2 for r in table.rows) == n
    return table
