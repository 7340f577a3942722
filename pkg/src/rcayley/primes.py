"""Prime generation, primality, residue symbols, and the six quadratic families.

The quadratic families f(t) = 2t^2 + (r+3)t + c with r in {1,3} and
c in {r-4, r-2, r} parametrize the exceptional primes; this module holds
everything number-theoretic about them (enumeration, Hardy-Littlewood
partial products, residue-class avoidance).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import GuardError, ValidationError

# Deterministic Miller-Rabin base set, valid for all n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_SIEVE_LIMIT = 10**9
_SEGMENT = 1 << 20


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin (valid far beyond any value used here)."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def sieve_primes(limit: int) -> np.ndarray:
    """All primes <= limit, via a segmented sieve of Eratosthenes."""
    if limit > _SIEVE_LIMIT:
        raise GuardError(f"sieve limit {limit} exceeds guard {_SIEVE_LIMIT}")
    if limit < 2:
        return np.array([], dtype=np.int64)
    root = math.isqrt(limit)
    base = np.ones(root + 1, dtype=bool)
    base[:2] = False
    for i in range(2, math.isqrt(root) + 1):
        if base[i]:
            base[i * i :: i] = False
    base_primes = np.flatnonzero(base)
    chunks = [base_primes]
    lo = root + 1
    while lo <= limit:
        hi = min(lo + _SEGMENT, limit + 1)
        seg = np.ones(hi - lo, dtype=bool)
        for p in base_primes:
            p = int(p)
            start = ((lo + p - 1) // p) * p
            seg[start - lo :: p] = False
        chunks.append(np.flatnonzero(seg) + lo)
        lo = hi
    return np.concatenate(chunks).astype(np.int64)


def legendre(n: int, p: int) -> int:
    """Legendre symbol (n/p) for an odd prime p, via Euler's criterion."""
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise ValidationError(f"{p} is not an odd prime")
    e = pow(n % p, (p - 1) // 2, p)
    return -1 if e == p - 1 else e


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd n >= 1."""
    if n < 1 or n % 2 == 0:
        raise ValidationError(f"Jacobi symbol needs odd positive n, got {n}")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


# Minimal k for which f_{r,c}(k) lands in the exceptional range.
K_MIN = {
    (1, -3): 5,
    (1, -1): 3,
    (1, 1): 3,
    (3, -1): 7,
    (3, 1): 3,
    (3, 3): 3,
}


@dataclass(frozen=True)
class QuadraticFamily:
    """One of the six families f(t) = 2t^2 + (r+3)t + c of exceptional primes."""

    r: int
    c: int

    def __post_init__(self):
        if (self.r, self.c) not in K_MIN:
            raise ValidationError(f"no such family: r={self.r}, c={self.c}")

    def __call__(self, t: int) -> int:
        return 2 * t * t + (self.r + 3) * t + self.c

    @property
    def k_min(self) -> int:
        return K_MIN[(self.r, self.c)]

    @property
    def discriminant(self) -> int:
        return (self.r + 3) ** 2 - 8 * self.c

    @property
    def reduced_c(self) -> int:
        """c' with (D/p) = (c'/p): c' = 4-2c for r=1 and 9-2c for r=3."""
        if self.r == 1:
            return 4 - 2 * self.c
        return 9 - 2 * self.c


ALL_FAMILIES = tuple(QuadraticFamily(r, c) for (r, c) in sorted(K_MIN))


def enumerate_family(r: int, c: int, k_max: int) -> list[tuple[int, int, bool]]:
    """(k, f(k), is_prime) for k_min <= k <= k_max; composites flagged False."""
    fam = QuadraticFamily(r, c)
    return [(k, fam(k), is_prime(fam(k))) for k in range(fam.k_min, k_max + 1)]


def family_primes(r: int, c: int, k_max: int) -> list[int]:
    """The primes of the family, i.e. the J-list entries, for k <= k_max."""
    return [v for _, v, ok in enumerate_family(r, c, k_max) if ok]


@dataclass(frozen=True)
class HLEstimate:
    """Truncated Hardy-Littlewood product for one quadratic family."""

    family: QuadraticFamily
    reduced_c: int
    cutoff: int
    partial: float  # value of C(f)/2 truncated at `cutoff`


def _symbol_table(c: int) -> np.ndarray:
    """(c/n) as a function of n mod 4c, for odd n (Jacobi/Kronecker character)."""
    mod = 4 * c
    table = np.zeros(mod, dtype=np.int8)
    for rho in range(1, mod, 2):
        if math.gcd(rho, mod) == 1:
            table[rho] = jacobi(c, rho)
    return table


def hl_constant(family: QuadraticFamily, cutoff: int = 10**7) -> HLEstimate:
    """Partial product over odd primes p <= cutoff of (1 - (c'/p)/(p-1)).

    The full product is the Hardy-Littlewood constant C(f)/2; truncation
    converges slowly, so only two-figure agreement should be expected.
    """
    if cutoff < 10**3:
        raise ValidationError("hl_constant cutoff must be >= 1000")
    cp = family.reduced_c
    primes = sieve_primes(cutoff)
    primes = primes[primes >= 3]
    table = _symbol_table(cp)
    syms = table[primes % (4 * cp)].astype(np.float64)
    # p | c' contributes symbol 0, which the table already encodes.
    terms = 1.0 - syms / (primes - 1).astype(np.float64)
    partial = float(np.multiply.reduce(terms))
    return HLEstimate(family=family, reduced_c=cp, cutoff=cutoff, partial=partial)


def pi_f(
    family: QuadraticFamily, x: int, hl_cutoff: int = 10**6
) -> tuple[int, float]:
    """(#{k_min <= k <= x : f(k) prime}, (C/2) * x / log x)."""
    if x > 10**7:
        raise GuardError(f"pi_f bound {x} exceeds guard 1e7")
    count = sum(
        1 for k in range(family.k_min, x + 1) if is_prime(family(k))
    )
    if x < 2:
        return count, 0.0
    prediction = hl_constant(family, hl_cutoff).partial * x / math.log(x)
    return count, prediction


@dataclass(frozen=True)
class ResidueAvoidance:
    """Residues mod `modulus` hit by the six families, plus a coprime witness."""

    modulus: int
    hit: frozenset[int]
    witness: int | None  # b coprime to modulus with b not hit, or None


def residue_avoidance(a: int) -> ResidueAvoidance:
    """Residues covered by any f_{r,c}(k) mod a, and the smallest avoiding b."""
    if a < 2:
        raise ValidationError("modulus must be >= 2")
    hit: set[int] = set()
    for fam in ALL_FAMILIES:
        for k in range(a):
            hit.add(fam(k) % a)
    witness = None
    for b in range(a):
        if b not in hit and math.gcd(a, b) == 1:
            witness = b
            break
    return ResidueAvoidance(modulus=a, hit=frozenset(hit), witness=witness)
