"""Exceptional/ordinary classification of odd primes for dihedral graphs.

Two independent routes must agree: membership in the six quadratic
families, and the direct comparison of the extremal eigenvalue at
covalency l_hat + 1 against the Ramanujan bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .cayley import CayleySubset, make_interval_subset
from .errors import RouteDisagreementError, ValidationError
from .groups import GroupTable, build_dihedral
from .primes import K_MIN, QuadraticFamily, is_prime

_WITNESS_P_CAP = 2000  # build explicit witness subsets only at desk scale
_BORDERLINE = 1e-9


def l_hat_dihedral(p: int) -> int:
    """2 floor(sqrt(2p) - 1/2) - 1, via integer square roots only."""
    return 2 * ((math.isqrt(8 * p) - 1) // 2) - 1


def floor_2_sqrt_2p(p: int) -> int:
    return math.isqrt(8 * p)


def extremal_split(l_hat: int) -> tuple[int, int]:
    """(l1, l2) of the maximizing interval subset at covalency l_hat + 1."""
    r = l_hat % 4
    if r == 1:
        l1 = l2 = (l_hat + 1) // 2
    else:
        l1 = (l_hat + 3) // 2
        l2 = (l_hat - 1) // 2
    if l1 % 2 != 1:
        raise AssertionError(f"extremal l1 = {l1} is not odd (l_hat = {l_hat})")
    return l1, l2


def interval_mu1(p: int, l1: int, l2: int) -> float:
    """|mu_1| of the interval subset: 2 sin(pi l / 2p)/sin(pi/p) * cos(pi|l1-l2|/2p)."""
    l = l1 + l2
    return (
        2.0
        * math.sin(math.pi * l / (2 * p))
        / math.sin(math.pi / p)
        * math.cos(math.pi * abs(l1 - l2) / (2 * p))
    )


def _interval_mu1_precise(p: int, l1: int, l2: int) -> float:
    import mpmath

    with mpmath.workdps(50):
        l = l1 + l2
        val = (
            2
            * mpmath.sin(mpmath.pi * l / (2 * p))
            / mpmath.sin(mpmath.pi / p)
            * mpmath.cos(mpmath.pi * abs(l1 - l2) / (2 * p))
        )
        return float(val)


def extremal_mu(
    p: int, l: int, G: GroupTable | None = None
) -> tuple[float, CayleySubset | None, bool]:
    """(mu1, witness, exact) at covalency l.

    exact is True when l = l_hat + 1, where the interval subset with the
    most balanced split is proven maximal; for other l the same
    construction is returned as a heuristic.
    """
    l_hat = l_hat_dihedral(p)
    if l == l_hat + 1:
        l1, l2 = extremal_split(l_hat)
        exact = True
    else:
        # most balanced split with l1 odd
        l1 = l // 2 if (l // 2) % 2 == 1 else l // 2 + 1
        if l1 > p:
            l1 = p if p % 2 == 1 else p - 1
        l2 = l - l1
        exact = False
    if not (1 <= l1 <= p and 0 <= l2 <= p):
        raise ValidationError(f"covalency {l} not realizable for p = {p}")
    mu1 = interval_mu1(p, l1, l2)
    witness = None
    if p <= _WITNESS_P_CAP:
        if G is None:
            G = build_dihedral(p)
        witness = make_interval_subset(G, l1, l2)
    return mu1, witness, exact


def in_interval(r: int, k: int, t: float) -> bool:
    """t in I_{r,k} = [2k^2+(r+2)k+(r+2)^2/8, 2k^2+(r+3)k+(r+3)^2/8)."""
    lo = 2 * k * k + (r + 2) * k + (r + 2) ** 2 / 8.0
    hi = 2 * k * k + (r + 3) * k + (r + 3) ** 2 / 8.0
    return lo <= t < hi


def F_r_eval(r: int, k: int, t: float) -> float:
    """Interpolation of mu1 - RB at covalency 4k + r + 1 on the interval I_{r,k}.

    Negative value means the extremal graph is still Ramanujan.  The cosine
    factor uses the split gap |l1 - l2| = r - 1 of the maximizing subset.
    """
    if r not in (1, 3):
        raise ValidationError("r must be 1 or 3")
    if not in_interval(r, k, t):
        raise ValidationError(f"t = {t} is outside I_({r},{k})")
    mu = (
        2.0
        * math.sin(math.pi * (4 * k + r + 1) / (2.0 * t))
        / math.sin(math.pi / t)
        * math.cos(math.pi * (r - 1) / (2.0 * t))
    )
    return mu - 2.0 * math.sqrt(2.0 * t - 4 * k - r - 2)


EXCEPTIONAL = "exceptional"
ORDINARY = "ordinary"


@dataclass(frozen=True)
class PrimeClassification:
    p: int
    floor2sqrt2p: int
    parity: str  # parity of floor(2 sqrt(2p)): "even" or "odd"
    l_hat: int
    r: int
    k: int
    c: int
    in_family: bool
    mu1: float
    rb: float
    verdict: str  # EXCEPTIONAL or ORDINARY
    epsilon: int
    tilde_l: int

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "p": self.p,
            "floor2sqrt2p": self.floor2sqrt2p,
            "parity": self.parity,
            "l_hat": self.l_hat,
            "r": self.r,
            "k": self.k,
            "c": self.c,
            "in_family": self.in_family,
            "mu1": self.mu1,
            "rb": self.rb,
            "verdict": self.verdict,
            "epsilon": self.epsilon,
            "tilde_l": self.tilde_l,
        }

    def csv_row(self) -> list:
        return [
            self.p,
            self.parity,
            self.r,
            self.k,
            self.c,
            self.verdict,
            f"{self.mu1:.12g}",
            f"{self.rb:.12g}",
        ]

    @property
    def family(self) -> QuadraticFamily | None:
        if not self.in_family:
            return None
        return QuadraticFamily(self.r, self.c)


def classify_prime(p: int) -> PrimeClassification:
    """Classify an odd prime p >= 29 by both routes; raises if they disagree."""
    if p < 29 or not is_prime(p) or p % 2 == 0:
        raise ValidationError(
            f"classification needs an odd prime p >= 29, got {p} "
            "(use tilde_l_exhaustive below that range)"
        )
    f2 = floor_2_sqrt_2p(p)
    parity = "even" if f2 % 2 == 0 else "odd"
    l_hat = l_hat_dihedral(p)
    r = l_hat % 4
    k = l_hat // 4
    c = p - 2 * k * k - (r + 3) * k
    in_family = parity == "odd" and (r, c) in K_MIN and k >= K_MIN[(r, c)]

    l1, l2 = extremal_split(l_hat)
    mu1 = interval_mu1(p, l1, l2)
    rb = 2.0 * math.sqrt(2 * p - l_hat - 2)
    if abs(mu1 - rb) < _BORDERLINE:
        mu1 = _interval_mu1_precise(p, l1, l2)
        if abs(mu1 - rb) < 1e-20:
            raise RouteDisagreementError(
                f"p = {p}: mu1 and RB coincide beyond escalated precision"
            )
    if parity == "odd":
        spectral_exceptional = mu1 <= rb
        if spectral_exceptional != in_family:
            raise RouteDisagreementError(
                f"p = {p}: family membership says {in_family}, "
                f"mu1 vs RB says {spectral_exceptional} "
                f"(mu1 = {mu1!r}, rb = {rb!r})"
            )
        verdict = EXCEPTIONAL if in_family else ORDINARY
    else:
        verdict = ORDINARY
    epsilon = 0 if (parity == "odd" and verdict == ORDINARY) else 1
    return PrimeClassification(
        p=p,
        floor2sqrt2p=f2,
        parity=parity,
        l_hat=l_hat,
        r=r,
        k=k,
        c=c,
        in_family=in_family,
        mu1=mu1,
        rb=rb,
        verdict=verdict,
        epsilon=epsilon,
        tilde_l=l_hat + epsilon,
    )


def scan_primes(p_from: int, p_to: int, jobs: int = 1) -> list[PrimeClassification]:
    """Classify every prime in [p_from, p_to], ascending."""
    from .primes import sieve_primes

    ps = [int(p) for p in sieve_primes(p_to) if p >= max(p_from, 29)]
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(classify_prime, ps, chunksize=256))
    else:
        results = [classify_prime(p) for p in ps]
    return results


# ---------------------------------------------------------------------------
# exhaustive ground truth below the theorem's range, and extremality sampling


@dataclass(frozen=True)
class TildeReport:
    p: int
    tilde_l: int
    witness_mask_hex: str | None  # non-Ramanujan subset at tilde_l + 1, if any
    checked: int  # number of generating subsets swept


def _dihedral_zw_tables(p: int):
    """(|z| table over rotation-pair choices, |w| table over reflection choices,
    pair counts, reflection counts)."""
    n_pairs = (p - 1) // 2
    j = np.arange(p)
    pair_cos = 2.0 * np.cos(2.0 * np.pi * np.outer(np.arange(1, n_pairs + 1), j) / p)
    pair_masks = np.arange(1 << n_pairs, dtype=np.uint32)
    pair_bits = (pair_masks[:, None] >> np.arange(n_pairs)[None, :]) & 1
    z = pair_bits.astype(np.float64) @ pair_cos  # (2^n_pairs, p)
    refl_masks = np.arange(1 << p, dtype=np.uint32)
    refl_bits = ((refl_masks[:, None] >> np.arange(p)[None, :]) & 1).astype(np.float64)
    omega = np.exp(2j * np.pi * np.outer(np.arange(p), j) / p)
    w = refl_bits @ omega  # (2^p, p)
    return z, np.abs(w), pair_bits.sum(axis=1), refl_bits.sum(axis=1)


def tilde_l_exhaustive(p: int) -> TildeReport:
    """Exact tilde_l over ALL Cayley subsets of D_2p, by full enumeration."""
    if p not in (3, 5, 7, 11, 13):
        raise ValidationError(f"exhaustive sweep supported for p in 3..13, got {p}")
    z, absw, n_pair_sel, n_refl = _dihedral_zw_tables(p)
    n1 = 2 * n_pair_sel  # |S_1| per rotation choice
    n2 = n_refl
    # generating iff |S_2| >= 2, or |S_2| = 1 with S_1 nonempty
    min_fail = 2 * p  # covalency of the first non-Ramanujan subset
    witness = None
    checked = 0
    absz = np.abs(z[:, 1:])
    for i1 in range(z.shape[0]):
        mu_j = absz[i1][None, :] + absw[:, 1:]  # (2^p, p-1)
        mu = mu_j.max(axis=1)
        mu0 = np.abs(n1[i1] - n2)
        if n1[i1] > 0:
            mu = np.maximum(mu, mu0)  # |S_1| = 0 makes mu0 = |S| = k: excluded
        size = n1[i1] + n2
        l = 2 * p - size
        generating = (n2 >= 2) | ((n2 == 1) & (n1[i1] >= 2))
        rb = 2.0 * np.sqrt(np.maximum(size - 1.0, 0.0))
        bad = generating & (mu > rb + 1e-9) & (l < min_fail)
        checked += int(generating.sum())
        if bad.any():
            idx = int(np.flatnonzero(bad)[np.argmin(l[bad])])
            min_fail = int(l[idx])
            pair_mask = int(i1)
            s1 = 0
            for b in range((p - 1) // 2):
                if pair_mask >> b & 1:
                    v = b + 1
                    s1 |= (1 << v) | (1 << (p - v))
            witness = (s1, idx)
    tilde_l = min_fail - 1
    witness_hex = None
    if witness is not None:
        from .cayley import make_dihedral_subset

        G = build_dihedral(p)
        witness_hex = make_dihedral_subset(G, witness[0], witness[1]).mask_hex()
    return TildeReport(
        p=p, tilde_l=tilde_l, witness_mask_hex=witness_hex, checked=checked
    )


@dataclass(frozen=True)
class ExtremalityReport:
    p: int
    covalency: int
    n_samples: int
    mu_extremal: float
    max_observed: float
    violations: int


def exhaustive_extremality(p: int, l: int) -> ExtremalityReport:
    """Check mu(S) <= mu(extremal interval subset) over EVERY symmetric subset
    of D_2p at covalency l (small p only)."""
    if p not in (3, 5, 7, 11, 13):
        raise ValidationError(f"exhaustive sweep supported for p in 3..13, got {p}")
    mu_ext, _, _ = extremal_mu(p, l)
    z, absw, n_pair_sel, n_refl = _dihedral_zw_tables(p)
    size = 2 * p - l
    max_observed = 0.0
    violations = 0
    checked = 0
    absz = np.abs(z[:, 1:])
    for i1 in range(z.shape[0]):
        n1 = 2 * int(n_pair_sel[i1])
        n2 = size - n1
        if not 0 <= n2 <= p:
            continue
        sel = n_refl == n2
        if not sel.any():
            continue
        mu = (absz[i1][None, :] + absw[sel, 1:]).max(axis=1)
        if n1 > 0:
            mu = np.maximum(mu, abs(n1 - n2))
        checked += int(sel.sum())
        max_observed = max(max_observed, float(mu.max()))
        violations += int((mu > mu_ext + 1e-9).sum())
    return ExtremalityReport(
        p=p,
        covalency=l,
        n_samples=checked,
        mu_extremal=mu_ext,
        max_observed=max_observed,
        violations=violations,
    )


def sample_extremality(
    p: int, l: int, n_samples: int, seed: int = 0
) -> ExtremalityReport:
    """Draw random symmetric subsets at covalency l and check none beats the
    extremal interval subset.  A violation raises (it would falsify the
    maximality lemma)."""
    if n_samples < 1:
        raise ValidationError("n_samples must be >= 1")
    mu_ext, _, _ = extremal_mu(p, l)
    rng = np.random.default_rng(seed)
    n_pairs = (p - 1) // 2
    j = np.arange(1, p)
    pair_cos = 2.0 * np.cos(2.0 * np.pi * np.outer(np.arange(1, n_pairs + 1), j) / p)
    omega = np.exp(2j * np.pi * np.outer(np.arange(p), j) / p)
    splits = [
        (l1, l - l1)
        for l1 in range(1, min(l, p) + 1, 2)
        if l - l1 <= p and not (l1 == p and l - l1 == p)
    ]
    weights = np.array(
        [math.comb(n_pairs, (l1 - 1) // 2) * math.comb(p, l2) for l1, l2 in splits],
        dtype=np.float64,
    )
    weights /= weights.sum()
    counts = rng.multinomial(n_samples, weights)
    max_observed = 0.0
    violations = 0
    for (l1, l2), m in zip(splits, counts):
        if m == 0:
            continue
        kp = (l1 - 1) // 2  # removed rotation pairs
        keep_pairs = np.argsort(rng.random((m, n_pairs)), axis=1)[:, kp:]
        s1 = np.zeros((m, n_pairs))
        np.put_along_axis(s1, keep_pairs, 1.0, axis=1)
        z = s1 @ pair_cos
        keep_refl = np.argsort(rng.random((m, p)), axis=1)[:, l2:]
        s2 = np.zeros((m, p))
        np.put_along_axis(s2, keep_refl, 1.0, axis=1)
        w = s2.astype(complex) @ omega
        mu = (np.abs(z) + np.abs(w)).max(axis=1)
        n1 = p - l1
        n2 = p - l2
        if n1 > 0:
            mu = np.maximum(mu, abs(n1 - n2))
        max_observed = max(max_observed, float(mu.max()))
        violations += int((mu > mu_ext + 1e-9).sum())
    return ExtremalityReport(
        p=p,
        covalency=l,
        n_samples=n_samples,
        mu_extremal=mu_ext,
        max_observed=max_observed,
        violations=violations,
    )
