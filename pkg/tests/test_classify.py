"""Prime classification: parity, families, epsilon, and small-p sweeps."""

from __future__ import annotations

import pytest

from rcayley import classify_prime, sample_extremality, tilde_l_exhaustive
from rcayley.classify import (
    EXCEPTIONAL,
    ORDINARY,
    exhaustive_extremality,
    extremal_split,
    l_hat_dihedral,
    scan_primes,
)
from rcayley.errors import ValidationError


@pytest.mark.parametrize(
    "p,r,c,k,verdict",
    [
        (29, 1, -1, 3, EXCEPTIONAL),
        (31, 1, 1, 3, EXCEPTIONAL),
        (37, 3, 1, 3, EXCEPTIONAL),
        (41, 3, 5, 3, ORDINARY),
        (79, 3, -1, 5, ORDINARY),  # family form but k below the threshold
        (139, 3, -1, 7, EXCEPTIONAL),
    ],
)
def test_frozen_classifications(p, r, c, k, verdict):
    rec = classify_prime(p)
    assert (rec.r, rec.c, rec.k) == (r, c, k)
    assert rec.verdict == verdict


def test_epsilon_rule():
    # epsilon = 0 only for odd parity + ordinary verdict
    r79 = classify_prime(79)
    assert r79.parity == "odd" and r79.verdict == ORDINARY
    assert r79.epsilon == 0 and r79.tilde_l == r79.l_hat
    r41 = classify_prime(41)
    assert r41.parity == "even"
    assert r41.epsilon == 1 and r41.tilde_l == r41.l_hat + 1
    r29 = classify_prime(29)
    assert r29.epsilon == 1 and r29.tilde_l == 14


def test_classify_preconditions():
    for bad in (28, 27, 23, 2):
        with pytest.raises(ValidationError):
            classify_prime(bad)


def test_l_hat_dihedral_closed_form():
    # 2*floor((isqrt(8p)-1)/2) - 1, spot values
    assert l_hat_dihedral(29) == 13
    assert l_hat_dihedral(31) == 13
    assert l_hat_dihedral(41) == 15
    assert l_hat_dihedral(101) == 25


def test_extremal_split():
    assert extremal_split(13) == (7, 7)  # r = 1
    assert extremal_split(15) == (9, 7)  # r = 3
    with pytest.raises(AssertionError):
        extremal_split(14)


def test_scan_families_prefix():
    by_family = {}
    for rec in scan_primes(29, 700):
        if rec.verdict == EXCEPTIONAL:
            by_family.setdefault((rec.r, rec.c), []).append(rec.p)
    assert by_family[(1, -3)] == [67, 157, 283, 643]
    assert by_family[(1, -1)] == [29, 47, 197, 239, 389, 509]
    assert by_family[(1, 1)] == [31, 71, 97, 127, 199, 241, 337, 449, 577, 647]
    assert by_family[(3, -1)] == [139, 307, 359, 607]
    assert by_family[(3, 1)] == [37, 109, 541]
    assert by_family[(3, 3)] == [59, 83, 179, 263, 311, 419, 479, 683]


def test_tilde_exhaustive_small_p():
    # ground truth from the full subset sweep (no closed form below p = 29)
    expected = {3: 5, 5: 9, 7: 6, 11: 8, 13: 8}
    for p, tl in expected.items():
        rep = tilde_l_exhaustive(p)
        assert rep.tilde_l == tl
        if tl < 2 * p - 1:
            assert rep.witness_mask_hex is not None
    with pytest.raises(ValidationError):
        tilde_l_exhaustive(17)


def test_tilde_consistent_with_l_hat_above_11():
    # for p = 11, 13 the sweep agrees with l_hat <= tilde_l <= l_hat + 1
    for p in (11, 13):
        lh = l_hat_dihedral(p)
        tl = tilde_l_exhaustive(p).tilde_l
        assert lh <= tl <= lh + 1


def test_sample_extremality_no_violations():
    rep = sample_extremality(29, 14, 2000, seed=5)
    assert rep.violations == 0
    assert rep.max_observed <= rep.mu_extremal + 1e-9


def test_exhaustive_extremality_small_p():
    for p in (11, 13):
        rep = exhaustive_extremality(p, l_hat_dihedral(p) + 1)
        assert rep.violations == 0
        # the extremal interval subset itself is in the sweep
        assert rep.max_observed == pytest.approx(rep.mu_extremal, abs=1e-9)


def test_scan_matches_classify():
    recs = scan_primes(29, 500)
    for rec in recs[:20]:
        single = classify_prime(rec.p)
        assert single.verdict == rec.verdict
        assert (single.r, single.c, single.k) == (rec.r, rec.c, rec.k)
