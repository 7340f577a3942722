"""Covalency lattices, the integer-exact trivial bound l0, and l-hat."""

from __future__ import annotations

import pytest

from rcayley import build_group, compute_l0, compute_l_hat, covalency_lattice, verify_l_hat
from rcayley.classify import l_hat_dihedral


def test_dihedral_lattice_values():
    G = build_group("d2p:11")
    lat = covalency_lattice(G)
    # Y is forced nonempty (q = 2), so l = 1 + 2a for a = 0..(p-1)/2
    assert set(lat.values) == {1, 3, 5, 7, 9, 11}
    assert lat.l(0, 0) == 1
    assert lat.l(G.ratio, 0) == 11


def test_fpq_lattice_values():
    G = build_group("fpq:31,5")
    lat = covalency_lattice(G)
    assert set(lat.values) == {1, 11, 21, 31, 63, 73, 83, 93}


@pytest.mark.parametrize(
    "gspec,l0",
    [("d2p:11", 7), ("d2p:13", 7), ("d2p:101", 25), ("fpq:31,5", 21), ("fpq:43,3", 19), ("fpq:61,5", 31)],
)
def test_compute_l0_frozen(gspec, l0):
    assert compute_l0(build_group(gspec)) == l0


def test_l0_is_integer_exact():
    # (l+2)^2 <= 4|G| must hold at l0 and fail at the next lattice value
    for gspec in ("d2p:11", "d2p:37", "fpq:31,5", "fpq:43,3"):
        G = build_group(gspec)
        lat = covalency_lattice(G)
        l0 = compute_l0(G)
        assert (l0 + 2) ** 2 <= 4 * G.order
        larger = [l for l in lat.values if l > l0]
        if larger:
            assert (larger[0] + 2) ** 2 > 4 * G.order


@pytest.mark.parametrize(
    "gspec,l_hat",
    [("d2p:11", 7), ("d2p:101", 25), ("fpq:31,5", 21), ("fpq:43,3", 19), ("fpq:61,5", 31)],
)
def test_compute_l_hat_frozen(gspec, l_hat):
    rep = compute_l_hat(build_group(gspec))
    assert rep.l_hat == l_hat
    assert rep.l_hat == rep.l0  # within the theorem's range these agree


def test_l_hat_witness_reported():
    rep = compute_l_hat(build_group("fpq:31,5"))
    assert rep.witness is not None
    assert rep.witness_covalency == rep.l1_next
    assert rep.l1_next > rep.l_hat


@pytest.mark.parametrize("gspec", ["d2p:11", "d2p:19", "d2p:31", "fpq:13,3", "fpq:31,5"])
def test_verify_matches_fast_path(gspec):
    G = build_group(gspec)
    assert verify_l_hat(G).l_hat == compute_l_hat(G).l_hat


def test_dihedral_closed_form_matches():
    for p in (11, 13, 17, 19, 23, 29, 31, 37, 41, 43):
        G = build_group(f"d2p:{p}")
        assert compute_l_hat(G).l_hat == l_hat_dihedral(p)


def test_small_primes_l_hat_equals_p():
    # below the closed form's range every proper subset is Ramanujan up to l = p
    for p in (3, 5, 7):
        assert verify_l_hat(build_group(f"d2p:{p}")).l_hat == p
