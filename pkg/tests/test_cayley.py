"""Cayley subset construction, validation, serialization, enumeration."""

from __future__ import annotations

import numpy as np
import pytest

from rcayley import (
    NormalSubsetSpec,
    adjacency_matrix,
    build_dihedral,
    build_fpq,
    enumerate_normal_subsets,
    make_dihedral_subset,
    make_interval_subset,
    make_normal_subset,
)
from rcayley.cayley import is_generating, random_dihedral_subset, subset_from_hex
from rcayley.errors import ValidationError


def test_normal_subset_covalency_identity():
    G = build_fpq(31, 5)
    for spec in enumerate_normal_subsets(G):
        S = make_normal_subset(G, spec)
        # the identity covalency = 1 + a q + b p is asserted inside; check range
        assert 1 <= S.covalency < G.order


def test_normal_subset_rejects_empty_y():
    G = build_dihedral(11)
    with pytest.raises(ValidationError):
        make_normal_subset(G, NormalSubsetSpec.make((1,), ()))


def test_normal_subset_rejects_asymmetric_x():
    G = build_fpq(7, 3)
    # class of x is {x, x^2, x^4}; its inverse class {x^3, x^5, x^6} is distinct
    with pytest.raises(ValidationError):
        make_normal_subset(G, NormalSubsetSpec.make((1,), (1, 2)))


def test_normal_subset_rejects_asymmetric_y():
    G = build_fpq(7, 3)
    with pytest.raises(ValidationError):
        make_normal_subset(G, NormalSubsetSpec.make((), (1,)))


def test_enumeration_counts():
    # d2p:11 -> 5 symmetric kernel orbits, 1 reflection class: 2^5 specs
    assert sum(1 for _ in enumerate_normal_subsets(build_dihedral(11))) == 32
    # fpq:7,3 -> 1 inverse-paired kernel orbit, 1 paired coset orbit: 2 specs
    assert sum(1 for _ in enumerate_normal_subsets(build_fpq(7, 3))) == 2


def test_mask_hex_roundtrip():
    G = build_dihedral(13)
    rng = np.random.default_rng(3)
    for _ in range(20):
        S = random_dihedral_subset(G, rng)
        back = subset_from_hex(G, S.mask_hex())
        assert back.mask == S.mask
        assert (back.l1, back.l2) == (S.l1, S.l2)


def test_subset_from_hex_rejects_identity_and_asymmetry():
    G = build_dihedral(11)
    with pytest.raises(ValidationError):
        subset_from_hex(G, (1).to_bytes(3, "little").hex())  # identity bit
    with pytest.raises(ValidationError):
        subset_from_hex(G, (2).to_bytes(3, "little").hex())  # x without x^-1


def test_interval_subset_counts():
    G = build_dihedral(29)
    S = make_interval_subset(G, 7, 7)
    assert S.l1 == 7 and S.l2 == 7
    assert S.covalency == 14
    assert S.size == 2 * 29 - 14


def test_interval_subset_validation():
    G = build_dihedral(11)
    with pytest.raises(ValidationError):
        make_interval_subset(G, 2, 3)  # even l1
    with pytest.raises(ValidationError):
        make_interval_subset(G, 11, 11)  # empty subset


def test_generation_criterion():
    G = build_dihedral(11)
    # single reflection alone does not generate
    with pytest.raises(ValidationError):
        make_dihedral_subset(G, 0, 1)
    # one reflection plus one rotation pair does
    S = make_dihedral_subset(G, (1 << 1) | (1 << 10), 1)
    assert is_generating(S)
    # two reflections generate
    assert is_generating(make_dihedral_subset(G, 0, 3))


def test_adjacency_matrix_is_symmetric_regular():
    G = build_dihedral(13)
    S = make_interval_subset(G, 3, 4)
    A = adjacency_matrix(S)
    assert A.shape == (26, 26)
    assert np.array_equal(A, A.T)
    assert (A.sum(axis=1) == S.size).all()
    assert (np.diag(A) == 0).all()


def test_random_subsets_are_valid():
    G = build_dihedral(17)
    rng = np.random.default_rng(11)
    for _ in range(50):
        S = random_dihedral_subset(G, rng)
        assert is_generating(S)
        members = S.members()
        assert all(S.contains(int(G.inv[g])) for g in members)
