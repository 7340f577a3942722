"""Group tables, conjugacy classes, and character tables."""

from __future__ import annotations

import numpy as np
import pytest

from rcayley import (
    build_dihedral,
    build_fpq,
    build_group,
    character_table,
    conjugacy_classes,
)
from rcayley.errors import ValidationError


def test_dihedral_table_basics():
    G = build_dihedral(11)
    assert G.order == 22
    assert G.p == 11 and G.q == 2
    assert G.ratio == 5
    # identity behaves
    assert all(int(G.mul[0, g]) == g for g in range(22))
    assert all(int(G.mul[g, 0]) == g for g in range(22))
    # inverses
    assert all(int(G.mul[g, int(G.inv[g])]) == 0 for g in range(22))


def test_fpq_table_basics():
    G = build_fpq(7, 3)
    assert G.order == 21
    assert pow(G.u, 3, 7) == 1 and G.u != 1
    assert all(int(G.mul[g, int(G.inv[g])]) == 0 for g in range(21))


@pytest.mark.parametrize("spec", ["d2p:11", "d2p:13", "fpq:7,3", "fpq:13,3", "fpq:31,5"])
def test_associativity_random(spec):
    G = build_group(spec)
    rng = np.random.default_rng(0)
    n = G.order
    g, h, k = (rng.integers(0, n, 200) for _ in range(3))
    lhs = G.mul[G.mul[g, h], k]
    rhs = G.mul[g, G.mul[h, k]]
    assert np.array_equal(lhs, rhs)


def test_build_group_parsing():
    assert build_group("d2p:11").family == "dihedral"
    assert build_group("fpq:7,3").family == "fpq"
    for bad in ("d2p:10", "d2p:2", "fpq:7,4", "fpq:11,3", "nope:3", "d2p:abc"):
        with pytest.raises(ValidationError):
            build_group(bad)


def test_dihedral_conjugacy_classes():
    G = build_dihedral(11)
    classes = conjugacy_classes(G)
    sizes = sorted(len(c.members) for c in classes)
    # identity, 5 rotation pairs, all reflections
    assert sizes == [1, 2, 2, 2, 2, 2, 11]
    assert classes[0].representative == 0


def test_fpq_conjugacy_classes():
    G = build_fpq(7, 3)
    sizes = sorted(len(c.members) for c in conjugacy_classes(G))
    # identity, 2 kernel orbits of size 3, 2 cosets of size 7
    assert sizes == [1, 3, 3, 7, 7]


@pytest.mark.parametrize("spec", ["d2p:11", "d2p:13", "fpq:7,3", "fpq:13,3", "fpq:31,5"])
def test_character_orthogonality(spec):
    G = build_group(spec)
    table = character_table(G)
    n = G.order
    class_sizes = np.array([len(c.members) for c in table.classes], dtype=float)
    vals = np.array([row.values for row in table.rows])
    assert sum(row.degree**2 for row in table.rows) == n
    gram = (vals * class_sizes) @ vals.conj().T / n
    assert np.allclose(gram, np.eye(len(table.rows)), atol=1e-10)


def test_character_degrees_fpq():
    G = build_fpq(31, 5)
    table = character_table(G)
    degrees = sorted(row.degree for row in table.rows)
    # q linear characters, r induced of degree q
    assert degrees == [1] * 5 + [5] * 6
