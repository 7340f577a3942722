"""Jacobi eigensolver sanity against independent references."""

from __future__ import annotations

import numpy as np
import pytest

from rcayley import build_dihedral, eigenvalues_jacobi, make_interval_subset, oracle_spectrum
from rcayley.cayley import adjacency_matrix
from rcayley.errors import GuardError, ValidationError


def test_diagonal_matrix():
    vals = eigenvalues_jacobi(np.diag([3.0, -1.0, 2.0]))
    assert np.allclose(vals, [3.0, 2.0, -1.0])


def test_known_2x2():
    # eigenvalues of [[2,1],[1,2]] are 3 and 1
    vals = eigenvalues_jacobi(np.array([[2.0, 1.0], [1.0, 2.0]]))
    assert np.allclose(vals, [3.0, 1.0])


def test_against_numpy_random():
    rng = np.random.default_rng(0)
    for n in (5, 20, 60):
        M = rng.normal(size=(n, n))
        M = M + M.T
        ours = eigenvalues_jacobi(M)
        ref = np.sort(np.linalg.eigvalsh(M))[::-1]
        assert np.abs(ours - ref).max() < 1e-9


def test_rejects_nonsymmetric_and_nonsquare():
    with pytest.raises(ValidationError):
        eigenvalues_jacobi(np.array([[0.0, 1.0], [0.0, 0.0]]))
    with pytest.raises(ValidationError):
        eigenvalues_jacobi(np.zeros((2, 3)))


def test_size_guard():
    with pytest.raises(GuardError):
        eigenvalues_jacobi(np.zeros((2001, 2001)))


def test_oracle_spectrum_matches_numpy():
    G = build_dihedral(13)
    S = make_interval_subset(G, 3, 2)
    spec = oracle_spectrum(S)
    ref = np.sort(np.linalg.eigvalsh(adjacency_matrix(S).astype(float)))[::-1]
    assert np.abs(spec.values_sorted() - ref).max() < 1e-9
    assert spec.valency == S.size
