"""Brute-force spectra via a hand-rolled cyclic Jacobi eigensolver.

This is the independent validation path for every closed-form spectrum.
The rotation kernel is plain loops compiled with numba; no library
eigensolver is involved.
"""

from __future__ import annotations

import math

import numpy as np
from numba import njit

from .cayley import CayleySubset, adjacency_matrix
from .errors import ConvergenceError, GuardError, ValidationError
from .spectra import Spectrum, _entries_sorted

SIZE_GUARD = 2000
MAX_SWEEPS = 50
DEFAULT_TOL = 1e-12


@njit(cache=True)
def _jacobi_kernel(a, tol, max_sweeps):
    """Cyclic-by-row Jacobi; returns (diagonal, sweeps_used, residual_ratio).

    residual_ratio is the final off-diagonal Frobenius norm divided by the
    Frobenius norm of the input; sweeps_used == -1 signals non-convergence.
    """
    n = a.shape[0]
    norm_f = 0.0
    for i in range(n):
        for j in range(n):
            norm_f += a[i, j] * a[i, j]
    norm_f = math.sqrt(norm_f)
    if norm_f == 0.0:
        return np.diag(a).copy(), 0, 0.0
    for sweep in range(max_sweeps):
        off = 0.0
        for i in range(n - 1):
            for j in range(i + 1, n):
                off += a[i, j] * a[i, j]
        off = math.sqrt(2.0 * off)
        if off < tol * norm_f:
            return np.diag(a).copy(), sweep, off / norm_f
        # elements this small cannot keep the off-diagonal norm above tol,
        # but rotating on them stalls convergence through roundoff
        drop = tol * norm_f / (2.0 * n)
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                if abs(apq) < drop:
                    a[p, q] = 0.0
                    a[q, p] = 0.0
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if theta >= 0.0:
                    t = 1.0 / (theta + math.sqrt(1.0 + theta * theta))
                else:
                    t = -1.0 / (-theta + math.sqrt(1.0 + theta * theta))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                tau = s / (1.0 + c)
                app = a[p, p]
                aqq = a[q, q]
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
                for i in range(n):
                    if i == p or i == q:
                        continue
                    aip = a[i, p]
                    aiq = a[i, q]
                    a[i, p] = aip - s * (aiq + tau * aip)
                    a[i, q] = aiq + s * (aip - tau * aiq)
                    a[p, i] = a[i, p]
                    a[q, i] = a[i, q]
    off = 0.0
    for i in range(n - 1):
        for j in range(i + 1, n):
            off += a[i, j] * a[i, j]
    off = math.sqrt(2.0 * off)
    return np.diag(a).copy(), -1, off / norm_f


def eigenvalues_jacobi(A: np.ndarray, tol: float = DEFAULT_TOL) -> np.ndarray:
    """All eigenvalues of a dense symmetric matrix, sorted descending."""
    A = np.asarray(A, dtype=np.float64)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValidationError("matrix must be square")
    if A.shape[0] > SIZE_GUARD:
        raise GuardError(f"matrix size {A.shape[0]} exceeds guard {SIZE_GUARD}")
    if tol <= 0:
        raise ValidationError("tol must be positive")
    if not np.array_equal(A, A.T):
        raise ValidationError("matrix must be symmetric")
    diag, sweeps, residual = _jacobi_kernel(A.copy(), tol, MAX_SWEEPS)
    if sweeps == -1:
        raise ConvergenceError(residual, MAX_SWEEPS)
    return np.sort(diag)[::-1]


def oracle_spectrum(S: CayleySubset, tol: float = DEFAULT_TOL) -> Spectrum:
    """Spectrum of the Cayley graph via the Jacobi eigensolver."""
    if S.group.order > SIZE_GUARD:
        raise GuardError(f"group order {S.group.order} exceeds guard {SIZE_GUARD}")
    values = eigenvalues_jacobi(adjacency_matrix(S), tol=tol)
    return Spectrum(
        entries=_entries_sorted((float(v), 1) for v in values),
        valency=S.size,
        source="oracle",
    )
