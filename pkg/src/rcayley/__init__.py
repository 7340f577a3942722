"""Spectra and Ramanujan edge-removal bounds for Cayley graphs of dihedral
groups D_2p and Frobenius groups F_{p,q}, with exceptional-prime
classification and the associated quadratic-family prime counts."""

from .bounds import BoundsReport, compute_l0, compute_l_hat, covalency_lattice, verify_l_hat
from .cayley import (
    CayleySubset,
    NormalSubsetSpec,
    adjacency_matrix,
    enumerate_normal_subsets,
    make_dihedral_subset,
    make_interval_subset,
    make_normal_subset,
)
from .classify import (
    PrimeClassification,
    classify_prime,
    extremal_mu,
    F_r_eval,
    sample_extremality,
    tilde_l_exhaustive,
)
from .groups import (
    CharacterTable,
    ConjugacyClass,
    GroupTable,
    build_dihedral,
    build_fpq,
    build_group,
    character_table,
    conjugacy_classes,
)
from .oracle import eigenvalues_jacobi, oracle_spectrum
from .primes import (
    QuadraticFamily,
    enumerate_family,
    hl_constant,
    is_prime,
    jacobi,
    legendre,
    pi_f,
    residue_avoidance,
    sieve_primes,
)
from .spectra import (
    RamanujanVerdict,
    Spectrum,
    dihedral_spectrum,
    dihedral_zw,
    frobenius_spectrum,
    normal_spectrum,
    verdict,
)

__version__ = "0.1.0"
