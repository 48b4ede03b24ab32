"""Shared oracles and generators for the test suite."""

import numpy as np
from hypothesis import strategies as st

from blochmat.algebra import dirac_basis
from blochmat.families import Ensemble, random_density

seeds = st.integers(min_value=0, max_value=2**32 - 1)


def rng_for(seed):
    return np.random.Generator(np.random.PCG64(seed))


def ginibre(seed):
    return random_density(Ensemble.GINIBRE_MIXED, seed)


def haar_unitary(rng, n=2):
    z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def bloch_by_trace(rho):
    """Direct trace oracle, one entry at a time."""
    D = dirac_basis()
    return np.array([[np.trace(rho @ D[m, n]).real for n in range(4)] for m in range(4)])


def min_eig(rho):
    return np.linalg.eigvalsh(0.5 * (rho + rho.conj().T)).min()


def indefinite_hermitian(rng, scale=1.0):
    """Unit-trace Hermitian matrix, usually with a negative eigenvalue."""
    A = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    H = (A + A.conj().T) * scale
    return H + (1 - np.trace(H).real) / 4 * np.eye(4)


def expm_hermitian(H, t=1.0):
    """exp(i t H) for Hermitian H via its eigendecomposition."""
    w, V = np.linalg.eigh(H)
    return (V * np.exp(1j * t * w)) @ V.conj().T
