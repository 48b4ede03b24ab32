"""Constructors for standard two-qubit state families and random ensembles."""

from enum import Enum

import numpy as np

from .bloch import Components, bell_ket, components_from_density

# Recorded in emitted metadata so seeded outputs can be reproduced.
PRNG_ALGORITHM = "numpy.random.PCG64"

_SINGLET_R = -np.eye(3)
_PHI_PLUS_DIAG = np.array([1.0, -1.0, 1.0])


def werner(z):
    """``(1 - z) I/4 + z |Psi-><Psi-|``; ``R = -z I``."""
    return Components(u=np.zeros(3), v=np.zeros(3), R=z * _SINGLET_R)


def isotropic(z):
    """``(1 - z) I/4 + z |Phi+><Phi+|``; ``R = z diag(1, -1, 1)``."""
    return Components(u=np.zeros(3), v=np.zeros(3), R=z * np.diag(_PHI_PLUS_DIAG))


def generalized_isotropic(z, O_minus):
    """``u = v = 0``, ``R = z O`` with ``O`` orthogonal of determinant -1."""
    O = np.asarray(O_minus, dtype=float)
    if O.shape != (3, 3) or np.abs(O.T @ O - np.eye(3)).max() > 1e-10:
        raise ValueError("O_minus must be a 3x3 orthogonal matrix")
    if abs(np.linalg.det(O) + 1) > 1e-10:
        raise ValueError(f"O_minus needs determinant -1, got {np.linalg.det(O):.6g}")
    return Components(u=np.zeros(3), v=np.zeros(3), R=z * O)


def pure_family(theta, M, N):
    """Pure state with ``g = h = (cos t, 0, 0)``, ``x = (1, sin t, sin t)`` placed by ``M, N``.

    ``M`` and ``N`` must be orthogonal with ``det(M) det(N) = -1``.
    """
    M = np.asarray(M, dtype=float)
    N = np.asarray(N, dtype=float)
    for name, Q in (("M", M), ("N", N)):
        if Q.shape != (3, 3) or np.abs(Q.T @ Q - np.eye(3)).max() > 1e-10:
            raise ValueError(f"{name} must be a 3x3 orthogonal matrix")
    if abs(np.linalg.det(M) * np.linalg.det(N) + 1) > 1e-10:
        raise ValueError("pure states need orientation det(M) det(N) = -1")
    g = np.array([np.cos(theta), 0.0, 0.0])
    sigma = np.array([1.0, np.sin(theta), np.sin(theta)])
    return Components(u=M @ g, v=N @ g, R=(M * sigma) @ N.T)


# Relative frame in which the family first appears: M swaps axes 2 and 3.
PURE_FRAME_M = np.array([[1.0, 0.0, 0.0], [0.0, 0.0, 1.0], [0.0, 1.0, 0.0]])
PURE_FRAME_N = np.eye(3)


def is_maximally_entangled(c, tol=1e-9):
    """``u = v = 0`` and ``R`` orthogonal with determinant -1."""
    return bool(
        np.abs(c.u).max() <= tol
        and np.abs(c.v).max() <= tol
        and np.abs(c.R.T @ c.R - np.eye(3)).max() <= tol
        and abs(np.linalg.det(c.R) + 1) <= tol
    )


def generalized_bell_ket(phase, kind="phi"):
    """``(|00> + e^{i phase}|11>)/sqrt2`` (kind ``phi``) or ``(|01> + e^{i phase}|10>)/sqrt2`` (``psi``)."""
    ket = np.zeros(4, dtype=complex)
    a, b = (0, 3) if kind == "phi" else (1, 2)
    ket[a] = 1
    ket[b] = np.exp(1j * phase)
    return ket / np.sqrt(2)


def random_rotation(rng):
    """Haar-random element of SO(3): QR of a Gaussian with the R diagonal made positive."""
    q, r = np.linalg.qr(rng.standard_normal((3, 3)))
    q = q * np.sign(np.diag(r))
    if np.linalg.det(q) < 0:
        q[:, 0] *= -1
    return q


def random_reflection(rng):
    """Orthogonal matrix of determinant -1: ``Q diag(1, 1, -1)`` with Haar-random ``Q``."""
    return random_rotation(rng) @ np.diag([1.0, 1.0, -1.0])


class Ensemble(Enum):
    GINIBRE_MIXED = "ginibre"
    HAAR_PURE = "haar-pure"
    PRODUCT_RANDOM = "product"


def _rng(seed):
    return seed if isinstance(seed, np.random.Generator) else np.random.Generator(np.random.PCG64(seed))


def random_density(ensemble, seed):
    """Random 4x4 density matrix from the named ensemble; ``seed`` may be an int or a Generator."""
    rng = _rng(seed)
    ensemble = Ensemble(ensemble)
    if ensemble is Ensemble.GINIBRE_MIXED:
        G = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
        rho = G @ G.conj().T
        return rho / np.trace(rho).real
    if ensemble is Ensemble.HAAR_PURE:
        psi = rng.standard_normal(4) + 1j * rng.standard_normal(4)
        psi /= np.linalg.norm(psi)
        return np.outer(psi, psi.conj())
    # product of two states drawn from the single-qubit Ginibre ensemble
    rhos = []
    for _ in range(2):
        G = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
        r = G @ G.conj().T
        rhos.append(r / np.trace(r).real)
    return np.kron(rhos[0], rhos[1])


def random_state(ensemble, seed):
    """Bloch components of :func:`random_density`."""
    return components_from_density(random_density(ensemble, seed))


def bell_density(which):
    ket = bell_ket(which)
    return np.outer(ket, ket.conj())


def werner_density(z):
    return (1 - z) * np.eye(4) / 4 + z * bell_density("psi-")


def isotropic_density(z):
    return (1 - z) * np.eye(4) / 4 + z * bell_density("phi+")

