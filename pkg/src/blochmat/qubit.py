"""Single-qubit Bloch vectors and unitaries as rotations."""

import numpy as np

from .algebra import pauli
from .errors import InvalidMatrixError

INGEST_TOL = 1e-10

_SIGMA = np.array([pauli(i) for i in range(1, 4)])


def cross_matrix(a):
    """Matrix ``[a]_x`` with ``cross_matrix(a) @ b == np.cross(a, b)``."""
    a1, a2, a3 = a
    return np.array([[0.0, -a3, a2], [a3, 0.0, -a1], [-a2, a1, 0.0]])


def qubit_density_to_bloch(rho):
    """Bloch vector ``r_i = Tr(rho sigma_i)`` of a 2x2 density matrix."""
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (2, 2):
        raise InvalidMatrixError(f"expected a 2x2 matrix, got shape {rho.shape}")
    if np.abs(rho - rho.conj().T).max() > INGEST_TOL:
        raise InvalidMatrixError("qubit density matrix is not Hermitian")
    if abs(np.trace(rho) - 1) > INGEST_TOL:
        raise InvalidMatrixError(f"qubit density matrix has trace {np.trace(rho).real:.3g}, expected 1")
    return np.einsum("ij,kji->k", rho, _SIGMA).real


def qubit_bloch_to_density(r):
    """Density matrix ``(I + r . sigma) / 2``; ``r`` need not lie inside the sphere."""
    r = np.asarray(r, dtype=float)
    return 0.5 * (np.eye(2) + np.einsum("k,kij->ij", r, _SIGMA))


def rotation_from_axis_angle(axis, angle):
    """Rotation by ``angle`` about the unit vector ``axis`` (Rodrigues form)."""
    axis = np.asarray(axis, dtype=float)
    norm = np.linalg.norm(axis)
    if norm == 0:
        raise ValueError("rotation axis must be nonzero")
    if abs(norm - 1) > 1e-12:
        raise ValueError(f"rotation axis must be a unit vector, |axis| = {norm!r}")
    c, s = np.cos(angle), np.sin(angle)
    return c * np.eye(3) + (1 - c) * np.outer(axis, axis) + s * cross_matrix(axis)


def unitary_from_axis_angle(axis, angle):
    """The 2x2 unitary ``cos(a/2) I - i sin(a/2) axis . sigma`` inducing that rotation."""
    axis = np.asarray(axis, dtype=float)
    return np.cos(angle / 2) * np.eye(2) - 1j * np.sin(angle / 2) * np.einsum("k,kij->ij", axis, _SIGMA)


def rotation_from_unitary(U):
    """Rotation ``Q`` with ``Bloch(U rho U^dag) = Q Bloch(rho)``.

    Columns are read off by conjugating each Pauli matrix, so a global phase
    on ``U`` drops out and no axis/angle branch cut is involved.
    """
    U = np.asarray(U, dtype=complex)
    if U.shape != (2, 2):
        raise InvalidMatrixError(f"expected a 2x2 unitary, got shape {U.shape}")
    if np.abs(U.conj().T @ U - np.eye(2)).max() > INGEST_TOL:
        raise InvalidMatrixError("matrix is not unitary")
    conj = U @ _SIGMA @ U.conj().T
    # Q[i, j] = Tr(sigma_i U sigma_j U^dag) / 2
    return 0.5 * np.einsum("iab,jba->ij", _SIGMA, conj).real


def qubit_expectation(r, s, c):
    """Expectation of ``s I + c . sigma`` in the state with Bloch vector ``r``."""
    return float(s + np.dot(r, c))
