"""Bloch matrix of a two-qubit state and its (u, v, R) components.

The Bloch matrix ``r`` is the real 4x4 array with ``rho = (1/4) r_{mu nu} D_{mu nu}``.
Row index ``mu`` belongs to the first qubit (left Kronecker factor), so the
first column below ``r[0, 0]`` is the local Bloch vector ``u`` of qubit 1, the
first row is ``v`` of qubit 2 and the lower-right block is the correlation
matrix ``R``::

    r = [[1, v^T],
         [u, R  ]]
"""

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .algebra import dirac_basis, levi_civita3
from .errors import InvalidMatrixError

INGEST_TOL = 1e-10


def _frozen(a, shape):
    a = np.array(a, dtype=float)
    if a.shape != shape:
        raise InvalidMatrixError(f"expected shape {shape}, got {a.shape}")
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class Components:
    """Local Bloch vectors ``u``, ``v`` and correlation matrix ``R`` of a two-qubit state."""

    u: np.ndarray
    v: np.ndarray
    R: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "u", _frozen(self.u, (3,)))
        object.__setattr__(self, "v", _frozen(self.v, (3,)))
        object.__setattr__(self, "R", _frozen(self.R, (3, 3)))

    def matrix(self):
        return join(self)

    def allclose(self, other, atol=1e-10):
        return (
            np.allclose(self.u, other.u, rtol=0, atol=atol)
            and np.allclose(self.v, other.v, rtol=0, atol=atol)
            and np.allclose(self.R, other.R, rtol=0, atol=atol)
        )

    def __repr__(self):
        return f"Components(u={self.u.tolist()}, v={self.v.tolist()}, R={self.R.tolist()})"


def check_density(rho, tol=INGEST_TOL):
    """Validate a 4x4 Hermitian unit-trace matrix and return its symmetrized copy.

    Positivity is not checked. Small Hermiticity defects (below ``tol``) are
    removed by averaging with the adjoint; larger ones are rejected.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise InvalidMatrixError(f"density matrix must be 4x4, got shape {rho.shape}")
    if not np.all(np.isfinite(rho)):
        raise InvalidMatrixError("density matrix has non-finite entries")
    herm = np.abs(rho - rho.conj().T).max()
    if herm > tol:
        raise InvalidMatrixError(f"density matrix is not Hermitian (max |rho - rho^dag| = {herm:.3g})")
    tr = np.trace(rho)
    if abs(tr - 1) > tol:
        raise InvalidMatrixError(f"density matrix trace is {tr.real:.12g}, expected 1")
    return 0.5 * (rho + rho.conj().T)


def check_bloch_matrix(r):
    r = np.asarray(r, dtype=float)
    if r.shape != (4, 4):
        raise InvalidMatrixError(f"Bloch matrix must be 4x4, got shape {r.shape}")
    if r[0, 0] != 1:
        raise InvalidMatrixError(f"Bloch matrix must have r[0, 0] == 1, got {r[0, 0]!r}")
    return r


def density_to_bloch(rho):
    """Bloch matrix ``r_{mu nu} = Tr(rho D_{mu nu})`` of a density matrix."""
    rho = check_density(rho)
    # Tr(rho D) = sum_ab rho[a, b] D[b, a]
    r = np.einsum("ab,mnba->mn", rho, dirac_basis()).real
    r[0, 0] = 1.0
    return r


def bloch_to_density(r):
    """Density matrix ``(1/4) sum r_{mu nu} D_{mu nu}``; positivity is not required."""
    r = check_bloch_matrix(r)
    return 0.25 * np.einsum("mn,mnab->ab", r, dirac_basis())


def split(r):
    r = np.asarray(r, dtype=float)
    return Components(u=r[1:, 0], v=r[0, 1:], R=r[1:, 1:])


def join(c):
    r = np.empty((4, 4))
    r[0, 0] = 1.0
    r[1:, 0] = c.u
    r[0, 1:] = c.v
    r[1:, 1:] = c.R
    return r


def components_from_density(rho):
    return split(density_to_bloch(rho))


def components_to_density(c):
    return bloch_to_density(join(c))


def product_state(u, v):
    """Bloch components of ``rho1 (x) rho2``; the correlation matrix is ``u v^T``."""
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    for name, w in (("u", u), ("v", v)):
        if np.linalg.norm(w) > 1 + 1e-12:
            raise ValueError(f"|{name}| = {np.linalg.norm(w):.6g} exceeds 1: not a qubit state")
    return Components(u=u, v=v, R=np.outer(u, v))


class Bell(Enum):
    PHI_PLUS = "phi+"
    PHI_MINUS = "phi-"
    PSI_PLUS = "psi+"
    PSI_MINUS = "psi-"


_BELL_DIAG = {
    Bell.PHI_PLUS: (1, -1, 1),
    Bell.PHI_MINUS: (-1, 1, 1),
    Bell.PSI_PLUS: (1, 1, -1),
    Bell.PSI_MINUS: (-1, -1, -1),
}

_BELL_KET = {
    Bell.PHI_PLUS: (1, 0, 0, 1),
    Bell.PHI_MINUS: (1, 0, 0, -1),
    Bell.PSI_PLUS: (0, 1, 1, 0),
    Bell.PSI_MINUS: (0, 1, -1, 0),
}


def bell_state(which):
    """Bloch components of a Bell state: ``u = v = 0`` and a diagonal ``R``."""
    which = Bell(which)
    return Components(u=np.zeros(3), v=np.zeros(3), R=np.diag(_BELL_DIAG[which]).astype(float))


def bell_ket(which):
    """Bell ket in the computational basis ``|00>, |01>, |10>, |11>``."""
    return np.array(_BELL_KET[Bell(which)], dtype=complex) / np.sqrt(2)


def partial_trace(rho, keep):
    """Reduced 2x2 state of qubit ``keep`` (1 or 2)."""
    t = np.asarray(rho).reshape(2, 2, 2, 2)
    if keep == 1:
        return np.einsum("ajbj->ab", t)
    if keep == 2:
        return np.einsum("jajb->ab", t)
    raise ValueError(f"keep must be 1 or 2, got {keep!r}")


def bloch_norm2(c):
    """Squared Frobenius norm of the Bloch matrix, ``1 + |u|^2 + |v|^2 + |R|^2``."""
    return 1.0 + c.u @ c.u + c.v @ c.v + np.sum(c.R * c.R)


# Observables ``A = sum [A]_{ab} D_{ab}`` are stored by their real coefficient
# matrix [A] (no 1/4 factor, unlike the Bloch matrix).


def observable_rep(A):
    """Coefficient matrix ``[A]_{ab} = Tr(A D_{ab}) / 4`` of a Hermitian 4x4 operator."""
    A = np.asarray(A, dtype=complex)
    if A.shape != (4, 4):
        raise InvalidMatrixError(f"observable must be 4x4, got shape {A.shape}")
    if np.abs(A - A.conj().T).max() > INGEST_TOL:
        raise InvalidMatrixError("observable is not Hermitian")
    return 0.25 * np.einsum("ab,mnba->mn", A, dirac_basis()).real


def observable_operator(rep):
    return np.einsum("mn,mnab->ab", np.asarray(rep, dtype=float), dirac_basis())


def local_spin_observable(c_hat, d_hat):
    """Coefficient matrix of ``(c . sigma) (x) (d . sigma)``."""
    rep = np.zeros((4, 4))
    rep[1:, 1:] = np.outer(c_hat, d_hat)
    return rep


def expectation(r, rep):
    """Expectation value ``<A> = r . [A]`` (Frobenius inner product)."""
    return float(np.sum(np.asarray(r, dtype=float) * np.asarray(rep, dtype=float)))


def observable_square(rep):
    """Coefficient matrix of ``A^2`` computed from ``[A]`` alone."""
    a = np.asarray(rep, dtype=float)
    a00, a_col, a_row, a_blk = a[0, 0], a[1:, 0], a[0, 1:], a[1:, 1:]
    eps = levi_civita3()
    out = np.empty((4, 4))
    out[0, 0] = np.sum(a * a)
    out[1:, 0] = 2 * (a00 * a_col + a_blk @ a_row)
    out[0, 1:] = 2 * (a00 * a_row + a_col @ a_blk)
    out[1:, 1:] = 2 * (a00 * a_blk + np.outer(a_col, a_row)) - np.einsum(
        "pqi,rsj,pr,qs->ij", eps, eps, a_blk, a_blk
    )
    return out
