"""Entanglement by orientation reversal (generalized partial transpose).

A state is entangled exactly when its conjugate state, the one with the same
``(x, g, h)`` and opposite orientation ``d``, violates positivity. Any
reflection ``Q`` (orthogonal, ``det Q = -1``) applied to one qubit's Bloch
data reverses ``d``; ``Q_T = diag(1, -1, 1)`` is the ordinary transpose.
"""

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .bloch import Components, check_density, components_from_density
from .canonical import CanonicalForm
from .errors import UnphysicalStateError
from .positivity import POSITIVITY_TOL, eigenvalue_oracle, positivity_lhs

Q_T = np.diag([1.0, -1.0, 1.0])
Q_ANTIDIAGONAL = np.diag([1.0, 1.0, -1.0])
for _q in (Q_T, Q_ANTIDIAGONAL):
    _q.setflags(write=False)


class Subsystem(Enum):
    FIRST = 1
    SECOND = 2


def check_reflection(Q):
    Q = np.asarray(Q, dtype=float)
    if Q.shape != (3, 3) or np.abs(Q.T @ Q - np.eye(3)).max() > 1e-10:
        raise ValueError("reflection must be a 3x3 orthogonal matrix")
    if abs(np.linalg.det(Q) + 1) > 1e-10:
        raise ValueError(f"reflection needs determinant -1, got {np.linalg.det(Q):.6g}")
    return Q


def partial_transpose_bloch(c, subsystem=Subsystem.SECOND, Q=Q_T):
    """Reflect one qubit: ``u -> Q u, R -> Q R`` (first) or ``v -> Q v, R -> R Q^T`` (second)."""
    Q = check_reflection(Q)
    if Subsystem(subsystem) is Subsystem.FIRST:
        return Components(u=Q @ c.u, v=c.v, R=Q @ c.R)
    return Components(u=c.u, v=Q @ c.v, R=c.R @ Q.T)


def conjugate_state(f, Q=Q_T):
    """Same ``x, g, h``; orientation reversed by ``M -> Q M``."""
    Q = check_reflection(Q)
    return CanonicalForm(x=f.x, M=Q @ f.M, N=f.N, g=f.g, h=f.h, d=-f.d)


@dataclass(frozen=True)
class EntanglementReport:
    is_entangled: bool
    flipped_lhs: tuple
    score: float

    def to_dict(self):
        return {"entangled": self.is_entangled, "flipped_lhs": list(self.flipped_lhs), "score": self.score}


def entanglement_score(flipped_lhs3):
    """Negative part of the third flipped left-hand side, scaled so Bell states give 1.

    A heuristic indicator only, not a validated entanglement measure.
    """
    return max(0.0, -float(flipped_lhs3)) / 16.0


def is_entangled(c, tol=POSITIVITY_TOL, subsystem=Subsystem.SECOND, Q=Q_T):
    """Classify a physical state by the positivity of its orientation-reversed partner."""
    own = positivity_lhs(c, tol)
    if not own.is_positive:
        raise UnphysicalStateError(
            f"state is not positive (lhs = {own.lhs1:.6g}, {own.lhs2:.6g}, {own.lhs3:.6g})", own
        )
    flipped = positivity_lhs(partial_transpose_bloch(c, subsystem, Q), tol)
    return EntanglementReport(
        is_entangled=not flipped.is_positive,
        flipped_lhs=flipped.lhs,
        score=entanglement_score(flipped.lhs3),
    )


def partial_transpose(rho, subsystem=Subsystem.SECOND):
    """Literal partial transpose of a 4x4 matrix on one qubit."""
    t = np.asarray(rho).reshape(2, 2, 2, 2)
    if Subsystem(subsystem) is Subsystem.FIRST:
        return t.transpose(2, 1, 0, 3).reshape(4, 4)
    return t.transpose(0, 3, 2, 1).reshape(4, 4)


def ppt_oracle(rho, tol=POSITIVITY_TOL):
    """True if the partial transpose of ``rho`` is not positive, i.e. ``rho`` is entangled."""
    rho = check_density(rho)
    _, positive = eigenvalue_oracle(rho, tol)
    if not positive:
        raise UnphysicalStateError("input density matrix is not positive", positivity_lhs(components_from_density(rho), tol))
    _, pt_positive = eigenvalue_oracle(partial_transpose(rho), tol)
    return not pt_positive
