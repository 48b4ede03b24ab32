"""Local and nonlocal unitary actions on Bloch components, and their invariants."""

from dataclasses import dataclass

import numpy as np

from .algebra import dirac, levi_civita3
from .bloch import Components, bloch_norm2
from .canonical import CanonicalForm, canonical_decompose, cofactor_diag
from .positivity import cofactor3

ROTATION_TOL = 1e-10


def check_rotation(Q, name="Q"):
    Q = np.asarray(Q, dtype=float)
    if Q.shape != (3, 3):
        raise ValueError(f"{name} must be 3x3, got shape {Q.shape}")
    if np.abs(Q.T @ Q - np.eye(3)).max() > ROTATION_TOL:
        raise ValueError(f"{name} is not orthogonal")
    if abs(np.linalg.det(Q) - 1) > ROTATION_TOL:
        raise ValueError(f"{name} has determinant {np.linalg.det(Q):.6g}; a proper rotation needs +1")
    return Q


@dataclass(frozen=True, eq=False)
class LocalUnitary:
    """Pair of Bloch-sphere rotations, one per qubit."""

    Q1: np.ndarray
    Q2: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "Q1", check_rotation(self.Q1, "Q1"))
        object.__setattr__(self, "Q2", check_rotation(self.Q2, "Q2"))


def apply_local(c, L):
    """``(U1 (x) U2) rho (U1 (x) U2)^dag`` as ``u -> Q1 u``, ``v -> Q2 v``, ``R -> Q1 R Q2^T``."""
    return Components(u=L.Q1 @ c.u, v=L.Q2 @ c.v, R=L.Q1 @ c.R @ L.Q2.T)


def apply_local_svd(f, L):
    """Local action on a canonical form: only ``M`` and ``N`` rotate."""
    return CanonicalForm(x=f.x, M=L.Q1 @ f.M, N=L.Q2 @ f.N, g=f.g, h=f.h, d=f.d)


@dataclass(frozen=True)
class CanonicalAngles:
    theta1: float
    theta2: float
    theta3: float

    def as_array(self):
        return np.array([self.theta1, self.theta2, self.theta3], dtype=float)


def _mix(a, b, angle):
    c, s = np.cos(angle), np.sin(angle)
    return c * a - s * b, s * a + c * b


def apply_irreducible(c, j, theta):
    """Action of ``exp(i theta/2 sigma_j (x) sigma_j)`` for ``j`` in 1..3.

    With ``(i, j, k)`` cyclic, ``(u_k, R_ij)`` and ``(v_k, R_ji)`` are rotated
    by ``-theta`` while ``(u_i, R_kj)`` and ``(v_i, R_jk)`` are rotated by
    ``+theta``. Everything else, including the diagonal of ``R``, is unchanged.
    """
    if j not in (1, 2, 3):
        raise ValueError(f"j must be 1, 2 or 3, got {j!r}")
    jj = j - 1
    i, k = (jj + 2) % 3, (jj + 1) % 3
    u, v, R = c.u.copy(), c.v.copy(), c.R.copy()
    u[k], R[i, jj] = _mix(c.u[k], c.R[i, jj], -theta)
    v[k], R[jj, i] = _mix(c.v[k], c.R[jj, i], -theta)
    u[i], R[k, jj] = _mix(c.u[i], c.R[k, jj], theta)
    v[i], R[jj, k] = _mix(c.v[i], c.R[jj, k], theta)
    return Components(u=u, v=v, R=R)


def apply_basic_nonlocal(c, angles):
    """Action of ``exp(i/2 sum_j theta_j sigma_j (x) sigma_j)`` in closed form."""
    t = angles.as_array() if isinstance(angles, CanonicalAngles) else np.asarray(angles, dtype=float)
    cos, sin = np.cos(t), np.sin(t)
    eps = levi_civita3()
    u, v, R = c.u, c.v, c.R
    u2, v2 = np.empty(3), np.empty(3)
    R2 = np.diag(np.diag(R)).astype(float)
    for k in range(3):
        i, j = (k + 1) % 3, (k + 2) % 3
        cc, ss = cos[i] * cos[j], sin[i] * sin[j]
        cs, sc = cos[i] * sin[j], sin[i] * cos[j]
        e = eps[i, j, k]
        u2[k] = u[k] * cc + v[k] * ss + e * (R[i, j] * cs - R[j, i] * sc)
        v2[k] = v[k] * cc + u[k] * ss + e * (R[j, i] * cs - R[i, j] * sc)
        # both off-diagonal entries that share the spectator index k
        for a, b in ((i, j), (j, i)):
            ca_sb, sa_cb = cos[a] * sin[b], sin[a] * cos[b]
            R2[a, b] = R[a, b] * cc + R[b, a] * ss - eps[a, b, k] * (u[k] * ca_sb - v[k] * sa_cb)
    return Components(u=u2, v=v2, R=R2)


def irreducible_unitary(j, theta):
    """Closed form ``cos(theta/2) I + i sin(theta/2) sigma_j (x) sigma_j``."""
    return np.cos(theta / 2) * np.eye(4) + 1j * np.sin(theta / 2) * dirac(j, j)


def basic_nonlocal_unitary(angles):
    t = angles.as_array() if isinstance(angles, CanonicalAngles) else np.asarray(angles, dtype=float)
    return irreducible_unitary(1, t[0]) @ irreducible_unitary(2, t[1]) @ irreducible_unitary(3, t[2])


@dataclass(frozen=True)
class BlochInvariants:
    B1: float
    B2: float
    B3: float

    def as_tuple(self):
        return (self.B1, self.B2, self.B3)


def bloch_invariants(c):
    """``B1 = |r|^2``, ``B2 = u^T R v - det R`` and the quartic ``B3``, from ``(u, v, R)``."""
    Rc = cofactor3(c.R)
    b1 = bloch_norm2(c)
    b2 = c.u @ c.R @ c.v - np.linalg.det(c.R)
    b3 = (
        (c.u @ c.u) * (c.v @ c.v)
        + np.sum((c.u @ c.R) ** 2)
        + np.sum((c.R @ c.v) ** 2)
        + np.sum(Rc * Rc)
        - 2 * c.u @ Rc @ c.v
    )
    return BlochInvariants(float(b1), float(b2), float(b3))


def bloch_invariants_canonical(f):
    """The same invariants evaluated from ``(x, g, h, d)``."""
    x, g, h, d = f.x, f.g, f.h, f.d
    xc = cofactor_diag(x)
    b1 = 1 + g @ g + h @ h + x @ x
    b2 = g @ (x * h) - d * np.prod(x)
    b3 = (g @ g) * (h @ h) + np.sum((x * g) ** 2) + np.sum((x * h) ** 2) + xc @ xc - 2 * d * g @ (xc * h)
    return BlochInvariants(float(b1), float(b2), float(b3))


def depolarize(c, p):
    """Components of ``p rho + (1 - p) I/4``: ``u``, ``v`` and ``R`` scale by ``p``."""
    if not 0 <= p <= 1:
        raise ValueError(f"depolarizing parameter must lie in [0, 1], got {p!r}")
    return Components(u=p * c.u, v=p * c.v, R=p * c.R)


def singular_value_curve(c, thetas, j=1):
    """Singular values of the state after ``apply_irreducible(c, j, theta)`` for each theta."""
    return np.array([canonical_decompose(apply_irreducible(c, j, t)).x for t in thetas])
