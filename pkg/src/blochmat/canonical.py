"""Canonical form of a state from the SVD of its correlation matrix.

``R = M diag(x) N^T`` with ``x`` sorted descending, ``d = det(M) det(N)`` the
correlation orientation and ``g = M^T u``, ``h = N^T v`` the relative Bloch
vectors. Positivity depends only on ``(x, g, h, d)``.

Sign conventions, all deterministic:

* each pair ``(m_i, n_i)`` is flipped together so that the largest-magnitude
  entry of ``m_i`` is positive;
* columns sharing a singular value are ordered lexicographically by ``m_i``,
  largest first (no rotation inside a degenerate subspace is attempted);
* singular values below ``1e-10 * max(1, x1)`` count as zero; when any is zero
  the orientation is ambiguous and the last zero column of ``N`` is flipped if
  needed so that ``d = -1``.
"""

from dataclasses import dataclass

import numpy as np

from .bloch import Components
from .positivity import make_report, POSITIVITY_TOL

RANK_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class CanonicalForm:
    x: np.ndarray
    M: np.ndarray
    N: np.ndarray
    g: np.ndarray
    h: np.ndarray
    d: int

    def __post_init__(self):
        for name in ("x", "M", "N", "g", "h"):
            a = np.array(getattr(self, name), dtype=float)
            a.setflags(write=False)
            object.__setattr__(self, name, a)
        if self.d not in (1, -1):
            raise ValueError(f"orientation must be +1 or -1, got {self.d!r}")
        object.__setattr__(self, "d", int(self.d))

    @property
    def sigma(self):
        return np.diag(self.x)

    @property
    def sigma_cofactor(self):
        return np.diag(cofactor_diag(self.x))

    @property
    def rank(self):
        return int(np.count_nonzero(self.x))

    def components(self):
        """Rebuild ``(u, v, R) = (M g, N h, M diag(x) N^T)``."""
        return Components(u=self.M @ self.g, v=self.N @ self.h, R=(self.M * self.x) @ self.N.T)

    def to_dict(self):
        return {
            "x": self.x.tolist(),
            "M": self.M.tolist(),
            "N": self.N.tolist(),
            "g": self.g.tolist(),
            "h": self.h.tolist(),
            "d": self.d,
        }


def cofactor_diag(x):
    """Diagonal of the cofactor of ``diag(x)``: ``(x2 x3, x3 x1, x1 x2)``; broadcasts."""
    x = np.asarray(x, dtype=float)
    x1, x2, x3 = x[..., 0], x[..., 1], x[..., 2]
    return np.stack([x2 * x3, x3 * x1, x1 * x2], axis=-1)


def _sign_fix(col, *projections):
    """Sign making the first non-negligible projection positive, else the largest entry of ``col``."""
    for p in projections:
        if abs(p) > RANK_TOL:
            return -1.0 if p < 0 else 1.0
    k = np.argmax(np.abs(col))
    return -1.0 if col[k] < 0 else 1.0


def canonical_decompose(c):
    """Canonical form ``(x, M, N, g, h, d)`` of the Bloch components ``c``."""
    M, x, Nt = np.linalg.svd(c.R)
    N = Nt.T.copy()
    M = M.copy()
    x = x.copy()
    zero_tol = RANK_TOL * max(1.0, x[0])
    zero = x < zero_tol
    x[zero] = 0.0

    # anchor signs to u and v so that g and h are invariant under local rotations
    for i in range(3):
        gi, hi = M[:, i] @ c.u, N[:, i] @ c.v
        if zero[i]:
            M[:, i] *= _sign_fix(M[:, i], gi)
            N[:, i] *= _sign_fix(N[:, i], hi)
        else:
            s = _sign_fix(M[:, i], gi, hi)
            M[:, i] *= s
            N[:, i] *= s

    # order degenerate groups by their left singular vectors
    order = list(range(3))
    start = 0
    while start < 3:
        stop = start + 1
        while stop < 3 and abs(x[stop] - x[start]) <= zero_tol:
            stop += 1
        group = order[start:stop]
        group.sort(key=lambda i: tuple(-M[:, i]))
        order[start:stop] = group
        start = stop
    M, N, x = M[:, order], N[:, order], x[order]
    zero = x == 0.0

    d = 1 if np.linalg.det(M) * np.linalg.det(N) > 0 else -1
    if zero.any() and d == 1:
        last = int(np.flatnonzero(zero)[-1])
        N[:, last] *= -1
        d = -1
    return CanonicalForm(x=x, M=M, N=N, g=M.T @ c.u, h=N.T @ c.v, d=d)


def cofactor_svd(f):
    """Cofactor of ``R`` from its canonical form: ``d M diag(x2x3, x3x1, x1x2) N^T``."""
    return f.d * (f.M * cofactor_diag(f.x)) @ f.N.T


def reduced_lhs(x, g, h, d):
    """The three positivity left-hand sides in canonical variables.

    Arguments broadcast: ``x``, ``g``, ``h`` have a trailing axis of length 3
    and ``d`` is a scalar or array of +-1. Returns ``(lhs1, lhs2, lhs3)``.
    """
    x = np.asarray(x, dtype=float)
    g = np.asarray(g, dtype=float)
    h = np.asarray(h, dtype=float)
    xc = cofactor_diag(x)
    gg = np.sum(g * g, axis=-1)
    hh = np.sum(h * h, axis=-1)
    norm2 = 1 + gg + hh + np.sum(x * x, axis=-1)
    b2 = np.sum(g * x * h, axis=-1) - d * np.prod(x, axis=-1)
    lhs1 = 4 - norm2
    lhs2 = 2 * b2 - (norm2 - 2)
    lhs3 = (
        8 * b2
        + (norm2 - 2) ** 2
        + 8 * d * np.sum(g * xc * h, axis=-1)
        - 4 * (gg * hh + np.sum((x * g) ** 2, axis=-1) + np.sum((x * h) ** 2, axis=-1) + np.sum(xc * xc, axis=-1))
    )
    return lhs1, lhs2, lhs3


def reduced_positivity_lhs(f, tol=POSITIVITY_TOL):
    """Positivity report computed from ``(x, g, h, d)`` only."""
    return make_report(*(float(v) for v in reduced_lhs(f.x, f.g, f.h, f.d)), tol=tol)


def correlation_expectation(f, i, j):
    """``<(m_i . sigma) (x) (n_j . sigma)>`` for 1-based axis indices: ``x_i`` if ``i == j`` else 0."""
    for k in (i, j):
        if k not in (1, 2, 3):
            raise ValueError(f"axis index must be 1, 2 or 3, got {k!r}")
    return float(f.x[i - 1]) if i == j else 0.0


@dataclass(frozen=True, eq=False)
class SphereGeometry:
    """One qubit's Bloch vector and its three scaled correlation axes."""

    bloch_vector: np.ndarray
    axes: tuple  # ((index, vector), ...) with 1-based index

    def to_dict(self):
        return {
            "bloch": np.asarray(self.bloch_vector).tolist(),
            "axes": [{"i": i, "v": np.asarray(v).tolist()} for i, v in self.axes],
        }


def sphere_geometry(c, form=None):
    """Bloch-sphere pair: ``u`` with axes ``x_i m_i`` and ``v`` with axes ``x_i n_i``."""
    f = canonical_decompose(c) if form is None else form
    first = SphereGeometry(np.array(c.u), tuple((i + 1, f.x[i] * f.M[:, i]) for i in range(3)))
    second = SphereGeometry(np.array(c.v), tuple((i + 1, f.x[i] * f.N[:, i]) for i in range(3)))
    return first, second
