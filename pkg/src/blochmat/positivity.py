"""Physicality of a two-qubit state from its Bloch components.

Three polynomial inequalities in ``(u, v, R)`` are together equivalent to
``rho >= 0``. An independent route, :func:`eigenvalue_oracle`, forms the
power sums ``Tr rho^n`` by matrix multiplication, converts them to the
characteristic-polynomial coefficients with Newton's identities and applies
Descartes' rule of signs. The two routes agree up to fixed positive factors::

    lhs1 = 8 a2,   lhs2 = 16 a3,   lhs3 = 256 a4
"""

from dataclasses import asdict, dataclass

import numpy as np

from .algebra import levi_civita3
from .bloch import Components, bloch_norm2, check_bloch_matrix, check_density, split

POSITIVITY_TOL = 1e-9


@dataclass(frozen=True)
class PositivityReport:
    lhs1: float
    lhs2: float
    lhs3: float
    is_positive: bool
    slack: float

    @property
    def lhs(self):
        return (self.lhs1, self.lhs2, self.lhs3)

    def to_dict(self):
        return asdict(self)


def make_report(lhs1, lhs2, lhs3, tol=POSITIVITY_TOL):
    slack = min(lhs1, lhs2, lhs3)
    return PositivityReport(float(lhs1), float(lhs2), float(lhs3), bool(slack >= -tol), float(slack))


def cofactor3(R):
    """Cofactor matrix: entry (i, j) is ``(-1)^(i+j)`` times the (i, j) minor of ``R``."""
    eps = levi_civita3()
    R = np.asarray(R, dtype=float)
    return 0.5 * np.einsum("pqi,rsj,pr,qs->ij", eps, eps, R, R)


@dataclass(frozen=True)
class PositivityTerms:
    """The rotation-invariant scalars from which the three inequalities are built."""

    norm2: float  # |r|^2
    uRv: float
    detR: float
    uRcv: float  # u^T cof(R) v
    uu_vv: float  # |u|^2 |v|^2
    uR2: float  # |u^T R|^2
    Rv2: float  # |R v|^2
    Rc2: float  # |cof(R)|^2


def positivity_terms(c):
    Rc = cofactor3(c.R)
    return PositivityTerms(
        norm2=float(bloch_norm2(c)),
        uRv=float(c.u @ c.R @ c.v),
        detR=float(np.linalg.det(c.R)),
        uRcv=float(c.u @ Rc @ c.v),
        uu_vv=float((c.u @ c.u) * (c.v @ c.v)),
        uR2=float(np.sum((c.u @ c.R) ** 2)),
        Rv2=float(np.sum((c.R @ c.v) ** 2)),
        Rc2=float(np.sum(Rc * Rc)),
    )


def lhs_from_terms(t):
    b2 = t.uRv - t.detR
    lhs1 = 4 - t.norm2
    lhs2 = 2 * b2 - (t.norm2 - 2)
    lhs3 = 8 * b2 + (t.norm2 - 2) ** 2 + 8 * t.uRcv - 4 * (t.uu_vv + t.uR2 + t.Rv2 + t.Rc2)
    return lhs1, lhs2, lhs3


def positivity_lhs(c, tol=POSITIVITY_TOL):
    """Left-hand sides of the three positivity inequalities; all ``>= 0`` iff ``rho >= 0``."""
    return make_report(*lhs_from_terms(positivity_terms(c)), tol=tol)


def is_physical(c, tol=POSITIVITY_TOL):
    return positivity_lhs(c, tol).is_positive


def trace_powers(r):
    """``(Tr rho^2, Tr rho^3, Tr rho^4)`` from the Bloch matrix ``r``."""
    c = r if isinstance(r, Components) else split(check_bloch_matrix(r))
    t = positivity_terms(c)
    t2 = t.norm2 / 4
    t3 = (3 * t.norm2 - 2 + 6 * t.uRv - 6 * t.detR) / 16
    t4 = (
        t.norm2**2
        + 4 * (t.norm2 - 1 + t.uu_vv + t.uR2 + t.Rv2 + t.Rc2 + 6 * t.uRv - 2 * t.uRcv - 6 * t.detR)
    ) / 64
    return t2, t3, t4


@dataclass(frozen=True)
class CharPolyCoeffs:
    a1: float
    a2: float
    a3: float
    a4: float

    def as_tuple(self):
        return (self.a1, self.a2, self.a3, self.a4)


def newton_coefficients(s1, s2, s3, s4):
    """Elementary symmetric polynomials from the power sums ``s_n``."""
    a1 = s1
    a2 = (s1**2 - s2) / 2
    a3 = (s1**3 - 3 * s1 * s2 + 2 * s3) / 6
    a4 = (s1**4 - 6 * s1**2 * s2 + 8 * s1 * s3 + 3 * s2**2 - 6 * s4) / 24
    return CharPolyCoeffs(a1, a2, a3, a4)


def eigenvalue_oracle(rho, tol=POSITIVITY_TOL):
    """Characteristic-polynomial coefficients of ``rho`` and whether all roots are >= 0.

    Works on the density matrix directly and never touches the Bloch
    representation. All eigenvalues are nonnegative iff every ``a_m >= 0``.
    """
    rho = check_density(rho)
    rho2 = rho @ rho
    s = [np.trace(rho).real, np.trace(rho2).real, np.trace(rho2 @ rho).real, np.trace(rho2 @ rho2).real]
    coeffs = newton_coefficients(*s)
    return coeffs, bool(min(coeffs.as_tuple()) >= -tol)


def lhs_from_coefficients(coeffs):
    """The three inequality left-hand sides implied by ``a2, a3, a4``."""
    return 8 * coeffs.a2, 16 * coeffs.a3, 256 * coeffs.a4

