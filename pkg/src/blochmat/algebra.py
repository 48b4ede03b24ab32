"""Extended Pauli matrices, Dirac matrices and the structure tensors.

Index 0 denotes the identity and 1..3 the Pauli matrices. Every two-qubit
formula in the package is written against the tensors returned by
:func:`structure_tensors`, with ``theta`` and ``epsilon`` stored as small
integers so products of basis elements are exact.
"""

from functools import lru_cache

import numpy as np

_PAULI = (
    np.array([[1, 0], [0, 1]], dtype=complex),
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)
for _m in _PAULI:
    _m.setflags(write=False)


def _check_index(mu):
    if not isinstance(mu, (int, np.integer)) or not 0 <= mu <= 3:
        raise ValueError(f"Pauli index must be an integer in 0..3, got {mu!r}")
    return int(mu)


def pauli(mu):
    """Return the extended Pauli matrix ``sigma_mu`` (``pauli(0)`` is the identity)."""
    return _PAULI[_check_index(mu)].copy()


def dirac(mu, nu):
    """Return ``D_{mu,nu} = sigma_mu (x) sigma_nu``; ``mu`` acts on the first qubit."""
    return np.kron(_PAULI[_check_index(mu)], _PAULI[_check_index(nu)])


@lru_cache(maxsize=None)
def _dirac_basis():
    basis = np.array([[np.kron(a, b) for b in _PAULI] for a in _PAULI])
    basis.setflags(write=False)
    return basis


def dirac_basis():
    """All sixteen Dirac matrices as a ``(4, 4, 4, 4)`` array indexed ``[mu, nu]``."""
    return _dirac_basis()


@lru_cache(maxsize=None)
def _tensors():
    theta = np.zeros((4, 4, 4), dtype=np.int8)
    for a in range(4):
        theta[a, a, 0] = theta[a, 0, a] = theta[0, a, a] = 1
    epsilon = np.zeros((4, 4, 4), dtype=np.int8)
    for i, j, k in ((1, 2, 3), (2, 3, 1), (3, 1, 2)):
        epsilon[i, j, k] = 1
        epsilon[j, i, k] = -1
    theta.setflags(write=False)
    epsilon.setflags(write=False)
    return theta, epsilon


def structure_tensors():
    """Return ``(theta, epsilon)``, each an int8 array of shape ``(4, 4, 4)``.

    ``theta[a, b, c]`` is 1 when one index is 0 and the other two are equal;
    ``epsilon`` is the Levi-Civita symbol on 1..3, zero when any index is 0.
    Together they satisfy ``sigma_a sigma_b = (theta_abc + i epsilon_abc) sigma_c``.
    """
    return _tensors()


def levi_civita3():
    """Levi-Civita symbol on three spatial indices as a float ``(3, 3, 3)`` array."""
    return _tensors()[1][1:, 1:, 1:].astype(float)


def pauli_product_coeffs(alpha, beta):
    """Coefficients ``c_gamma`` with ``sigma_alpha sigma_beta = sum_gamma c_gamma sigma_gamma``."""
    theta, epsilon = _tensors()
    a, b = _check_index(alpha), _check_index(beta)
    return theta[a, b].astype(complex) + 1j * epsilon[a, b]
