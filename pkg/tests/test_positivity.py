import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from blochmat.bloch import Bell, Components, bell_state, components_from_density, components_to_density, join
from blochmat.errors import InvalidMatrixError
from blochmat.families import Ensemble, random_density, werner
from blochmat.positivity import (
    POSITIVITY_TOL,
    cofactor3,
    eigenvalue_oracle,
    is_physical,
    lhs_from_coefficients,
    newton_coefficients,
    positivity_lhs,
    positivity_terms,
    trace_powers,
)
from helpers import ginibre, haar_unitary, indefinite_hermitian, min_eig, rng_for, seeds

MAX_MIXED = Components(np.zeros(3), np.zeros(3), np.zeros((3, 3)))


def minor_cofactor(R):
    """Cofactors from explicit 2x2 minors."""
    out = np.empty((3, 3))
    for i in range(3):
        for j in range(3):
            sub = np.delete(np.delete(R, i, axis=0), j, axis=1)
            out[i, j] = (-1) ** (i + j) * np.linalg.det(sub)
    return out


def test_cofactor_examples():
    np.testing.assert_array_equal(cofactor3(np.eye(3)), np.eye(3))
    np.testing.assert_array_equal(cofactor3(np.diag([2.0, 3.0, 5.0])), np.diag([15.0, 10.0, 6.0]))


@given(seeds)
def test_cofactor_identities(seed):
    R = rng_for(seed).standard_normal((3, 3))
    C = cofactor3(R)
    scale = max(1.0, abs(np.linalg.det(R)))
    np.testing.assert_allclose(C, minor_cofactor(R), atol=1e-12 * scale)
    np.testing.assert_allclose(R @ C.T, np.linalg.det(R) * np.eye(3), atol=1e-12 * scale)
    np.testing.assert_allclose(C.T @ R, np.linalg.det(R) * np.eye(3), atol=1e-12 * scale)


def test_trace_powers_examples():
    np.testing.assert_allclose(trace_powers(MAX_MIXED), (1 / 4, 1 / 16, 1 / 64), atol=1e-15)
    for which in Bell:
        np.testing.assert_allclose(trace_powers(bell_state(which)), (1, 1, 1), atol=1e-14)
        np.testing.assert_allclose(trace_powers(join(bell_state(which))), (1, 1, 1), atol=1e-14)


def _direct_powers(rho):
    p2 = rho @ rho
    return np.trace(p2).real, np.trace(p2 @ rho).real, np.trace(p2 @ p2).real


def test_trace_powers_werner_half():
    c = werner(0.5)
    np.testing.assert_allclose(trace_powers(c), _direct_powers(components_to_density(c)), atol=1e-14)


@settings(max_examples=60)
@given(seeds, st.sampled_from(["ginibre", "indefinite"]))
def test_trace_powers_match_direct(seed, kind):
    rng = rng_for(seed)
    rho = ginibre(rng) if kind == "ginibre" else indefinite_hermitian(rng, 0.3)
    np.testing.assert_allclose(trace_powers(components_from_density(rho)), _direct_powers(rho), atol=1e-10)


def test_lhs_examples():
    for which in Bell:
        np.testing.assert_allclose(positivity_lhs(bell_state(which)).lhs, (0, 0, 0), atol=1e-12)
    report = positivity_lhs(MAX_MIXED)
    assert report.lhs == (3.0, 1.0, 1.0)
    assert report.is_positive and report.slack == 1.0
    over = positivity_lhs(Components(np.zeros(3), np.zeros(3), -1.5 * np.eye(3)))
    assert over.lhs1 == pytest.approx(4 - (1 + 6.75))
    assert not over.is_positive


def test_report_serialization():
    d = positivity_lhs(MAX_MIXED).to_dict()
    assert d == {"lhs1": 3.0, "lhs2": 1.0, "lhs3": 1.0, "is_positive": True, "slack": 1.0}


def test_oracle_examples():
    coeffs, positive = eigenvalue_oracle(np.eye(4) / 4)
    np.testing.assert_allclose(coeffs.as_tuple(), (1, 3 / 8, 1 / 16, 1 / 256), atol=1e-15)
    assert positive
    coeffs, positive = eigenvalue_oracle(np.diag([0.5, 0.5, 0.5, -0.5]))
    assert coeffs.a4 < 0 and not positive
    coeffs, positive = eigenvalue_oracle(np.diag([1.0, 0, 0, 0]))
    assert coeffs.as_tuple()[1:] == (0, 0, 0) and positive


def test_oracle_rejects_non_hermitian():
    bad = np.eye(4, dtype=complex) / 4
    bad[0, 1] = 0.1
    with pytest.raises(InvalidMatrixError):
        eigenvalue_oracle(bad)


@given(st.lists(st.floats(-2, 2), min_size=4, max_size=4))
def test_newton_matches_elementary_symmetric(lams):
    lams = np.array(lams)
    s = [np.sum(lams**n) for n in range(1, 5)]
    expected = np.poly(lams)[1:] * np.array([-1, 1, -1, 1])
    np.testing.assert_allclose(newton_coefficients(*s).as_tuple(), expected, atol=1e-9)


@settings(max_examples=100)
@given(seeds, st.sampled_from(["ginibre", "indefinite"]))
def test_lhs_are_scaled_coefficients(seed, kind):
    rng = rng_for(seed)
    rho = ginibre(rng) if kind == "ginibre" else indefinite_hermitian(rng, 0.3)
    coeffs, _ = eigenvalue_oracle(rho)
    assert abs(coeffs.a1 - 1) < 1e-10
    np.testing.assert_allclose(positivity_lhs(components_from_density(rho)).lhs, lhs_from_coefficients(coeffs), atol=1e-10)


@settings(max_examples=200)
@given(seeds, st.floats(0.02, 0.6))
def test_is_physical_matches_eigenvalues(seed, scale):
    rng = rng_for(seed)
    rho = indefinite_hermitian(rng, scale) if rng.random() < 0.5 else ginibre(rng)
    lam = min_eig(rho)
    if abs(lam) < 1e-8:
        return
    assert is_physical(components_from_density(rho)) == (lam > 0)
    assert eigenvalue_oracle(rho)[1] == (lam > 0)


@pytest.mark.parametrize("z,ok", [(1.0, True), (1.01, False), (-0.4, False), (-1 / 3, True), (0.0, True)])
def test_werner_range(z, ok):
    assert is_physical(werner(z)) is ok


@settings(max_examples=50)
@given(seeds)
def test_pure_states_saturate(seed):
    rho = random_density(Ensemble.HAAR_PURE, seed)
    c = components_from_density(rho)
    np.testing.assert_allclose(positivity_lhs(c).lhs, (0, 0, 0), atol=1e-9)
    assert abs(trace_powers(c)[0] - 1) < 1e-9


@settings(max_examples=50)
@given(seeds)
def test_mixed_states_do_not_saturate(seed):
    c = components_from_density(ginibre(seed))
    assert trace_powers(c)[0] < 1 - 1e-9
    assert max(positivity_lhs(c).lhs) > 1e-9


@settings(max_examples=50)
@given(seeds)
def test_terms_invariant_under_local_unitaries(seed):
    rng = rng_for(seed)
    rho = ginibre(rng)
    U = np.kron(haar_unitary(rng), haar_unitary(rng))
    t0 = positivity_terms(components_from_density(rho))
    t1 = positivity_terms(components_from_density(U @ rho @ U.conj().T))
    np.testing.assert_allclose(list(vars(t1).values()), list(vars(t0).values()), atol=1e-10)


def test_tolerance_is_respected():
    c = Components(np.zeros(3), np.zeros(3), -np.eye(3) * (1 + 1e-11))
    assert positivity_lhs(c).is_positive
    assert not positivity_lhs(c, tol=1e-12).is_positive
    assert POSITIVITY_TOL == 1e-9
