import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from blochmat.bloch import Components, bell_state, components_from_density, expectation, local_spin_observable, join, product_state
from blochmat.canonical import (
    CanonicalForm,
    canonical_decompose,
    cofactor_diag,
    cofactor_svd,
    correlation_expectation,
    reduced_lhs,
    reduced_positivity_lhs,
    sphere_geometry,
)
from blochmat.families import PURE_FRAME_M, PURE_FRAME_N, pure_family, random_rotation
from blochmat.positivity import cofactor3, positivity_lhs, positivity_terms
from helpers import ginibre, rng_for, seeds

SINGLET = bell_state("psi-")


def random_rank_matrix(rng, rank):
    x = np.sort(rng.random(3) * 2)[::-1]
    x[rank:] = 0
    return random_rotation(rng) @ np.diag(x) @ random_rotation(rng).T * rng.choice([-1, 1])


def check_form(c, f):
    assert np.all(np.diff(f.x) <= 0) and f.x[-1] >= 0
    np.testing.assert_allclose(f.M.T @ f.M, np.eye(3), atol=1e-10)
    np.testing.assert_allclose(f.N.T @ f.N, np.eye(3), atol=1e-10)
    assert abs(f.d - np.linalg.det(f.M) * np.linalg.det(f.N)) < 1e-10
    assert f.components().allclose(c, atol=1e-10)
    np.testing.assert_allclose(f.g, f.M.T @ c.u, atol=1e-10)
    np.testing.assert_allclose(f.h, f.N.T @ c.v, atol=1e-10)


def test_singlet_form():
    f = canonical_decompose(SINGLET)
    np.testing.assert_allclose(f.x, (1, 1, 1), atol=1e-15)
    assert f.d == -1
    check_form(SINGLET, f)


def test_product_form_prefers_negative_orientation():
    c = product_state([0, 0, 0.6], [0, 0, 0.8])
    f = canonical_decompose(c)
    np.testing.assert_allclose(f.x, (0.48, 0, 0), atol=1e-15)
    assert f.d == -1
    assert f.rank == 1
    check_form(c, f)


@pytest.mark.parametrize("rank", [0, 1, 2])
def test_rank_deficient_orientation_is_negative(rng, rank):
    for _ in range(20):
        c = Components(rng.standard_normal(3) * 0.2, rng.standard_normal(3) * 0.2, random_rank_matrix(rng, rank))
        f = canonical_decompose(c)
        assert f.d == -1 and f.rank == rank
        check_form(c, f)


@settings(max_examples=100)
@given(seeds)
def test_full_rank_orientation_is_sign_of_det(seed):
    c = components_from_density(ginibre(seed))
    f = canonical_decompose(c)
    check_form(c, f)
    if f.rank == 3:
        assert f.d == np.sign(np.linalg.det(c.R))


def test_decompose_is_deterministic_and_sign_fixed(rng):
    c = components_from_density(ginibre(rng))
    f1, f2 = canonical_decompose(c), canonical_decompose(c)
    np.testing.assert_array_equal(f1.M, f2.M)
    np.testing.assert_array_equal(f1.N, f2.N)
    assert np.all(f1.g > 0)


def test_sign_falls_back_to_h_then_m(rng):
    R = np.diag([0.5, 0.3, 0.1])
    f = canonical_decompose(Components(np.zeros(3), np.array([0.0, -0.2, 0.0]), R))
    assert f.h[1] == pytest.approx(0.2)
    for i in (0, 2):
        col = f.M[:, i]
        assert col[np.argmax(np.abs(col))] > 0


def test_paired_sign_flip_preserves_orientation(rng):
    c = components_from_density(ginibre(rng))
    f = canonical_decompose(c)
    for i in range(3):
        flip = np.ones(3)
        flip[i] = -1
        M, N = f.M * flip, f.N * flip
        assert np.linalg.det(M) * np.linalg.det(N) == pytest.approx(f.d)
        np.testing.assert_allclose((M * f.x) @ N.T, c.R, atol=1e-12)


def test_form_validation():
    with pytest.raises(ValueError):
        CanonicalForm(np.zeros(3), np.eye(3), np.eye(3), np.zeros(3), np.zeros(3), 0)
    f = canonical_decompose(SINGLET)
    with pytest.raises(ValueError):
        f.x[0] = 2


def test_cofactor_svd_examples():
    f = canonical_decompose(Components(np.zeros(3), np.zeros(3), np.eye(3)))
    np.testing.assert_allclose(cofactor_svd(f), np.eye(3), atol=1e-15)
    f = canonical_decompose(Components(np.zeros(3), np.zeros(3), np.diag([2.0, 3.0, 0.0])))
    np.testing.assert_allclose(cofactor_svd(f), np.diag([0, 0, 6.0]), atol=1e-14)
    np.testing.assert_array_equal(cofactor_diag([2.0, 3.0, 5.0]), [15.0, 10.0, 6.0])


@pytest.mark.parametrize("rank", [0, 1, 2, 3])
def test_cofactor_svd_identity(rng, rank):
    for _ in range(50):
        R = random_rank_matrix(rng, rank)
        f = canonical_decompose(Components(np.zeros(3), np.zeros(3), R))
        assert np.linalg.norm(cofactor3(R) - cofactor_svd(f)) < 1e-10


def test_reduced_lhs_examples():
    zero = np.zeros(3)
    np.testing.assert_allclose(reduced_lhs((1, 1, 1), zero, zero, -1), (0, 0, 0), atol=1e-15)
    np.testing.assert_allclose(reduced_lhs((1, 1, 1), zero, zero, 1), (0, -4, -16), atol=1e-15)
    minus = np.array(reduced_lhs((0.4,) * 3, zero, zero, -1))
    plus = np.array(reduced_lhs((0.4,) * 3, zero, zero, 1))
    # x^3 = 0.064, |r|^2 = 1.48
    np.testing.assert_allclose(minus, (2.52, 0.648, 0.4752), atol=1e-12)
    np.testing.assert_allclose(plus, (2.52, 0.392, -0.5488), atol=1e-12)
    assert minus[2] - plus[2] == pytest.approx(16 * 0.064)


def test_reduced_lhs_broadcasts(rng):
    x = rng.random((5, 7, 3))
    g = rng.random((5, 7, 3)) * 0.3
    out = np.stack(reduced_lhs(x, g, np.zeros(3), -1), axis=-1)
    assert out.shape == (5, 7, 3)
    np.testing.assert_allclose(out[2, 3], reduced_lhs(x[2, 3], g[2, 3], np.zeros(3), -1))


@settings(max_examples=200)
@given(seeds, st.sampled_from(["ginibre", "scaled"]))
def test_reduced_matches_full(seed, kind):
    rng = rng_for(seed)
    if kind == "ginibre":
        c = components_from_density(ginibre(rng))
    else:
        c = Components(rng.standard_normal(3), rng.standard_normal(3), rng.standard_normal((3, 3)))
    f = canonical_decompose(c)
    np.testing.assert_allclose(reduced_positivity_lhs(f).lhs, positivity_lhs(c).lhs, atol=1e-9)
    t = positivity_terms(c)
    assert abs(t.uRv - f.g @ (f.x * f.h)) < 1e-10
    assert abs(t.detR - f.d * np.prod(f.x)) < 1e-10
    assert abs(t.uRcv - f.d * f.g @ (cofactor_diag(f.x) * f.h)) < 1e-10
    assert abs(t.uR2 - np.sum((f.x * f.g) ** 2)) < 1e-10
    assert abs(t.Rv2 - np.sum((f.x * f.h) ** 2)) < 1e-10
    assert abs(t.Rc2 - np.sum(cofactor_diag(f.x) ** 2)) < 1e-10


def test_correlation_expectation_examples():
    f = canonical_decompose(SINGLET)
    assert correlation_expectation(f, 1, 1) == 1
    assert correlation_expectation(f, 1, 2) == 0
    prod = canonical_decompose(product_state([0, 0, 0.6], [0, 0, 0.8]))
    assert correlation_expectation(prod, 1, 1) == pytest.approx(0.48)
    with pytest.raises(ValueError):
        correlation_expectation(f, 0, 1)


@settings(max_examples=30)
@given(seeds)
def test_correlation_expectation_oracle(seed):
    c = components_from_density(ginibre(seed))
    f = canonical_decompose(c)
    r = join(c)
    for i in range(1, 4):
        for j in range(1, 4):
            direct = expectation(r, local_spin_observable(f.M[:, i - 1], f.N[:, j - 1]))
            assert abs(direct - correlation_expectation(f, i, j)) < 1e-10


def test_sphere_geometry_singlet():
    first, second = sphere_geometry(SINGLET)
    assert not first.bloch_vector.any() and not second.bloch_vector.any()
    A = np.column_stack([v for _, v in first.axes])
    B = np.column_stack([v for _, v in second.axes])
    np.testing.assert_allclose(np.linalg.norm(A, axis=0), 1, atol=1e-15)
    np.testing.assert_allclose(np.linalg.norm(B, axis=0), 1, atol=1e-15)
    assert np.linalg.det(A) * np.linalg.det(B) == pytest.approx(-1)


def test_sphere_geometry_product():
    u, v = np.array([0, 0, 0.6]), np.array([0.8, 0, 0])
    first, second = sphere_geometry(product_state(u, v))
    nonzero = [(i, vec) for i, vec in first.axes if np.linalg.norm(vec) > 0]
    assert len(nonzero) == 1
    assert np.linalg.norm(np.cross(nonzero[0][1], u)) < 1e-15
    nonzero = [(i, vec) for i, vec in second.axes if np.linalg.norm(vec) > 0]
    assert len(nonzero) == 1 and np.linalg.norm(np.cross(nonzero[0][1], v)) < 1e-15


def test_sphere_geometry_pure_quarter():
    c = pure_family(np.pi / 4, PURE_FRAME_M, PURE_FRAME_N)
    first, second = sphere_geometry(c)
    for geom in (first, second):
        lengths = [np.linalg.norm(v) for _, v in geom.axes]
        np.testing.assert_allclose(lengths, (1, np.sin(np.pi / 4), np.sin(np.pi / 4)), atol=1e-12)
        A = np.column_stack([v for _, v in geom.axes])
        gram = A.T @ A
        np.testing.assert_allclose(gram - np.diag(np.diag(gram)), 0, atol=1e-10)


def test_sphere_geometry_json_shape():
    first, _ = sphere_geometry(SINGLET)
    d = first.to_dict()
    assert set(d) == {"bloch", "axes"}
    assert [a["i"] for a in d["axes"]] == [1, 2, 3]
    assert all(len(a["v"]) == 3 for a in d["axes"])
