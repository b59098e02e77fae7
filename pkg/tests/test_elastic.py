import numpy as np
import pytest
from hypothesis import given, strategies as st

from ipcsim.elastic import (abd_orthogonality, abd_orthogonality_value, cubic_sl, cubic_sl_eigenvalues,
                            fbw_membrane, hinge_angle, hinge_bending, hinge_bending_value, hinge_rest,
                            membrane_deformation, membrane_values, principal_stretches, project_psd,
                            shear_energy, stable_neo_hookean, stable_neo_hookean_value, tet_deformation)
from ipcsim.elastic.common import rotation_matrix
from ipcsim.verify import _energy_cases, _random_rotation, fd_check, strain_limit_eigen

REST_TET = np.array([[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]], float)
REST_TRI = np.array([[0, 0, 0], [1, 0, 0], [0, 1, 0]], float)


@pytest.mark.parametrize("case", [c[0] for c in _energy_cases(np.random.default_rng(0), 1)])
def test_derivatives_match_finite_differences(case):
    name, fn, x, h = next(c for c in _energy_cases(np.random.default_rng(7), 16) if c[0] == case)
    eg, eh = fd_check(fn, x, h)
    assert eg <= 1e-4, f"{name} gradient"
    assert eh <= 1e-3, f"{name} hessian"


def _tets(F, offset=np.zeros(3)):
    return np.einsum("nij,kj->nki", F, REST_TET) + offset


def test_neo_hookean_rest_is_stationary():
    inv = np.eye(3)[None]
    e = stable_neo_hookean(REST_TET[None], inv, 1e5, 0.3, 1.0 / 6.0)
    np.testing.assert_allclose(e.gradient, 0.0, atol=1e-9)
    assert np.all(np.linalg.eigvalsh(e.hessian) > -1e-9)


@given(st.integers(0, 10_000))
def test_neo_hookean_is_rotation_invariant(seed):
    rng = np.random.default_rng(seed)
    F = np.eye(3) + 0.3 * rng.normal(size=(4, 3, 3))
    F[np.linalg.det(F) < 0.2] = 1.2 * np.eye(3)
    R = _random_rotation(rng, 4)
    inv = np.broadcast_to(np.eye(3), (4, 3, 3))
    a = stable_neo_hookean_value(_tets(F), inv, 1e5, 0.4, 1.0)
    b = stable_neo_hookean_value(_tets(R @ F, rng.normal(size=3)), inv, 1e5, 0.4, 1.0)
    np.testing.assert_allclose(a, b, rtol=1e-10, atol=1e-10)


def test_neo_hookean_value_function_agrees():
    rng = np.random.default_rng(3)
    F = np.eye(3) + 0.2 * rng.normal(size=(10, 3, 3))
    inv = np.broadcast_to(np.eye(3), (10, 3, 3))
    Y = rng.uniform(1e4, 1e6, 10)
    e = stable_neo_hookean(_tets(F), inv, Y, 0.3, 0.5)
    np.testing.assert_allclose(e.value, stable_neo_hookean_value(_tets(F), inv, Y, 0.3, 0.5), rtol=1e-12)


def test_neo_hookean_survives_inversion():
    F = np.diag([1.0, 1.0, -0.5])[None]
    e = stable_neo_hookean(_tets(F), np.eye(3)[None], 1e5, 0.3, 1.0)
    assert np.isfinite(e.value).all() and np.isfinite(e.hessian).all()
    assert np.linalg.eigvalsh(e.hessian).min() >= -1e-6 * np.abs(e.hessian).max()


def test_tet_deformation_identity():
    F, _ = tet_deformation(REST_TET[None], np.eye(3)[None])
    np.testing.assert_allclose(F[0], np.eye(3))


@given(st.integers(0, 10_000))
def test_projected_hessians_are_psd(seed):
    rng = np.random.default_rng(seed)
    H = project_psd(rng.normal(size=(5, 12, 12)))
    assert np.linalg.eigvalsh(H).min() >= -1e-10
    dm = membrane_deformation(np.einsum("nij,kj->nki", rng.normal(size=(6, 3, 2)), REST_TRI[:, :2]),
                              np.broadcast_to(np.eye(2), (6, 2, 2)), 0.5)
    for e in (fbw_membrane(dm, 1e3), shear_energy(dm, 1e3), cubic_sl(dm, 1e5)):
        w = np.linalg.eigvalsh(e.hessian)
        assert w.min() >= -1e-9 * max(np.abs(w).max(), 1.0)


def test_membrane_energies_vanish_at_rest():
    dm = membrane_deformation(REST_TRI[None], np.eye(2)[None], 0.5)
    for e in (fbw_membrane(dm, 1e3), shear_energy(dm, 1e3), cubic_sl(dm, 1e5)):
        assert e.total == pytest.approx(0.0, abs=1e-14)
        np.testing.assert_allclose(e.gradient, 0.0, atol=1e-12)
    assert all(np.allclose(v, 0.0) for v in membrane_values(dm))


def test_strain_limit_is_inactive_below_rest_length():
    F = np.array([[[0.9, 0.0], [0.0, 1.0], [0.0, 0.0]]])
    tri = np.einsum("nij,kj->nki", F, REST_TRI[:, :2])
    dm = membrane_deformation(tri, np.eye(2)[None])
    e = cubic_sl(dm, 1e6)
    assert e.total == 0.0
    assert not np.any(e.hessian)


def test_strain_limit_eigenvalues_closed_form():
    gap, lo = strain_limit_eigen(200, seed=5)
    assert gap <= 1e-8
    assert lo >= 0.0
    lam = np.stack(cubic_sl_eigenvalues(np.array([1.0, 1.44, 4.0])), 1)
    assert np.all(lam[0] == 0.0)
    assert np.all(lam[1:] >= 0.0)


def test_strain_limit_cubic_growth():
    vals = []
    for s in (1.1, 1.2):
        tri = np.array([[0, 0, 0], [s, 0, 0], [0, 1, 0]], float)
        vals.append(cubic_sl(membrane_deformation(tri[None], np.eye(2)[None]), 1.0).total)
    assert vals[1] / vals[0] == pytest.approx(8.0, rel=1e-9)


def test_principal_stretches_of_rotated_stretch():
    R = rotation_matrix(np.array([0.3, 1.0, -0.2]), 0.7)
    F = (R[:, :2] @ np.diag([1.3, 0.9]))[None]
    np.testing.assert_allclose(principal_stretches(F)[0], [1.3, 0.9], rtol=1e-12)


def test_hinge_rest_angle_and_energy():
    flat = np.array([[0, 0, 0], [1, 0, 0], [0.5, 1, 0], [0.5, -1, 0]], float)
    theta, w = hinge_rest(flat[None])
    assert theta[0] == pytest.approx(0.0, abs=1e-12)
    assert w[0] == pytest.approx(3.0 / 1.0)
    e = hinge_bending(flat[None], theta, 2.0, w)
    assert e.total == pytest.approx(0.0, abs=1e-20)
    folded = flat.copy()
    folded[3] = [0.5, -np.cos(0.4), np.sin(0.4)]
    a = hinge_angle(folded[None])[0]
    assert abs(a) == pytest.approx(0.4, rel=1e-10)
    assert hinge_bending_value(folded[None], theta, 2.0, w)[0] == pytest.approx(2.0 * 3.0 * 0.16, rel=1e-10)


def test_degenerate_hinge_is_flagged_and_zero():
    quad = np.array([[0, 0, 0], [1, 0, 0], [2, 0, 0], [0.5, -1, 0]], float)
    e = hinge_bending(quad[None], np.zeros(1), 1.0)
    assert e.flagged[0]
    assert e.total == 0.0 and not np.any(e.gradient)


@given(st.integers(0, 10_000))
def test_orthogonality_vanishes_on_rotations(seed):
    rng = np.random.default_rng(seed)
    R = _random_rotation(rng, 3)
    q = np.concatenate([rng.normal(size=(3, 3)), R.reshape(3, 9)], 1)
    e = abd_orthogonality(q, 1e8, 0.3)
    np.testing.assert_allclose(e.value, 0.0, atol=1e-12 * 1e8)
    np.testing.assert_allclose(e.gradient, 0.0, atol=1e-6)
    np.testing.assert_allclose(abd_orthogonality_value(q, 1e8, 0.3), e.value, atol=1e-6)
    assert not np.any(e.gradient[:, 0])  # translation carries no potential


def _tri(F):
    return np.einsum("nij,kj->nki", F, REST_TRI[:, :2])


def test_membrane_invariants_hand_cases():
    dm = membrane_deformation(REST_TRI[None], np.eye(2)[None])
    np.testing.assert_allclose(dm.F[0].T @ dm.F[0], np.eye(2))
    stretched = membrane_deformation(_tri(np.array([[[2.0, 0], [0, 1], [0, 0]]])), np.eye(2)[None])
    assert (stretched.I5u[0], stretched.I5v[0]) == (4.0, 1.0)
    R = rotation_matrix(np.array([1.0, 2.0, 3.0]), 1.1)
    rotated = membrane_deformation((REST_TRI @ R.T)[None], np.eye(2)[None])
    np.testing.assert_allclose([rotated.I5u[0], rotated.I5v[0]], [1.0, 1.0])


def test_strain_limit_hand_evaluation():
    from ipcsim.elastic.membrane import cubic_sl_F

    F = np.array([[[2.0, 0], [0, 1], [0, 0]]])
    val, g, H = cubic_sl_F(F)
    assert val[0] == pytest.approx(1.0)
    Hu = H.reshape(6, 6)[:3, :3]
    np.testing.assert_allclose(np.sort(np.linalg.eigvalsh(Hu)), [1.5, 1.5, 6.0])
    e1, e2, e3 = cubic_sl_eigenvalues(4.0)
    assert (float(e1), float(e2), float(e3)) == (6.0, 1.5, 1.5)


def test_fbw_hessian_eigenvalues_and_clamp():
    from ipcsim.elastic.membrane import fbw_stretch_F

    val, g, H, _ = fbw_stretch_F(np.array([[[1.0, 0], [0, 1], [0, 0]]]))
    assert val[0] == 0 and not np.any(g)
    np.testing.assert_allclose(np.sort(np.linalg.eigvalsh(H.reshape(6, 6))), [0, 0, 0, 0, 2, 2], atol=1e-14)
    half = np.array([[[0.5, 0], [0, 0.5], [0, 0]]])
    _, _, raw, _ = fbw_stretch_F(half, project=False)
    assert np.linalg.eigvalsh(raw.reshape(6, 6)).min() == pytest.approx(-2.0)
    _, _, clamped, _ = fbw_stretch_F(half)
    assert np.linalg.eigvalsh(clamped.reshape(6, 6)).min() >= 0.0


@given(st.integers(0, 10_000))
def test_fbw_clamp_equals_numerical_projection(seed):
    from ipcsim.elastic.membrane import fbw_stretch_F

    F = np.random.default_rng(seed).normal(size=(8, 3, 2))
    _, _, raw, _ = fbw_stretch_F(F, project=False)
    _, _, clamped, _ = fbw_stretch_F(F)
    np.testing.assert_allclose(clamped.reshape(8, 6, 6), project_psd(raw.reshape(8, 6, 6)), atol=1e-10)


def test_shear_vanishes_for_orthonormal_columns():
    R = rotation_matrix(np.array([0.2, 1.0, 0.4]), 0.8)
    dm = membrane_deformation((REST_TRI @ R.T)[None], np.eye(2)[None])
    e = shear_energy(dm, 1e3)
    assert e.total == pytest.approx(0.0, abs=1e-20)


def test_neo_hookean_uniform_scale():
    e = stable_neo_hookean(_tets(1.1 * np.eye(3)[None]), np.eye(3)[None], 1e5, 0.3, 1.0 / 6.0)
    assert e.value[0] > 0


def test_projection_is_idempotent():
    H = np.random.default_rng(4).normal(size=(6, 12, 12))
    once = project_psd(H)
    np.testing.assert_allclose(project_psd(once), once, atol=1e-12)


def test_orthogonality_hand_value():
    q = np.concatenate([np.zeros(3), 2 * np.eye(3).ravel()])
    assert abd_orthogonality(q, 3.0, 0.5).value[0] == pytest.approx(3.0 * 0.5 * 27)
    e = abd_orthogonality(np.concatenate([np.zeros(3), np.eye(3).ravel()]), 3.0, 0.5)
    assert e.value[0] == 0 and not np.any(e.gradient)
