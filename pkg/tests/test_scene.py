import numpy as np
import pytest
from hypothesis import given, strategies as st

from ipcsim import meshgen, presets
from ipcsim.scene import (AffineBody, DeformableMesh, Material, SceneError, abd_jacobian, abd_world_positions,
                          compute_masses, load_scene, parse_scene, read_obj, read_tet, save_scene, write_obj,
                          write_tet)

DROP = """
[config]
dt = 0.01

[ground]
height = 0.0

[[object]]
name = "cube"
role = "fem"
generate = { kind = "box", size = [0.2, 0.2, 0.2], res = [2, 2, 2], origin = [0.0, 0.05, 0.0] }
material = { youngs = 1e5, poisson = 0.3 }

[[object]]
name = "brick"
role = "abd"
generate = { kind = "box", size = [0.2, 0.1, 0.1], res = [2, 1, 1], origin = [0.5, 0.05, 0.0] }
velocity = [0.0, -1.0, 0.0]
"""


def parse(text):
    import tomli

    return parse_scene(tomli.loads(text))


def test_parse_fem_and_affine_objects():
    sc = parse(DROP)
    assert [m.name for m in sc.meshes] == ["cube"] and [b.name for b in sc.bodies] == ["brick"]
    assert sc.ground == 0.0 and sc.config.dt == 0.01
    b = sc.bodies[0]
    np.testing.assert_allclose(b.q[3:], np.eye(3).ravel())
    np.testing.assert_allclose(abd_world_positions(b, b.q), b.world_rest, atol=1e-14)
    np.testing.assert_allclose((b.node_mass[:, None] * b.rest_vertices).sum(0), 0.0, atol=1e-14)


@pytest.mark.parametrize("text, msg", [
    ("[config]\nsubdomain_size = 8\n[[object]]\ngenerate={kind='tet'}", "subdomain_size"),
    ("[config]\nbogus = 1\n[[object]]\ngenerate={kind='tet'}", "unknown config"),
    ("[[object]]\ngenerate={kind='sphere'}", "unknown generator"),
    ("[[object]]\nname='a'", "needs 'mesh' or 'generate'"),
    ("[[object]]\nrole='abd'\ngenerate={kind='grid'}", "tetrahedral"),
    ("[[object]]\nrole='ghost'\ngenerate={kind='tet'}", "role"),
    ("[[object]]\ngenerate={kind='tet'}\nmaterial={stiffness=1}", "unknown material"),
    ("[config]\ndt = -1\n[[object]]\ngenerate={kind='tet'}", "dt"),
    ("", "no objects"),
])
def test_invalid_scenes_raise_scene_error(text, msg):
    with pytest.raises(SceneError, match=msg):
        parse(text)


def test_inverted_and_degenerate_elements_are_rejected():
    v, t = meshgen.single_tet()
    with pytest.raises(SceneError, match="non-positive"):
        DeformableMesh("bad", v, t[:, [0, 2, 1, 3]])
    with pytest.raises(SceneError, match="out of range"):
        DeformableMesh("bad", v, t + 1)
    with pytest.raises(SceneError, match="zero rest area"):
        DeformableMesh("flat", np.array([[0, 0, 0], [1, 0, 0], [2, 0, 0]], float), triangles=[[0, 1, 2]])


def test_unreferenced_vertex_has_no_mass():
    v, t = meshgen.single_tet()
    m = DeformableMesh("m", np.vstack([v, [[5, 5, 5]]]), t)
    with pytest.raises(SceneError, match="no mass"):
        compute_masses([m], [])


@given(st.floats(0.1, 10.0), st.floats(100.0, 5000.0))
def test_lumped_mass_sums_to_total(size, rho):
    v, t = meshgen.box_tets((size, size, size), (2, 2, 2))
    m = DeformableMesh("box", v, t, material=Material(density=rho))
    (mass,), _ = compute_masses([m], [])
    assert mass.sum() == pytest.approx(rho * size ** 3, rel=1e-10)
    assert np.all(mass > 0)


@given(st.integers(0, 10_000))
def test_reduced_mass_is_spd(seed):
    rng = np.random.default_rng(seed)
    v, t = meshgen.box_tets(tuple(rng.uniform(0.05, 2.0, 3)), (2, 1, 2))
    b = AffineBody("b", v + rng.normal(size=3), t)
    w = np.linalg.eigvalsh(b.reduced_mass)
    assert w.min() > 0
    np.testing.assert_allclose(b.reduced_mass, b.reduced_mass.T)
    J = abd_jacobian(b.rest_vertices)
    np.testing.assert_allclose(np.einsum("n,nij,nik->jk", b.node_mass, J, J), b.reduced_mass, rtol=1e-12)


def test_jacobian_maps_q_to_positions():
    rng = np.random.default_rng(0)
    rest = rng.normal(size=(5, 3))
    q = rng.normal(size=12)
    np.testing.assert_allclose(abd_jacobian(rest) @ q, abd_world_positions(rest, q), atol=1e-14)


def test_mesh_files_roundtrip(tmp_path):
    v, t = meshgen.box_tets((1, 1, 1), (2, 1, 1))
    write_tet(tmp_path / "a.tet", v, t)
    v2, t2 = read_tet(tmp_path / "a.tet")
    np.testing.assert_allclose(v2, v)
    assert np.array_equal(t2, t)
    gv, gt = meshgen.grid_triangles((1, 1), (3, 3))
    write_obj(tmp_path / "g.obj", gv, gt)
    v3, t3 = read_obj(tmp_path / "g.obj")
    np.testing.assert_allclose(v3, gv)
    assert np.array_equal(t3, gt)


def test_save_and_load_scene(tmp_path):
    sc = parse(DROP)
    p = save_scene(sc, tmp_path / "scene" / "drop.toml")
    back = load_scene(p)
    assert back.ground == sc.ground
    np.testing.assert_allclose(back.meshes[0].vertices, sc.meshes[0].vertices)
    np.testing.assert_allclose(back.bodies[0].velocity, [0, -1, 0])
    assert back.config == sc.config


def test_missing_scene_file(tmp_path):
    with pytest.raises(SceneError):
        load_scene(tmp_path / "nope.toml")
    with pytest.raises(FileNotFoundError):
        presets.path("definitely_not_a_preset")


def test_presets_load():
    assert set(presets.names()) == {presets.CLOTH, presets.BEAM, presets.PAIR, presets.PAIR_ABD, presets.FIXTURE}
    cloth = presets.load(presets.CLOTH)
    assert len(cloth.meshes[0].pinned) == 2
    beam = presets.load(presets.BEAM)
    assert 4000 <= len(beam.meshes[0].vertices) <= 6000
    assert beam.meshes[0].material.youngs == 1e8
    pair, pair_abd = presets.load(presets.PAIR), presets.load(presets.PAIR_ABD)
    assert len(pair.meshes) == 2 and len(pair_abd.bodies) == 1
    assert sum(len(m.vertices) for m in pair.meshes) == pytest.approx(5000, rel=0.2)
    fixture = presets.load(presets.FIXTURE)
    assert len(fixture.meshes[0].vertices) == 16


def test_meshgen_surfaces():
    v, t = meshgen.box_tets((1, 1, 1), (2, 2, 2))
    f = meshgen.boundary_faces(t, v)
    assert len(f) == 6 * 2 * 4
    # outward orientation: signed volume from faces equals the box volume
    vol = np.einsum("ij,ij->i", v[f[:, 0]], np.cross(v[f[:, 1]], v[f[:, 2]])).sum() / 6
    assert vol == pytest.approx(1.0)
    sv, sf = meshgen.icosphere(1.0, 1)
    assert len(sf) == 80
    gv, gt = meshgen.grid_triangles((1, 1), (2, 2))
    assert len(meshgen.hinges(gt)) == len(meshgen.unique_edges(gt)) - 8


def test_minimal_scene_and_config_echo():
    sc = parse("[config]\nsubdomain_size = 16\ndhat_rel = 1e-3\ndt = 5e-3\n[ground]\nheight = 0.0\n"
               "[[object]]\ngenerate = { kind = 'tet' }")
    assert len(sc.meshes) == 1 and len(sc.bodies) == 0
    assert (sc.config.subdomain_size, sc.config.dhat_rel, sc.config.dt) == (16, 1e-3, 5e-3)


def test_affine_map_hand_cases():
    rest = np.array([[1.0, 1.0, 1.0], [0.3, -2.0, 0.5]])
    ident = np.concatenate([np.zeros(3), np.eye(3).ravel()])
    np.testing.assert_array_equal(abd_world_positions(rest, ident), rest)
    t = np.array([0.5, -1.0, 2.0])
    np.testing.assert_allclose(abd_world_positions(rest, np.concatenate([t, np.eye(3).ravel()])), rest + t)
    doubled = np.concatenate([np.zeros(3), 2 * np.eye(3).ravel()])
    np.testing.assert_allclose(abd_world_positions(rest[:1], doubled), [[2.0, 2.0, 2.0]])
    J = abd_jacobian(rest)
    np.testing.assert_array_equal(J[:, :, :3], np.broadcast_to(np.eye(3), (2, 3, 3)))


def test_single_node_body_is_rank_deficient():
    J = abd_jacobian(np.zeros((1, 3)))[0]
    M = J.T @ J
    np.testing.assert_array_equal(M[:3, :3], np.eye(3))
    assert not np.any(M[3:])
    from ipcsim.scene import reduced_mass

    with pytest.raises(SceneError, match="not SPD"):
        reduced_mass(np.zeros((1, 3)), np.ones(1))


def test_density_scales_masses():
    v, t = meshgen.box_tets((1, 1, 1), (2, 2, 2))
    (m1,), _ = compute_masses([DeformableMesh("a", v, t, material=Material(density=1000.0))], [])
    (m2,), _ = compute_masses([DeformableMesh("a", v, t, material=Material(density=2000.0))], [])
    assert m1.sum() == pytest.approx(1000.0)
    np.testing.assert_allclose(m2, 2 * m1, rtol=1e-14)
