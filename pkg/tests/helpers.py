"""Small programmatic scenes shared by the solver and CLI tests."""
import numpy as np

from ipcsim import meshgen
from ipcsim.scene import AffineBody, DeformableMesh, Material, Scene, SceneConfig


def box(name, size, res, origin, **mat):
    v, t = meshgen.box_tets(size, res, origin)
    return DeformableMesh(name, v, t, material=Material(**mat))


def scene(meshes=(), bodies=(), ground=None, **cfg):
    return Scene(list(meshes), list(bodies), SceneConfig(**cfg), ground)


def brick(name, size, origin, velocity=(0, 0, 0), **mat):
    v, t = meshgen.box_tets(size, (1, 1, 1), origin)
    return AffineBody(name, v, t, Material(**mat), velocity)


def drape_toml(res=6, tol=1e-2, pcg=1e-4):
    return f"""
[config]
dt = 0.01
dhat_rel = 1e-3
newton_tol_rel = {tol}
pcg_rel_tol = {pcg}

[ground]
height = 0.0

[[object]]
name = "cloth"
role = "fem"
generate = {{ kind = "grid", size = [0.4, 0.4], res = [{res}, {res}], plane = "xz", origin = [0.0, 0.1, 0.0] }}
material = {{ density = 200.0, membrane = 5e4, strain_limit = 5e6, thickness = 1e-3, bending = 1e-4 }}

[[object]]
name = "block"
role = "fem"
generate = {{ kind = "box", size = [0.15, 0.05, 0.15], res = [2, 1, 2], origin = [0.12, 0.0005, 0.12] }}
material = {{ youngs = 1e6, poisson = 0.3 }}
"""
