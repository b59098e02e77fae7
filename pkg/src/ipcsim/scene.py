"""Scene description: meshes, affine bodies, configuration, masses and file I/O."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field, fields, replace
from pathlib import Path

import numpy as np
import tomli
import tomli_w

from . import meshgen

log = logging.getLogger(__name__)


class SceneError(ValueError):
    """Invalid scene input. Exit code 2 in the command-line runner."""


@dataclass
class Material:
    youngs: float = 1.0e6
    poisson: float = 0.3
    density: float = 1000.0
    membrane: float = 5.0e4  # stretching stiffness of the membrane term
    strain_limit: float = 5.0e6  # cubic strain-limit stiffness
    shear: float | None = None  # defaults to 0.3 * membrane
    bending: float = 0.0
    thickness: float = 1.0e-3
    ortho: float = 1.0e8  # affine-body orthogonality stiffness

    def __post_init__(self):
        if self.shear is None:
            self.shear = 0.3 * self.membrane

    @property
    def lame(self):
        Y, nu = self.youngs, self.poisson
        mu = Y / (2.0 * (1.0 + nu))
        lam = Y * nu / ((1.0 + nu) * (1.0 - 2.0 * nu))
        return mu, lam


def _tri_rest(x):
    """2x2 rest-edge matrices expressed in an in-plane orthonormal frame."""
    e0 = x[:, 1] - x[:, 0]
    e1 = x[:, 2] - x[:, 0]
    n = np.cross(e0, e1)
    area = 0.5 * np.linalg.norm(n, axis=1)
    u = e0 / np.maximum(np.linalg.norm(e0, axis=1), 1e-300)[:, None]
    nn = n / np.maximum(2.0 * area, 1e-300)[:, None]
    v = np.cross(nn, u)
    Dm = np.empty((len(x), 2, 2))
    Dm[:, 0, 0] = np.einsum("ij,ij->i", e0, u)
    Dm[:, 1, 0] = np.einsum("ij,ij->i", e0, v)
    Dm[:, 0, 1] = np.einsum("ij,ij->i", e1, u)
    Dm[:, 1, 1] = np.einsum("ij,ij->i", e1, v)
    return Dm, area


@dataclass
class DeformableMesh:
    name: str
    vertices: np.ndarray
    tets: np.ndarray = field(default_factory=lambda: np.zeros((0, 4), np.int64))
    triangles: np.ndarray = field(default_factory=lambda: np.zeros((0, 3), np.int64))
    material: Material = field(default_factory=Material)
    pinned: np.ndarray = field(default_factory=lambda: np.zeros(0, np.int64))
    pin_velocity: np.ndarray = field(default_factory=lambda: np.zeros(3))
    pin_angular_velocity: np.ndarray = field(default_factory=lambda: np.zeros(3))
    pin_center: np.ndarray = field(default_factory=lambda: np.zeros(3))
    velocity: np.ndarray = field(default_factory=lambda: np.zeros(3))
    source: str | None = None  # mesh file the vertices came from, if any

    def __post_init__(self):
        self.vertices = np.asarray(self.vertices, dtype=float).reshape(-1, 3)
        self.tets = np.asarray(self.tets, dtype=np.int64).reshape(-1, 4)
        self.triangles = np.asarray(self.triangles, dtype=np.int64).reshape(-1, 3)
        self.pinned = np.unique(np.asarray(self.pinned, dtype=np.int64))
        self.pin_velocity = np.asarray(self.pin_velocity, float)
        self.pin_angular_velocity = np.asarray(self.pin_angular_velocity, float)
        self.pin_center = np.asarray(self.pin_center, float)
        self.velocity = np.asarray(self.velocity, float)
        self.validate()
        self.precompute()

    def validate(self):
        n = len(self.vertices)
        for kind, arr in (("tet", self.tets), ("triangle", self.triangles)):
            bad = np.nonzero((arr < 0).any(1) | (arr >= n).any(1))[0]
            if len(bad):
                raise SceneError(f"{self.name}: {kind} {bad[0]} has index out of range")
        if len(self.pinned) and (self.pinned.min() < 0 or self.pinned.max() >= n):
            raise SceneError(f"{self.name}: pinned vertex index out of range")
        if len(self.tets) == 0 and len(self.triangles) == 0:
            raise SceneError(f"{self.name}: mesh has no elements")

    def precompute(self):
        x = self.vertices
        if len(self.tets):
            xt = x[self.tets]
            Dm = np.stack([xt[:, 1] - xt[:, 0], xt[:, 2] - xt[:, 0], xt[:, 3] - xt[:, 0]], axis=2)
            vol = np.linalg.det(Dm) / 6.0
            bad = np.nonzero(vol <= 1e-300)[0]
            if len(bad):
                raise SceneError(f"{self.name}: tet {bad[0]} has non-positive rest volume")
            self.tet_volume = vol
            self.tet_Dm_inv = np.linalg.inv(Dm)
            self.surface = meshgen.boundary_faces(self.tets, x)
        else:
            self.tet_volume = np.zeros(0)
            self.tet_Dm_inv = np.zeros((0, 3, 3))
            self.surface = self.triangles
        if len(self.triangles):
            Dm, area = _tri_rest(x[self.triangles])
            bad = np.nonzero(area <= 1e-14 * max(self.diagonal, 1e-300) ** 2)[0]
            if len(bad):
                raise SceneError(f"{self.name}: triangle {bad[0]} has zero rest area")
            self.tri_area = area
            self.tri_Dm_inv = np.linalg.inv(Dm)
            self.hinges = meshgen.hinges(self.triangles)
        else:
            self.tri_area = np.zeros(0)
            self.tri_Dm_inv = np.zeros((0, 2, 2))
            self.hinges = np.zeros((0, 4), np.int64)
        self.surface_edges = meshgen.unique_edges(self.surface)
        self.surface_vertices = np.unique(self.surface)

    @property
    def diagonal(self):
        return float(np.linalg.norm(self.vertices.max(0) - self.vertices.min(0)))

    @property
    def is_shell(self):
        return len(self.tets) == 0


@dataclass
class AffineBody:
    """Stiff body with 12 reduced coordinates q = [p, A row 0, A row 1, A row 2].

    ``rest_vertices`` are stored relative to the body's center of mass, so the
    initial coordinates are q = [center, I].
    """

    name: str
    world_rest: np.ndarray
    tets: np.ndarray
    material: Material = field(default_factory=Material)
    velocity: np.ndarray = field(default_factory=lambda: np.zeros(3))
    source: str | None = None

    def __post_init__(self):
        self.world_rest = np.asarray(self.world_rest, float).reshape(-1, 3)
        self.tets = np.asarray(self.tets, np.int64).reshape(-1, 4)
        self.velocity = np.asarray(self.velocity, float)
        helper = DeformableMesh(self.name, self.world_rest, tets=self.tets, material=self.material)
        self.volume = float(helper.tet_volume.sum())
        m = lumped_masses(helper)
        self.node_mass = m
        self.center = (m[:, None] * self.world_rest).sum(0) / m.sum()
        self.rest_vertices = self.world_rest - self.center
        self.surface_triangles = helper.surface
        self.surface_edges = helper.surface_edges
        self.surface_vertices = helper.surface_vertices
        self.q = np.concatenate([self.center, np.eye(3).ravel()])
        self.reduced_mass = reduced_mass(self.rest_vertices, m, self.name)


@dataclass
class SceneConfig:
    dt: float = 5e-3
    dhat_rel: float = 1e-3
    newton_tol_rel: float = 1e-2
    pcg_rel_tol: float = 1e-4
    pcg_max_iter: int = 10000
    friction_mu: float = 0.0
    static_friction_tol_rel: float = 1e-3
    gravity: tuple = (0.0, -9.81, 0.0)
    max_newton_per_step: int = 256
    subdomain_size: int = 16
    mas_max_levels: int = 4
    deterministic: bool = False
    preconditioner: str = "cemas"
    barrier_stiffness: float | None = None

    def __post_init__(self):
        self.gravity = tuple(float(g) for g in self.gravity)
        if not self.dhat_rel > 0:
            raise SceneError("dhat_rel must be positive")
        if not 0.0 < self.pcg_rel_tol < 1.0:
            raise SceneError("pcg_rel_tol must lie in (0, 1)")
        if self.subdomain_size not in (16, 32):
            raise SceneError("subdomain_size must be 16 or 32")
        if self.dt <= 0:
            raise SceneError("dt must be positive")


@dataclass
class Scene:
    meshes: list
    bodies: list
    config: SceneConfig
    ground: float | None = None  # height of the y-up ground plane

    @property
    def diagonal(self):
        pts = [m.vertices for m in self.meshes] + [b.world_rest for b in self.bodies]
        allp = np.concatenate(pts)
        return float(np.linalg.norm(allp.max(0) - allp.min(0)))

    def __iter__(self):
        return iter((self.meshes, self.bodies, self.config))


def abd_jacobian(rest):
    """3x12 map from q to the world position of a node with rest offset ``rest``.

    Accepts a single 3-vector or an (n, 3) array (returns (n, 3, 12)).
    """
    rest = np.asarray(rest, float)
    single = rest.ndim == 1
    rest = rest.reshape(-1, 3)
    J = np.zeros((len(rest), 3, 12))
    for k in range(3):
        J[:, k, k] = 1.0
        J[:, k, 3 + 3 * k:6 + 3 * k] = rest
    return J[0] if single else J


def abd_world_positions(body_or_rest, q):
    rest = body_or_rest.rest_vertices if isinstance(body_or_rest, AffineBody) else np.asarray(body_or_rest)
    q = np.asarray(q, float)
    return rest @ q[3:].reshape(3, 3).T + q[:3]


def reduced_mass(rest, node_mass, name="body"):
    J = abd_jacobian(np.asarray(rest).reshape(-1, 3))
    M = np.einsum("n,nki,nkj->ij", node_mass, J, J)
    try:
        np.linalg.cholesky(M)
        ev = np.linalg.eigvalsh(M)
        if ev[0] <= 1e-12 * ev[-1]:
            raise np.linalg.LinAlgError
    except np.linalg.LinAlgError:
        raise SceneError(f"{name}: reduced mass matrix is not SPD (degenerate body)") from None
    return M


def lumped_masses(mesh: DeformableMesh):
    m = np.zeros(len(mesh.vertices))
    rho = mesh.material.density
    if len(mesh.tets):
        np.add.at(m, mesh.tets.ravel(), np.repeat(rho * mesh.tet_volume / 4.0, 4))
    if len(mesh.triangles) and len(mesh.tets) == 0:
        w = rho * mesh.tri_area * mesh.material.thickness / 3.0
        np.add.at(m, mesh.triangles.ravel(), np.repeat(w, 3))
    return m


def compute_masses(meshes, bodies, densities=None):
    """Lumped node masses per mesh and reduced 12x12 mass per body.

    ``densities`` optionally overrides the material densities, one entry per
    mesh followed by one per body.
    """
    if densities is not None:
        densities = list(densities)
        meshes = [replace_density(m, d) for m, d in zip(meshes, densities[:len(meshes)])]
        bodies = [replace_density(b, d) for b, d in zip(bodies, densities[len(meshes):])]
    lumped = [lumped_masses(m) for m in meshes]
    for m, mm in zip(meshes, lumped):
        if np.any(mm <= 0):
            raise SceneError(f"{m.name}: vertex {int(np.argmin(mm))} has no mass (unreferenced vertex)")
    return lumped, [b.reduced_mass for b in bodies]


def replace_density(obj, rho):
    mat = replace(obj.material, density=float(rho))
    if isinstance(obj, AffineBody):
        return AffineBody(obj.name, obj.world_rest, obj.tets, mat, obj.velocity)
    return DeformableMesh(obj.name, obj.vertices, obj.tets, obj.triangles, mat, obj.pinned,
                          obj.pin_velocity, obj.pin_angular_velocity, obj.pin_center, obj.velocity)


# ---------------------------------------------------------------------------
# mesh files


def read_tet(path):
    with open(path) as fh:
        header = fh.readline().split()
        nv, nt = int(header[0]), int(header[1])
        rows = [line.split() for line in fh if line.strip()]
    if len(rows) != nv + nt or any(len(r) != 3 for r in rows[:nv]) or any(len(r) != 4 for r in rows[nv:]):
        raise SceneError(f"{path}: expected {nv} vertex rows of 3 and {nt} tet rows of 4")
    verts = np.array(rows[:nv], float).reshape(-1, 3)
    tets = np.array(rows[nv:], np.int64).reshape(-1, 4)
    return verts, tets


def write_tet(path, verts, tets):
    with open(path, "w") as fh:
        fh.write(f"{len(verts)} {len(tets)}\n")
        for v in verts:
            fh.write(" ".join(repr(float(c)) for c in v) + "\n")
        for t in tets:
            fh.write(" ".join(str(int(i)) for i in t) + "\n")


def read_obj(path):
    verts, faces = [], []
    with open(path) as fh:
        for line in fh:
            parts = line.split()
            if not parts:
                continue
            if parts[0] == "v":
                verts.append([float(c) for c in parts[1:4]])
            elif parts[0] == "f":
                idx = [int(p.split("/")[0]) - 1 for p in parts[1:]]
                for k in range(1, len(idx) - 1):
                    faces.append([idx[0], idx[k], idx[k + 1]])
    return np.array(verts, float).reshape(-1, 3), np.array(faces, np.int64).reshape(-1, 3)


def write_obj(path, verts, faces):
    with open(path, "w") as fh:
        for v in verts:
            fh.write("v " + " ".join(repr(float(c)) for c in v) + "\n")
        for f in faces:
            fh.write("f " + " ".join(str(int(i) + 1) for i in f) + "\n")


# ---------------------------------------------------------------------------
# scene files

_GENERATORS = {
    "box": lambda g: meshgen.box_tets(g.get("size", (1, 1, 1)), g.get("res", (1, 1, 1)), g.get("origin", (0, 0, 0))),
    "tet": lambda g: meshgen.single_tet(),
    "grid": lambda g: meshgen.grid_triangles(g.get("size", (1, 1)), g.get("res", (10, 10)),
                                             g.get("plane", "xy"), g.get("origin", (0, 0, 0))),
}


def _rotation(deg):
    rx, ry, rz = np.radians(deg)
    cx, sx, cy, sy, cz, sz = np.cos(rx), np.sin(rx), np.cos(ry), np.sin(ry), np.cos(rz), np.sin(rz)
    Rx = np.array([[1, 0, 0], [0, cx, -sx], [0, sx, cx]])
    Ry = np.array([[cy, 0, sy], [0, 1, 0], [-sy, 0, cy]])
    Rz = np.array([[cz, -sz, 0], [sz, cz, 0], [0, 0, 1]])
    return Rz @ Ry @ Rx


def _object_geometry(obj, base):
    if "mesh" in obj:
        path = base / obj["mesh"]
        if path.suffix == ".obj":
            verts, tris = read_obj(path)
            tets = np.zeros((0, 4), np.int64)
        else:
            verts, tets = read_tet(path)
            tris = np.zeros((0, 3), np.int64)
        source = str(obj["mesh"])
    elif "generate" in obj:
        gen = obj["generate"]
        kind = gen.get("kind")
        if kind not in _GENERATORS:
            raise SceneError(f"object {obj.get('name')}: unknown generator {kind!r}")
        verts, elems = _GENERATORS[kind](gen)
        if elems.shape[1] == 4:
            tets, tris = elems, np.zeros((0, 3), np.int64)
        else:
            tets, tris = np.zeros((0, 4), np.int64), elems
        source = None
    else:
        raise SceneError(f"object {obj.get('name')}: needs 'mesh' or 'generate'")
    verts = verts * float(obj.get("scale", 1.0))
    if "rotate" in obj:
        verts = verts @ _rotation(obj["rotate"]).T
    verts = verts + np.asarray(obj.get("translate", (0, 0, 0)), float)
    return verts, tets, tris, source


def _pinned(bc, verts):
    pinned = list(bc.get("pinned", []))
    boxes = bc.get("pin_box", [])
    for box in [boxes] if isinstance(boxes, dict) else boxes:
        lo = np.asarray(box["min"], float)
        hi = np.asarray(box["max"], float)
        inside = np.all((verts >= lo) & (verts <= hi), axis=1)
        pinned += np.nonzero(inside)[0].tolist()
    return np.array(pinned, np.int64)


def parse_scene(doc, base="."):
    base = Path(base)
    try:
        cfg_keys = {f.name for f in fields(SceneConfig)}
        raw = dict(doc.get("config", {}))
        unknown = set(raw) - cfg_keys
        if unknown:
            raise SceneError(f"unknown config keys: {sorted(unknown)}")
        config = SceneConfig(**raw)
        meshes, bodies = [], []
        mat_keys = {f.name for f in fields(Material)}
        for i, obj in enumerate(doc.get("object", [])):
            name = obj.get("name", f"object{i}")
            obj = dict(obj, name=name)
            verts, tets, tris, source = _object_geometry(obj, base)
            mat_raw = obj.get("material", {})
            if set(mat_raw) - mat_keys:
                raise SceneError(f"{name}: unknown material keys {sorted(set(mat_raw) - mat_keys)}")
            mat = Material(**mat_raw)
            role = obj.get("role", "fem")
            vel = obj.get("velocity", (0, 0, 0))
            if role == "abd":
                if len(tets) == 0:
                    raise SceneError(f"{name}: affine bodies need a tetrahedral mesh")
                bodies.append(AffineBody(name, verts, tets, mat, vel, source))
            elif role == "fem":
                bc = obj.get("boundary", {})
                meshes.append(DeformableMesh(
                    name, verts, tets, tris, mat, _pinned(bc, verts),
                    bc.get("pin_velocity", (0, 0, 0)), bc.get("pin_angular_velocity", (0, 0, 0)),
                    bc.get("pin_center", (0, 0, 0)), vel, source))
            else:
                raise SceneError(f"{name}: role must be 'fem' or 'abd', got {role!r}")
        ground = doc.get("ground", {}).get("height") if "ground" in doc else None
    except SceneError:
        raise
    except (KeyError, TypeError, ValueError, OSError) as exc:
        raise SceneError(f"scene parse failure: {exc}") from exc
    if not meshes and not bodies:
        raise SceneError("scene contains no objects")
    return Scene(meshes, bodies, config, None if ground is None else float(ground))


def load_scene(path):
    path = Path(path)
    try:
        doc = tomli.loads(path.read_text())
    except (OSError, tomli.TOMLDecodeError) as exc:
        raise SceneError(f"{path}: {exc}") from exc
    scene = parse_scene(doc, path.parent)
    log.info("loaded %s: %d meshes, %d bodies, l=%.4g", path, len(scene.meshes), len(scene.bodies), scene.diagonal)
    return scene


def save_scene(scene, path):
    """Write ``scene`` as a TOML file plus one mesh file per object."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    cfg = {f.name: getattr(scene.config, f.name) for f in fields(SceneConfig)
           if getattr(scene.config, f.name) is not None}
    cfg["gravity"] = list(cfg["gravity"])
    doc = {"config": cfg, "object": []}
    if scene.ground is not None:
        doc["ground"] = {"height": scene.ground}
    for m in scene.meshes:
        mat = {k: v for k, v in vars(m.material).items() if v is not None}
        entry = {"name": m.name, "role": "fem", "material": mat,
                 "velocity": m.velocity.tolist()}
        if m.is_shell:
            fname = f"{m.name}.obj"
            write_obj(path.parent / fname, m.vertices, m.triangles)
        else:
            fname = f"{m.name}.tet"
            write_tet(path.parent / fname, m.vertices, m.tets)
        entry["mesh"] = fname
        entry["boundary"] = {"pinned": m.pinned.tolist(), "pin_velocity": m.pin_velocity.tolist(),
                             "pin_angular_velocity": m.pin_angular_velocity.tolist(),
                             "pin_center": m.pin_center.tolist()}
        doc["object"].append(entry)
    for b in scene.bodies:
        fname = f"{b.name}.tet"
        write_tet(path.parent / fname, b.world_rest, b.tets)
        mat = {k: v for k, v in vars(b.material).items() if v is not None}
        doc["object"].append({"name": b.name, "role": "abd", "mesh": fname, "material": mat,
                              "velocity": b.velocity.tolist()})
    path.write_text(tomli_w.dumps(doc))
    return path
