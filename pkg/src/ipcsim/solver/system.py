"""Global DOF layout, state vectors and topology shared by every solver stage.

Block DOFs: FEM node i is block i; affine body b owns the four blocks
n_fem + 4b .. n_fem + 4b + 3 holding [p, A row 0, A row 1, A row 2].
Contact geometry lives on "full nodes": all FEM nodes followed by the
surface vertices of every affine body.
"""
from dataclasses import dataclass

import numpy as np
import scipy.sparse as sps

from ..contact.broad_phase import SurfacePrimitives
from ..elastic.bending import hinge_rest
from ..elastic.common import rotation_matrix
from ..mas.partition import adjacency_from_elements
from ..meshgen import unique_edges
from ..scene import Scene, SceneError, compute_masses
from ..sparse.abd import NodeLayout


@dataclass
class SystemState:
    xS: np.ndarray  # (n_fem, 3)
    q: np.ndarray  # (n_bodies, 12)
    vS: np.ndarray
    vQ: np.ndarray
    xHat: np.ndarray
    qHat: np.ndarray
    lumpedMass: np.ndarray
    dt: float
    time: float = 0.0

    def __post_init__(self):
        if self.xS.shape != (len(self.lumpedMass), 3):
            raise ValueError("xS and lumpedMass disagree on the node count")
        if self.q.shape[1:] != (12,):
            raise ValueError("q must hold 12 coordinates per body")
        if np.any(self.lumpedMass <= 0):
            raise ValueError("lumped masses must be positive")

    def dofs(self):
        """Stacked (n_fem + 4 n_bodies, 3) block vector."""
        return np.concatenate([self.xS, self.q.reshape(-1, 3)])

    def copy(self):
        return SystemState(*(np.array(getattr(self, f)) for f in
                             ("xS", "q", "vS", "vQ", "xHat", "qHat", "lumpedMass")), self.dt, self.time)


class System:
    """Flattened scene: element arrays in global indices plus contact surfaces."""

    def __init__(self, scene: Scene):
        self.scene = scene
        cfg = scene.config
        self.config = cfg
        self.dt = cfg.dt
        self.diagonal = scene.diagonal
        self.dhat = cfg.dhat_rel * self.diagonal
        self.gravity = np.asarray(cfg.gravity, float)
        self.ground = scene.ground
        lumped, reduced = compute_masses(scene.meshes, scene.bodies)
        offs = np.cumsum([0] + [len(m.vertices) for m in scene.meshes])
        self.mesh_offsets = offs
        self.n_fem = int(offs[-1])
        self.n_bodies = len(scene.bodies)
        self.n_dof = self.n_fem + 4 * self.n_bodies
        self.body_dof = self.n_fem + 4 * np.arange(self.n_bodies)
        self.mass = np.concatenate(lumped) if lumped else np.zeros(0)
        self.reduced_mass = np.array(reduced).reshape(-1, 12, 12)
        self.x_rest = np.concatenate([m.vertices for m in scene.meshes]) if scene.meshes else np.zeros((0, 3))

        tets, tri, hng = [], [], []
        t_inv, t_vol, t_Y, t_nu = [], [], [], []
        s_inv, s_aT, s_mem, s_sl, s_shear = [], [], [], [], []
        h_rest, h_w, h_k = [], [], []
        surf_tris, pinned = [], []
        self.pin_groups = []
        for m, o in zip(scene.meshes, offs):
            mat = m.material
            if len(m.tets):
                tets.append(m.tets + o)
                t_inv.append(m.tet_Dm_inv)
                t_vol.append(m.tet_volume)
                t_Y.append(np.full(len(m.tets), mat.youngs))
                t_nu.append(np.full(len(m.tets), mat.poisson))
            if m.is_shell:
                tri.append(m.triangles + o)
                s_inv.append(m.tri_Dm_inv)
                s_aT.append(m.tri_area * mat.thickness)
                s_mem.append(np.full(len(m.triangles), mat.membrane))
                s_sl.append(np.full(len(m.triangles), mat.strain_limit))
                s_shear.append(np.full(len(m.triangles), mat.shear))
                if len(m.hinges) and mat.bending > 0:
                    theta, w = hinge_rest(m.vertices[m.hinges])
                    hng.append(m.hinges + o)
                    h_rest.append(theta)
                    h_w.append(w)
                    h_k.append(np.full(len(m.hinges), mat.bending))
            surf_tris.append(m.surface + o)
            if len(m.pinned):
                idx = m.pinned + o
                pinned.append(idx)
                self.pin_groups.append((idx, m.vertices[m.pinned].copy(), m.pin_velocity.copy(),
                                        m.pin_angular_velocity.copy(), m.pin_center.copy()))

        def cat(lst, shape):
            return np.concatenate(lst) if lst else np.zeros(shape)

        self.tets = cat(tets, (0, 4)).astype(np.int64)
        self.tet_inv = cat(t_inv, (0, 3, 3))
        self.tet_vol = cat(t_vol, (0,))
        self.tet_youngs = cat(t_Y, (0,))
        self.tet_poisson = cat(t_nu, (0,))
        self.tris = cat(tri, (0, 3)).astype(np.int64)
        self.tri_inv = cat(s_inv, (0, 2, 2))
        self.tri_aT = cat(s_aT, (0,))
        self.tri_membrane = cat(s_mem, (0,))
        self.tri_strain_limit = cat(s_sl, (0,))
        self.tri_shear = cat(s_shear, (0,))
        self.hinges = cat(hng, (0, 4)).astype(np.int64)
        self.hinge_rest = cat(h_rest, (0,))
        self.hinge_weight = cat(h_w, (0,))
        self.hinge_k = cat(h_k, (0,))
        self.pinned = np.zeros(self.n_fem, bool)
        if pinned:
            self.pinned[np.concatenate(pinned)] = True

        # affine bodies: full-node surface vertices
        b_node, b_rest, b_tris = [], [], []
        n_full = self.n_fem
        self.body_vertex_rest = []
        for b, body in enumerate(scene.bodies):
            sv = body.surface_vertices
            local = np.full(len(body.rest_vertices), -1)
            local[sv] = n_full + np.arange(len(sv))
            b_node.append(np.full(len(sv), b))
            b_rest.append(body.rest_vertices[sv])
            b_tris.append(local[body.surface_triangles])
            n_full += len(sv)
            self.body_vertex_rest.append(body.rest_vertices)
        self.n_full = n_full
        self.abd_body = cat(b_node, (0,)).astype(np.int64)
        self.abd_rest = cat(b_rest, (0, 3))
        body = np.concatenate([np.full(self.n_fem, -1), self.abd_body]).astype(np.int64)
        dof = np.concatenate([np.arange(self.n_fem), self.body_dof[self.abd_body]]).astype(np.int64)
        rest = np.concatenate([np.full((self.n_fem, 3), np.nan), self.abd_rest])
        self.layout = NodeLayout(body, dof, rest)
        all_tris = np.concatenate(surf_tris + b_tris).reshape(-1, 3).astype(np.int64)
        self.surface = SurfacePrimitives(np.unique(all_tris), unique_edges(all_tris), all_tris, body)
        if self.n_bodies:
            self.body_volume = np.array([b.volume for b in scene.bodies])
            self.body_ortho = np.array([b.material.ortho for b in scene.bodies])
        else:
            self.body_volume = np.zeros(0)
            self.body_ortho = np.zeros(0)
        node_masses = [self.mass] + [b.node_mass for b in scene.bodies]
        allm = np.concatenate(node_masses)
        self.mean_mass = float(allm.mean()) if len(allm) else 1.0
        self.base_adjacency = self._base_adjacency()
        self.groups = ([np.arange(o0, o1) for o0, o1 in zip(offs[:-1], offs[1:])]
                       + [d + np.arange(4) for d in self.body_dof])

    def _base_adjacency(self):
        blocks = [self.tets, self.tris, self.hinges]
        if self.n_bodies:
            blocks.append(self.body_dof[:, None] + np.arange(4)[None, :])
        return adjacency_from_elements(self.n_dof, blocks)

    def initial_state(self):
        sc = self.scene
        vS = np.concatenate([np.tile(m.velocity, (len(m.vertices), 1)) for m in sc.meshes]) if sc.meshes \
            else np.zeros((0, 3))
        q = np.array([b.q for b in sc.bodies]).reshape(-1, 12)
        vQ = np.zeros_like(q)
        for i, b in enumerate(sc.bodies):
            vQ[i, :3] = b.velocity
        vS[self.pinned] = 0.0
        if np.any(self.mass <= 0):
            raise SceneError("every FEM vertex needs mass")
        return SystemState(self.x_rest.copy(), q, vS, vQ, self.x_rest.copy(), q.copy(), self.mass.copy(), self.dt)

    # -- kinematics --------------------------------------------------------

    def full_positions(self, U):
        """Full-node positions from the block vector (linear in U)."""
        if self.n_bodies == 0:
            return U[:self.n_fem]
        d = self.body_dof[self.abd_body]
        A = np.stack([U[d + 1], U[d + 2], U[d + 3]], axis=1)
        xa = U[d] + np.einsum("nkj,nj->nk", A, self.abd_rest)
        return np.concatenate([U[:self.n_fem], xa])

    def pull_back_gradient(self, g_full):
        """Map full-node gradients to block DOFs (J^T g for affine vertices)."""
        G = np.zeros((self.n_dof, 3))
        G[:self.n_fem] = g_full[:self.n_fem]
        if self.n_bodies:
            ga = g_full[self.n_fem:]
            d = self.body_dof[self.abd_body]
            for k in range(3):
                np.add.at(G[:, k], d, ga[:, k])
                for j in range(3):
                    np.add.at(G[:, j], d + 1 + k, ga[:, k] * self.abd_rest[:, j])
        return G

    def body_vertex_displacement(self, D):
        """Max-norm displacement of any vertex of each body under block direction D."""
        out = np.zeros(self.n_bodies)
        for b, rest in enumerate(self.body_vertex_rest):
            d = self.body_dof[b]
            disp = D[d] + rest @ D[d + 1:d + 4].T
            out[b] = np.abs(disp).max()
        return out

    def pin_targets(self, t):
        """Scripted positions of pinned vertices at time t."""
        out = []
        for idx, x0, v, w, c in self.pin_groups:
            ang = np.linalg.norm(w) * t
            R = rotation_matrix(w, ang) if ang > 0 else np.eye(3)
            out.append((idx, (x0 - c) @ R.T + c + v * t))
        return out

    def dof_adjacency(self, rows, cols):
        """Symmetric block graph from stored (row, col) pairs."""
        off = rows != cols
        r, c = rows[off], cols[off]
        A = sps.coo_matrix((np.ones(2 * len(r)), (np.concatenate([r, c]), np.concatenate([c, r]))),
                           shape=(self.n_dof, self.n_dof)).tocsr()
        A.data[:] = 1.0
        return A
