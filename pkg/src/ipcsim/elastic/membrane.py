"""Membrane energies on linear triangles built from the directional stretch
invariant I5(F, n) = |F n|^2 with material directions n_u = [1, 0], n_v = [0, 1].

Includes the Baraff-Witkin style stretch term, its shear term, and the clamped
cubic strain-limiting penalty whose Hessian is assembled from its closed-form
eigensystem.
"""
from dataclasses import dataclass

import numpy as np

from .common import ElementEnergy, project_psd, scatter_F_to_x

SQRT_FLOOR = 1e-6  # floor on sqrt(I5) for collapsed directions


@dataclass
class MembraneDeformation:
    F: np.ndarray  # (n, 3, 2)
    I5u: np.ndarray
    I5v: np.ndarray
    aT: np.ndarray  # area * thickness
    coef: np.ndarray  # (n, 3, 2) dF/dx coefficients per triangle node


def membrane_deformation(tri_world, inv_rest, aT=1.0):
    tri_world = np.asarray(tri_world, float).reshape(-1, 3, 3)
    inv_rest = np.asarray(inv_rest, float).reshape(-1, 2, 2)
    Ds = np.stack([tri_world[:, 1] - tri_world[:, 0], tri_world[:, 2] - tri_world[:, 0]], axis=2)
    F = Ds @ inv_rest
    coef = np.empty((len(F), 3, 2))
    coef[:, 1] = inv_rest[:, 0]
    coef[:, 2] = inv_rest[:, 1]
    coef[:, 0] = -(inv_rest[:, 0] + inv_rest[:, 1])
    I5u = np.einsum("ni,ni->n", F[:, :, 0], F[:, :, 0])
    I5v = np.einsum("ni,ni->n", F[:, :, 1], F[:, :, 1])
    aT = np.broadcast_to(np.asarray(aT, float), (len(F),)).copy()
    return MembraneDeformation(F, I5u, I5v, aT, coef)


def _blockdiag(Hu, Hv):
    n = len(Hu)
    H = np.zeros((n, 2, 3, 2, 3))
    H[:, 0, :, 0, :] = Hu
    H[:, 1, :, 1, :] = Hv
    return H


def cubic_sl_F(F, I5u=None, I5v=None):
    """Cubic strain-limit value, gradient (n, 2, 3) and Hessian (n, 2, 3, 2, 3)
    w.r.t. the columns of F, for unit stiffness and unit volume weight."""
    n = len(F)
    val = np.zeros(n)
    g = np.zeros((n, 2, 3))
    Hs = []
    for col, I5 in enumerate((I5u, I5v)):
        f = F[:, :, col]
        I5 = np.einsum("ni,ni->n", f, f) if I5 is None else I5
        s = np.sqrt(I5)
        act = s > 1.0
        ex = np.where(act, s - 1.0, 0.0)
        ss = np.where(act, s, 1.0)
        val += ex ** 3
        g[:, col] = (3.0 * ex ** 2 / ss)[:, None] * f
        # 3(1 - 1/s)(s - 1) I + 3(I5 - 1)/I5^{3/2} f f^T
        a = 3.0 * (1.0 - 1.0 / ss) * ex
        b = np.where(act, 3.0 * (I5 - 1.0) / ss ** 3, 0.0)
        Hs.append(a[:, None, None] * np.eye(3) + b[:, None, None] * np.einsum("ni,nj->nij", f, f))
    return val, g, _blockdiag(*Hs)


def cubic_sl_eigenvalues(I5):
    """Closed-form eigenvalues (e1, e2, e3) of one active direction."""
    s = np.sqrt(np.asarray(I5, float))
    act = s > 1.0
    e1 = np.where(act, 6.0 * (s - 1.0), 0.0)
    e23 = np.where(act, 3.0 * (1.0 / np.where(act, s, 1.0) + s - 2.0), 0.0)
    return e1, e23, e23


def cubic_sl(defm: MembraneDeformation, stiffness):
    """Clamped cubic penalty stiffness * aT * sum max(sqrt(I5) - 1, 0)^3.

    Convex whenever active, so the Hessian needs no projection.
    """
    w = np.asarray(stiffness, float) * defm.aT
    val, gF, HF = cubic_sl_F(defm.F, defm.I5u, defm.I5v)
    g, H = scatter_F_to_x(defm.coef, gF, HF, 3)
    return ElementEnergy(w * val, w[:, None, None] * g, w[:, None, None] * H)


def fbw_stretch_F(F, project=True):
    n = len(F)
    val = np.zeros(n)
    g = np.zeros((n, 2, 3))
    Hs = []
    flagged = np.zeros(n, bool)
    for col in range(2):
        f = F[:, :, col]
        I5 = np.einsum("ni,ni->n", f, f)
        collapsed = I5 <= SQRT_FLOOR ** 2
        flagged |= collapsed
        s = np.maximum(np.sqrt(I5), SQRT_FLOOR)
        val += (np.sqrt(I5) - 1.0) ** 2
        g[:, col] = (2.0 * (1.0 - 1.0 / s))[:, None] * f
        fh = f / s[:, None]
        ffT = np.einsum("ni,nj->nij", fh, fh)
        e23 = 2.0 * (1.0 - 1.0 / s)
        if project:
            e23 = np.maximum(e23, 0.0)
        # eigenvalue 2 along f, e23 on its orthogonal complement
        Hs.append(2.0 * ffT + e23[:, None, None] * (np.eye(3) - ffT))
    return val, g, _blockdiag(*Hs), flagged


def fbw_membrane(defm: MembraneDeformation, stiffness, project=True):
    """Stretch term stiffness * aT * sum (sqrt(I5) - 1)^2 with an eigen-clamped Hessian."""
    w = np.asarray(stiffness, float) * defm.aT
    val, gF, HF, flagged = fbw_stretch_F(defm.F, project)
    g, H = scatter_F_to_x(defm.coef, gF, HF, 3)
    return ElementEnergy(w * val, w[:, None, None] * g, w[:, None, None] * H, flagged)


def shear_F(F):
    f0, f1 = F[:, :, 0], F[:, :, 1]
    c = np.einsum("ni,ni->n", f0, f1)
    g = np.stack([2.0 * c[:, None] * f1, 2.0 * c[:, None] * f0], axis=1)
    v = np.concatenate([f1, f0], axis=1)
    H = 2.0 * np.einsum("ni,nj->nij", v, v)
    H[:, :3, 3:] += 2.0 * c[:, None, None] * np.eye(3)
    H[:, 3:, :3] += 2.0 * c[:, None, None] * np.eye(3)
    return c ** 2, g, H


def shear_energy(defm: MembraneDeformation, stiffness, project=True):
    """stiffness * aT * (n_u^T F^T F n_v)^2."""
    w = np.asarray(stiffness, float) * defm.aT
    val, gF, HF = shear_F(defm.F)
    if project:
        HF = project_psd(HF)
    g, H = scatter_F_to_x(defm.coef, gF, HF.reshape(-1, 2, 3, 2, 3), 3)
    return ElementEnergy(w * val, w[:, None, None] * g, w[:, None, None] * H)


def principal_stretches(F):
    """Singular values of each 3x2 deformation gradient, largest first."""
    return np.linalg.svd(F, compute_uv=False)


def membrane_values(defm: MembraneDeformation):
    """Unit-stiffness stretch, shear and cubic strain-limit values weighted by aT."""
    su, sv = np.sqrt(defm.I5u), np.sqrt(defm.I5v)
    stretch = (su - 1.0) ** 2 + (sv - 1.0) ** 2
    c = np.einsum("ni,ni->n", defm.F[:, :, 0], defm.F[:, :, 1])
    sl = np.maximum(su - 1.0, 0.0) ** 3 + np.maximum(sv - 1.0, 0.0) ** 3
    return defm.aT * stretch, defm.aT * c * c, defm.aT * sl
