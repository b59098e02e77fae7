import numpy as np

from ._hinge_gen import dihedral_angle
from .common import ElementEnergy, project_psd

DEGENERATE_TOL = 1e-12


def hinge_rest(quad_rest):
    """Rest angle and weight 3 |e|^2 / (A0 + A1) of each hinge."""
    x = np.asarray(quad_rest, float).reshape(-1, 4, 3)
    e = x[:, 1] - x[:, 0]
    a0 = 0.5 * np.linalg.norm(np.cross(e, x[:, 2] - x[:, 0]), axis=1)
    a1 = 0.5 * np.linalg.norm(np.cross(x[:, 3] - x[:, 0], e), axis=1)
    theta, _, _ = dihedral_angle(x[:, 0], x[:, 1], x[:, 2], x[:, 3])
    w = 3.0 * np.einsum("ni,ni->n", e, e) / np.maximum(a0 + a1, 1e-300)
    return theta, w


def hinge_bending(quad_world, rest_angle, stiffness, rest_weight=1.0, project=True):
    """stiffness * rest_weight * (theta - rest_angle)^2 over hinges (x0, x1 | x2, x3).

    Hinges whose wing triangles have collapsed contribute zero and are flagged.
    """
    x = np.asarray(quad_world, float).reshape(-1, 4, 3)
    n = len(x)
    e = x[:, 1] - x[:, 0]
    n0 = np.cross(e, x[:, 2] - x[:, 0])
    n1 = np.cross(x[:, 3] - x[:, 0], e)
    scale = np.einsum("ni,ni->n", e, e) ** 2 + 1e-300
    bad = (np.einsum("ni,ni->n", n0, n0) < DEGENERATE_TOL * scale) | \
          (np.einsum("ni,ni->n", n1, n1) < DEGENERATE_TOL * scale)
    k = np.broadcast_to(np.asarray(stiffness, float) * np.asarray(rest_weight, float), (n,))
    with np.errstate(invalid="ignore", divide="ignore"):
        theta, gt, ht = dihedral_angle(x[:, 0], x[:, 1], x[:, 2], x[:, 3])
    diff = np.angle(np.exp(1j * (theta - rest_angle)))
    diff = np.where(bad, 0.0, diff)
    k = np.where(bad, 0.0, k)
    gt = np.where(bad[:, None], 0.0, gt)
    ht = np.where(bad[:, None, None], 0.0, ht)
    val = k * diff ** 2
    g = (2.0 * k * diff)[:, None] * gt
    H = 2.0 * k[:, None, None] * (np.einsum("ni,nj->nij", gt, gt) + diff[:, None, None] * ht)
    if project:
        H = project_psd(H)
    return ElementEnergy(val, g.reshape(n, 4, 3), H, bad)


def hinge_angle(quad_world):
    """Signed dihedral angle of each hinge, matching the generated derivative kernel."""
    x = np.asarray(quad_world, float).reshape(-1, 4, 3)
    e = x[:, 1] - x[:, 0]
    n1 = np.cross(e, x[:, 2] - x[:, 0])
    n2 = np.cross(x[:, 3] - x[:, 0], e)
    eh = e / np.maximum(np.linalg.norm(e, axis=1), 1e-300)[:, None]
    return np.arctan2(np.einsum("ni,ni->n", np.cross(n1, n2), eh), np.einsum("ni,ni->n", n1, n2))


def hinge_bending_value(quad_world, rest_angle, stiffness, rest_weight=1.0):
    x = np.asarray(quad_world, float).reshape(-1, 4, 3)
    e = x[:, 1] - x[:, 0]
    n0 = np.cross(e, x[:, 2] - x[:, 0])
    n1 = np.cross(x[:, 3] - x[:, 0], e)
    scale = np.einsum("ni,ni->n", e, e) ** 2 + 1e-300
    bad = (np.einsum("ni,ni->n", n0, n0) < DEGENERATE_TOL * scale) | \
          (np.einsum("ni,ni->n", n1, n1) < DEGENERATE_TOL * scale)
    diff = np.angle(np.exp(1j * (hinge_angle(x) - rest_angle)))
    return np.where(bad, 0.0, np.asarray(stiffness, float) * rest_weight * diff ** 2)
