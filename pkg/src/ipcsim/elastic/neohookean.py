import numpy as np

from .common import ElementEnergy, project_psd, scatter_F_to_x


def tet_deformation(tet_world, inv_rest):
    x = np.asarray(tet_world, float).reshape(-1, 4, 3)
    Ds = np.stack([x[:, 1] - x[:, 0], x[:, 2] - x[:, 0], x[:, 3] - x[:, 0]], axis=2)
    F = Ds @ inv_rest
    coef = np.empty((len(F), 4, 3))
    coef[:, 1:] = inv_rest
    coef[:, 0] = -inv_rest.sum(axis=1)
    return F, coef


def _hat(v):
    z = np.zeros(v.shape[:-1])
    return np.stack([
        np.stack([z, -v[..., 2], v[..., 1]], -1),
        np.stack([v[..., 2], z, -v[..., 0]], -1),
        np.stack([-v[..., 1], v[..., 0], z], -1),
    ], -2)


def snh_F(F, mu, lam):
    """Stable Neo-Hookean density mu/2 (|F|^2 - 3) - mu (J - 1) + lam/2 (J - 1)^2.

    Returns value, gradient (n, 3 cols, 3) and Hessian (n, 3, 3, 3, 3) in
    column-major F layout. Rest-stable and finite under inversion.
    """
    n = len(F)
    mu = np.broadcast_to(np.asarray(mu, float), (n,))[:, None, None]
    lam = np.broadcast_to(np.asarray(lam, float), (n,))
    f0, f1, f2 = F[:, :, 0], F[:, :, 1], F[:, :, 2]
    J = np.linalg.det(F)
    IC = np.einsum("nij,nij->n", F, F)
    gJ = np.stack([np.cross(f1, f2), np.cross(f2, f0), np.cross(f0, f1)], axis=1)
    val = 0.5 * mu[:, 0, 0] * (IC - 3.0) - mu[:, 0, 0] * (J - 1.0) + 0.5 * lam * (J - 1.0) ** 2
    c = lam * (J - 1.0) - mu[:, 0, 0]
    g = mu * np.swapaxes(F, 1, 2) + c[:, None, None] * gJ
    HJ = np.zeros((n, 3, 3, 3, 3))
    h0, h1, h2 = _hat(f0), _hat(f1), _hat(f2)
    HJ[:, 0, :, 1, :] = -h2
    HJ[:, 1, :, 0, :] = h2
    HJ[:, 0, :, 2, :] = h1
    HJ[:, 2, :, 0, :] = -h1
    HJ[:, 1, :, 2, :] = -h0
    HJ[:, 2, :, 1, :] = h0
    gv = gJ.reshape(n, 9)
    H = mu * np.eye(9) + lam[:, None, None] * np.einsum("ni,nj->nij", gv, gv) + c[:, None, None] * HJ.reshape(n, 9, 9)
    return val, g, H.reshape(n, 3, 3, 3, 3)


def stable_neo_hookean(tet_world, inv_rest, youngs, poisson, rest_volume, project=True):
    """Per-tet stable Neo-Hookean energy with the F-space Hessian projected to PSD."""
    F, coef = tet_deformation(tet_world, inv_rest)
    youngs = np.asarray(youngs, float)
    poisson = np.asarray(poisson, float)
    mu = youngs / (2.0 * (1.0 + poisson))
    lam = youngs * poisson / ((1.0 + poisson) * (1.0 - 2.0 * poisson))
    # lam + mu keeps the small-strain limit equal to linear elasticity for this form
    mu = np.broadcast_to(mu, (len(F),))
    lam = np.broadcast_to(lam + mu, (len(F),))
    val, gF, HF = snh_F(F, mu, lam)
    if project:
        HF = project_psd(HF.reshape(-1, 9, 9)).reshape(-1, 3, 3, 3, 3)
    g, H = scatter_F_to_x(coef, gF, HF, 3)
    V = np.broadcast_to(np.asarray(rest_volume, float), (len(F),))
    return ElementEnergy(V * val, V[:, None, None] * g, V[:, None, None] * H)


def stable_neo_hookean_value(tet_world, inv_rest, youngs, poisson, rest_volume):
    F, _ = tet_deformation(tet_world, inv_rest)
    youngs = np.asarray(youngs, float)
    poisson = np.asarray(poisson, float)
    mu = youngs / (2.0 * (1.0 + poisson))
    lam = youngs * poisson / ((1.0 + poisson) * (1.0 - 2.0 * poisson)) + mu
    J = np.linalg.det(F)
    IC = np.einsum("nij,nij->n", F, F)
    return rest_volume * (0.5 * mu * (IC - 3.0) - mu * (J - 1.0) + 0.5 * lam * (J - 1.0) ** 2)
