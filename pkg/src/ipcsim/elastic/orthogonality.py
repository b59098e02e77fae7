import numpy as np

from .common import ElementEnergy, project_psd


def abd_orthogonality(q, stiffness, rest_volume, project=True):
    """Affine-body rigidity potential stiffness * volume * |A^T A - I|_F^2.

    ``q`` is (n, 12) with A stored row-major after the translation; the
    gradient is returned as (n, 4, 3), i.e. [p, A row 0, A row 1, A row 2].
    """
    q = np.asarray(q, float).reshape(-1, 12)
    n = len(q)
    A = q[:, 3:].reshape(n, 3, 3)
    w = np.broadcast_to(np.asarray(stiffness, float) * np.asarray(rest_volume, float), (n,))
    S = np.swapaxes(A, 1, 2) @ A - np.eye(3)
    val = w * np.einsum("nij,nij->n", S, S)
    gA = 4.0 * w[:, None, None] * (A @ S)
    # H[(i,j),(a,b)] = d(A S)_ij / dA_ab from dA S + A dA^T A + A A^T dA
    I3 = np.eye(3)
    H = np.zeros((n, 3, 3, 3, 3))
    H += np.einsum("ia,nbj->nijab", I3, S)
    H += np.einsum("nib,naj->nijab", A, A)
    H += np.einsum("nia,jb->nijab", A @ np.swapaxes(A, 1, 2), I3)
    H = 4.0 * w[:, None, None] * H.reshape(n, 9, 9)
    if project:
        H = project_psd(H)
    full_g = np.zeros((n, 4, 3))
    full_g[:, 1:] = gA
    full_H = np.zeros((n, 12, 12))
    full_H[:, 3:, 3:] = H
    return ElementEnergy(val, full_g, full_H)


def abd_orthogonality_value(q, stiffness, rest_volume):
    q = np.asarray(q, float).reshape(-1, 12)
    A = q[:, 3:].reshape(-1, 3, 3)
    S = np.swapaxes(A, 1, 2) @ A - np.eye(3)
    return np.asarray(stiffness, float) * np.asarray(rest_volume, float) * np.einsum("nij,nij->n", S, S)
