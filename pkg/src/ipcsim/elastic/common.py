from dataclasses import dataclass

import numpy as np


@dataclass
class ElementEnergy:
    """Batched per-element energy.

    value: (n,), gradient: (n, k, 3) over the k stencil nodes,
    hessian: (n, 3k, 3k) symmetric, PSD unless built with ``project=False``.
    """

    value: np.ndarray
    gradient: np.ndarray
    hessian: np.ndarray
    flagged: np.ndarray | None = None

    def __len__(self):
        return len(self.value)

    @property
    def total(self):
        return float(np.sum(self.value))


def project_psd(H, floor=0.0):
    """Clamp the eigenvalues of a batch of symmetric matrices at ``floor``."""
    H = 0.5 * (H + np.swapaxes(H, -1, -2))
    if H.shape[0] == 0:
        return H
    w, V = np.linalg.eigh(H)
    if np.all(w >= floor):
        return H
    w = np.maximum(w, floor)
    return np.einsum("...ij,...j,...kj->...ik", V, w, V)


def scatter_F_to_x(coef, gF, HF, dim):
    """Chain rule through the constant map F = sum_a x_a coef[a]^T.

    coef: (n, k, c) per-node coefficients of each F column.
    gF: (n, c, dim) gradient w.r.t. the columns of F.
    HF: (n, c, dim, c, dim) Hessian w.r.t. F in the same layout.
    """
    g = coef @ gF
    n, k, c = coef.shape
    # two batched products instead of one three-operand contraction
    T = (coef @ HF.reshape(n, c, -1)).reshape(n, k * dim, c, dim)
    T = T.transpose(0, 1, 3, 2).reshape(n, k * dim * dim, c) @ coef.transpose(0, 2, 1)
    H = T.reshape(n, k, dim, dim, k).transpose(0, 1, 2, 4, 3).reshape(n, k * dim, k * dim)
    return g, H


def rotation_matrix(axis, angle):
    axis = np.asarray(axis, float)
    axis = axis / np.linalg.norm(axis)
    K = np.array([[0, -axis[2], axis[1]], [axis[2], 0, -axis[0]], [-axis[1], axis[0], 0]])
    return np.eye(3) + np.sin(angle) * K + (1 - np.cos(angle)) * K @ K
