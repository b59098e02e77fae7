"""Lagged smoothed Coulomb friction on contact stencils."""
from dataclasses import dataclass

import numpy as np

from ..elastic.common import ElementEnergy, project_psd
from .barrier import barrier
from .distance import EE, PG, PT, pair_distance


@dataclass
class FrictionPair:
    """Batched lagged friction data.

    basis: (n, 3, 2) orthonormal tangent frames, weights: (n, 4) such that the
    relative displacement is sum_i weights[i] dx[node i], lambda_n: (n,).
    """

    kind: np.ndarray
    nodes: np.ndarray
    basis: np.ndarray
    weights: np.ndarray
    lambda_n: np.ndarray

    def __len__(self):
        return len(self.lambda_n)

    @classmethod
    def empty(cls):
        return cls(np.zeros(0, np.int64), np.zeros((0, 4), np.int64), np.zeros((0, 3, 2)),
                   np.zeros((0, 4)), np.zeros(0))


def _unit(v, fallback):
    n = np.linalg.norm(v, axis=-1, keepdims=True)
    ok = n > 1e-14 * np.maximum(np.linalg.norm(fallback, axis=-1, keepdims=True), 1e-300)
    return np.where(ok, v / np.where(ok, n, 1.0), fallback)


def _any_perp(n):
    """Unit vector perpendicular to each row of n."""
    a = np.where((np.abs(n[:, 0]) < 0.9)[:, None], [1.0, 0.0, 0.0], [0.0, 1.0, 0.0])
    t = np.cross(n, a)
    return t / np.linalg.norm(t, axis=1, keepdims=True)


def _pt_frames(X):
    p, t0, t1, t2 = X[:, 0], X[:, 1], X[:, 2], X[:, 3]
    e0, e1 = t1 - t0, t2 - t0
    # closest point on the triangle via clamped barycentric projection
    G = np.stack([np.einsum("ni,ni->n", e0, e0), np.einsum("ni,ni->n", e0, e1),
                  np.einsum("ni,ni->n", e1, e1)], 1)
    rhs = np.stack([np.einsum("ni,ni->n", p - t0, e0), np.einsum("ni,ni->n", p - t0, e1)], 1)
    det = G[:, 0] * G[:, 2] - G[:, 1] ** 2
    b1 = (G[:, 2] * rhs[:, 0] - G[:, 1] * rhs[:, 1]) / det
    b2 = (G[:, 0] * rhs[:, 1] - G[:, 1] * rhs[:, 0]) / det
    b1, b2 = np.clip(b1, 0, 1), np.clip(b2, 0, 1)
    s = b1 + b2
    over = s > 1
    b1 = np.where(over, b1 / s, b1)
    b2 = np.where(over, b2 / s, b2)
    w = np.stack([np.ones(len(X)), -(1 - b1 - b2), -b1, -b2], 1)
    u = e0 / np.linalg.norm(e0, axis=1, keepdims=True)
    nrm = np.cross(e0, e1)
    v = np.cross(nrm, u)
    v = v / np.linalg.norm(v, axis=1, keepdims=True)
    return np.stack([u, v], 2), w


def _ee_frames(X):
    a0, a1, b0, b1 = X[:, 0], X[:, 1], X[:, 2], X[:, 3]
    u, v, w0 = a1 - a0, b1 - b0, a0 - b0
    a, b, c = (np.einsum("ni,ni->n", u, u), np.einsum("ni,ni->n", u, v), np.einsum("ni,ni->n", v, v))
    d, e = np.einsum("ni,ni->n", u, w0), np.einsum("ni,ni->n", v, w0)
    D = a * c - b * b
    s = np.where(D > 1e-14 * a * c, (b * e - c * d) / np.where(D > 0, D, 1.0), 0.0)
    s = np.clip(s, 0, 1)
    t = np.clip((b * s + e) / c, 0, 1)
    s = np.clip((b * t - d) / a, 0, 1)
    w = np.stack([1 - s, s, -(1 - t), -t], 1)
    tu = u / np.sqrt(a)[:, None]
    diff = (a0 + s[:, None] * u) - (b0 + t[:, None] * v)
    nrm = _unit(np.cross(u, v), _unit(diff, _any_perp(tu)))
    tv = np.cross(nrm, tu)
    tv = tv / np.linalg.norm(tv, axis=1, keepdims=True)
    return np.stack([tu, tv], 2), w


def friction_pairs_update(kind, nodes, X, dhat, kappa, ground=0.0):
    """Lag tangent frames, barycentric weights and normal forces at the current state."""
    kind = np.asarray(kind, np.int64)
    X = np.asarray(X, float).reshape(-1, 4, 3)
    n = len(X)
    if n == 0:
        return FrictionPair.empty()
    d2 = pair_distance(kind, X, False, ground)[0]
    _, db, _ = barrier(d2, dhat * dhat)
    lam = np.maximum(-2.0 * kappa * db * np.sqrt(d2), 0.0)
    basis = np.zeros((n, 3, 2))
    w = np.zeros((n, 4))
    for k, fn in ((PT, _pt_frames), (EE, _ee_frames)):
        m = kind == k
        if np.any(m):
            basis[m], w[m] = fn(X[m])
    m = kind == PG
    basis[m] = [[1.0, 0.0], [0.0, 0.0], [0.0, 1.0]]
    w[m] = [1.0, 0.0, 0.0, 0.0]
    keep = lam > 0
    return FrictionPair(kind[keep], np.asarray(nodes)[keep], basis[keep], w[keep], lam[keep])


def mollifier(y, eps):
    """f0, f1 = f0' and f1' of the C1 static-friction mollifier."""
    inside = y < eps
    f0 = np.where(inside, -y ** 3 / (3 * eps * eps) + y * y / eps + eps / 3.0, y)
    f1 = np.where(inside, -y * y / (eps * eps) + 2.0 * y / eps, 1.0)
    df1 = np.where(inside, -2.0 * y / (eps * eps) + 2.0 / eps, 0.0)
    return f0, f1, df1


def friction_energy(fp: FrictionPair, X, X_prev, mu, eps_u, project=True):
    """mu * lambda_n * f0(|u|) with u the lagged-frame tangential displacement.

    X, X_prev: (n, 4, 3) current and start-of-step stencil positions; eps_u is
    the sliding displacement below which friction is treated as static.
    """
    n = len(fp)
    if n == 0 or mu == 0:
        return ElementEnergy(np.zeros(n), np.zeros((n, 4, 3)), np.zeros((n, 12, 12)))
    dX = np.asarray(X, float).reshape(-1, 4, 3) - np.asarray(X_prev, float).reshape(-1, 4, 3)
    rel = np.einsum("na,nai->ni", fp.weights, dX)
    u = np.einsum("nik,ni->nk", fp.basis, rel)
    y = np.linalg.norm(u, axis=1)
    f0, f1, df1 = mollifier(y, eps_u)
    scale = mu * fp.lambda_n
    val = scale * f0
    # Gamma maps the 12 stencil DOFs to the 2 tangential ones
    Gam = np.einsum("na,nik->nkai", fp.weights, fp.basis).reshape(n, 2, 12)
    ysafe = np.where(y > 0, y, 1.0)
    f1_over_y = np.where(y > 0, f1 / ysafe, 2.0 / eps_u)
    gu = (scale * f1_over_y)[:, None] * u
    grad = np.einsum("nkj,nk->nj", Gam, gu)
    uhat = u / ysafe[:, None]
    coef = np.where(y > 0, (df1 * y - f1) / ysafe, 0.0)
    M2 = f1_over_y[:, None, None] * np.eye(2) + coef[:, None, None] * np.einsum("ni,nj->nij", uhat, uhat)
    M2 = scale[:, None, None] * M2
    if project:
        M2 = project_psd(M2)
    H = np.einsum("nki,nkl,nlj->nij", Gam, M2, Gam)
    return ElementEnergy(val, grad.reshape(n, 4, 3), H)
