"""Conservative-advancement continuous collision detection on linear trajectories."""
import numpy as np

from .distance import EE, PG, PT, pair_distance

SLACK = 0.1  # stop once the gap has shrunk to this fraction of its start value
RESCALE = 0.9
MAX_ITERS = 2000


def _motion_bound(kind, P):
    """Upper bound on how fast the stencil distance can shrink per unit step."""
    n = len(P)
    lp = np.zeros(n)
    m = kind == PT
    if np.any(m):
        Q = P[m] - P[m].mean(1, keepdims=True)
        nq = np.linalg.norm(Q, axis=2)
        lp[m] = nq[:, 0] + nq[:, 1:].max(1)
    m = kind == EE
    if np.any(m):
        Q = P[m] - P[m].mean(1, keepdims=True)
        nq = np.linalg.norm(Q, axis=2)
        lp[m] = nq[:, :2].max(1) + nq[:, 2:].max(1)
    m = kind == PG
    lp[m] = np.maximum(-P[m, 0, 1], 0.0)
    return lp


def pair_toi(kind, X, P, t_max=1.0, ground=0.0):
    """Conservative time of impact per stencil, capped at ``t_max``.

    X, P: (n, 4, 3) start positions and displacements.
    """
    X = np.asarray(X, float).reshape(-1, 4, 3)
    P = np.asarray(P, float).reshape(-1, 4, 3)
    n = len(X)
    kind = np.broadcast_to(np.asarray(kind), (n,)).copy()
    toi = np.full(n, t_max)
    if n == 0:
        return toi
    lp = _motion_bound(kind, P)
    live = np.nonzero(lp > 0)[0]
    if len(live) == 0:
        return toi
    x = X[live].copy()
    p = P[live]
    k = kind[live]
    l = lp[live]
    d = np.sqrt(pair_distance(k, x, False, ground)[0])
    gap = SLACK * d
    t = np.zeros(len(live))
    step = (1.0 - SLACK) * d / l
    active = np.ones(len(live), bool)
    for _ in range(MAX_ITERS):
        idx = np.nonzero(active)[0]
        if len(idx) == 0:
            break
        x[idx] += step[idx, None, None] * p[idx]
        d[idx] = np.sqrt(pair_distance(k[idx], x[idx], False, ground)[0])
        hit = (t[idx] > 0) & (d[idx] < gap[idx])
        active[idx[hit]] = False
        go = idx[~hit]
        t[go] += step[go]
        over = go[t[go] > t_max]
        t[over] = t_max
        active[over] = False
        step[go] = RESCALE * d[go] / l[go]
    toi[live] = np.minimum(t, t_max)
    return toi


def ccd_max_step(kind, X, P, ground=0.0):
    """Largest step in (0, 1] along P keeping every stencil separated."""
    if len(np.atleast_1d(kind)) == 0 or np.size(X) == 0:
        return 1.0
    return float(pair_toi(kind, X, P, 1.0, ground).min(initial=1.0))
