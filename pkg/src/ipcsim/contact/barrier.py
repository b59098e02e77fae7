"""Log barrier on squared distance: b(s) = -kappa (s - s_hat)^2 ln(s / s_hat) for s < s_hat."""
import numpy as np

from ..elastic.common import ElementEnergy, project_psd
from .distance import pair_distance


class PenetrationError(RuntimeError):
    """A contact pair reached zero distance."""


def barrier(s, s_hat):
    """Unit-stiffness barrier and its first two derivatives with respect to s."""
    s = np.asarray(s, float)
    act = s < s_hat
    ss = np.where(act, s, s_hat)
    r = ss - s_hat
    lg = np.log(ss / s_hat)
    b = np.where(act, -r * r * lg, 0.0)
    db = np.where(act, -(2.0 * r * lg + r * r / ss), 0.0)
    ddb = np.where(act, -(2.0 * lg + 4.0 * r / ss - r * r / (ss * ss)), 0.0)
    return b, db, ddb


def barrier_pair(kind, X, dhat, kappa, ground=0.0, project=True):
    """Barrier energy over stacked (n, 4, 3) stencils.

    Pairs at or beyond ``dhat`` contribute exactly zero.
    """
    d2, g, H, _ = pair_distance(kind, X, True, ground)
    if np.any(d2 <= 0.0):
        raise PenetrationError(f"contact pair {int(np.argmin(d2))} has zero distance")
    b, db, ddb = barrier(d2, dhat * dhat)
    val = kappa * b
    grad = (kappa * db)[:, None] * g
    Hb = kappa * (ddb[:, None, None] * np.einsum("ni,nj->nij", g, g) + db[:, None, None] * H)
    act = d2 < dhat * dhat
    Hb[~act] = 0.0
    if project and np.any(act):
        Hb[act] = project_psd(Hb[act])
    return ElementEnergy(val, grad.reshape(-1, 4, 3), Hb)


def initial_barrier_stiffness(diagonal, dhat, mean_mass, grad_energy=None, grad_barrier=None):
    """Mass-scaled lower bound, raised toward balancing the elastic and inertial forces.

    Returns (kappa, kappa_max) with kappa_max = 100 kappa_min.
    """
    s_hat = dhat * dhat
    s0 = (1e-8 * diagonal) ** 2
    if s0 >= s_hat:
        s0 = 0.5 * s_hat
    _, _, ddb = barrier(s0, s_hat)
    kappa_min = 1e11 * mean_mass / (4.0 * s0 * float(ddb))
    kappa_max = 100.0 * kappa_min
    kappa = kappa_min
    if grad_barrier is not None and grad_energy is not None:
        nb = float(np.dot(grad_barrier, grad_barrier))
        if nb > 0:
            kappa = min(max(-float(np.dot(grad_barrier, grad_energy)) / nb, kappa_min), kappa_max)
    return kappa, kappa_max
