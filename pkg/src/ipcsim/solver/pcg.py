from dataclasses import dataclass

import numpy as np

from ..sparse.bcoo import SortedSymBlockCoo, srbk_spmv
from ..sparse.reduction import DEFAULT_WIDTH

RESTART = 250


@dataclass
class PcgResult:
    d: np.ndarray
    iterations: int
    converged: bool
    residual: float  # final ||A d + b|| / ||b||


def pcg_solve(A: SortedSymBlockCoo, b, precond=None, rel_tol=1e-4, max_iter=10000, width=DEFAULT_WIDTH,
              deterministic=False):
    """Solve A d = -b by preconditioned conjugate gradients.

    All products with A go through the symmetric block SpMV. Restarts every
    250 iterations from the true residual.
    """
    b = np.asarray(b, float).reshape(-1)
    nb = np.linalg.norm(b)
    d = np.zeros_like(b)
    if nb == 0.0:
        return PcgResult(d, 0, True, 0.0)
    M = precond if precond is not None else (lambda v: v)

    def matvec(v):
        return srbk_spmv(A, v, width, deterministic)

    r = -b.copy()
    z = M(r)
    p = z.copy()
    rz = r @ z
    it = 0
    converged = False
    while it < max_iter:
        it += 1
        Ap = matvec(p)
        pAp = p @ Ap
        if pAp <= 0.0:
            break
        alpha = rz / pAp
        d += alpha * p
        r -= alpha * Ap
        restart = it % RESTART == 0
        if np.linalg.norm(r) <= rel_tol * nb:
            # confirm with the true residual; drift triggers a restart
            r = -b - matvec(d)
            if np.linalg.norm(r) <= rel_tol * nb:
                converged = True
                break
            restart = True
        if restart:
            r = -b - matvec(d)
            z = M(r)
            p = z.copy()
            rz = r @ z
            continue
        z = M(r)
        rz_new = r @ z
        p = z + (rz_new / rz) * p
        rz = rz_new
    res = np.linalg.norm(matvec(d) + b) / nb
    return PcgResult(d, it, converged, float(res))
