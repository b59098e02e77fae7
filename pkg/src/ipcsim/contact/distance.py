"""Unsigned squared distances between contact primitives.

Each pair lives on a four-node stencil: point-triangle uses (p, t0, t1, t2),
edge-edge uses (a0, a1, b0, b1) and point-ground uses (p, -, -, -). The
closest-feature region picks which smooth kernel (point-point, point-edge,
point-plane, line-line) supplies the value and derivatives.
"""
import numpy as np

from ._distance_gen import ee_d2, pe_d2, pp_d2, pt_d2

PT, EE, PG = 0, 1, 2
KIND_NAMES = {PT: "point-triangle", EE: "edge-edge", PG: "point-ground"}

# (kernel, stencil slots) per region
PT_REGIONS = {
    "p-t0": (pp_d2, (0, 1)), "p-t1": (pp_d2, (0, 2)), "p-t2": (pp_d2, (0, 3)),
    "p-e01": (pe_d2, (0, 1, 2)), "p-e12": (pe_d2, (0, 2, 3)), "p-e20": (pe_d2, (0, 3, 1)),
    "p-t": (pt_d2, (0, 1, 2, 3)),
}
EE_REGIONS = {
    "a0-b0": (pp_d2, (0, 2)), "a0-b1": (pp_d2, (0, 3)), "a1-b0": (pp_d2, (1, 2)), "a1-b1": (pp_d2, (1, 3)),
    "a-b0": (pe_d2, (2, 0, 1)), "a-b1": (pe_d2, (3, 0, 1)), "a0-b": (pe_d2, (0, 2, 3)), "a1-b": (pe_d2, (1, 2, 3)),
    "a-b": (ee_d2, (0, 1, 2, 3)),
}
PT_CODES = list(PT_REGIONS)
EE_CODES = list(EE_REGIONS)
PARALLEL_TOL = 1e-10


def _dot(a, b):
    return np.einsum("...i,...i->...", a, b)


def _edge_param(p, a, b):
    """Parameter of the projection of p on the line a-b."""
    return _dot(p - a, b - a) / np.maximum(_dot(b - a, b - a), 1e-300)


def classify_pt(X):
    """Region index into PT_CODES for stacked (n, 4, 3) point-triangle stencils."""
    p, t0, t1, t2 = X[:, 0], X[:, 1], X[:, 2], X[:, 3]
    nrm = np.cross(t1 - t0, t2 - t0)
    region = np.full(len(X), PT_CODES.index("p-t"))
    decided = np.zeros(len(X), bool)
    s = []
    for code, (a, b) in zip(("p-e01", "p-e12", "p-e20"), ((t0, t1), (t1, t2), (t2, t0))):
        e = b - a
        out = np.cross(e, nrm)  # in-plane, pointing away from the triangle
        sk = _edge_param(p, a, b)
        side = _dot(p - a, out)
        hit = ~decided & (sk > 0) & (sk < 1) & (side >= 0)
        region[hit] = PT_CODES.index(code)
        decided |= hit
        s.append(sk)
    s0, s1, s2 = s
    for code, m in (("p-t0", (s0 <= 0) & (s2 >= 1)), ("p-t1", (s1 <= 0) & (s0 >= 1)),
                    ("p-t2", (s2 <= 0) & (s1 >= 1))):
        hit = ~decided & m
        region[hit] = PT_CODES.index(code)
        decided |= hit
    return region


def classify_ee(X):
    """Region index into EE_CODES for stacked (n, 4, 3) edge-edge stencils."""
    a0, a1, b0, b1 = X[:, 0], X[:, 1], X[:, 2], X[:, 3]
    u, v, w = a1 - a0, b1 - b0, a0 - b0
    a, b, c, d, e = _dot(u, u), _dot(u, v), _dot(v, v), _dot(u, w), _dot(v, w)
    D = a * c - b * b
    cross2 = _dot(np.cross(u, v), np.cross(u, v))
    parallel = cross2 < PARALLEL_TOL * a * c
    code = np.full(len(X), EE_CODES.index("a-b"))
    sN = b * e - c * d
    tN = a * e - b * d
    tD = D.copy()
    lo = sN <= 0
    hi = ~lo & (sN >= D)
    mid = ~lo & ~hi
    # nearly parallel edges fall back to the nearer endpoint of edge a
    par_lo = mid & parallel & (sN < 0.5 * D)
    par_hi = mid & parallel & ~(sN < 0.5 * D)
    lo = lo | par_lo
    hi = hi | par_hi
    code[lo] = EE_CODES.index("a0-b")
    code[hi] = EE_CODES.index("a1-b")
    tN = np.where(lo, e, np.where(hi, e + b, tN))
    tD = np.where(lo | hi, c, tD)
    t_lo = tN <= 0
    t_hi = ~t_lo & (tN >= tD)
    sa = -d
    code = np.where(t_lo, np.where(sa <= 0, EE_CODES.index("a0-b0"),
                                   np.where(sa >= a, EE_CODES.index("a1-b0"), EE_CODES.index("a-b0"))), code)
    sb = -d + b
    code = np.where(t_hi, np.where(sb <= 0, EE_CODES.index("a0-b1"),
                                   np.where(sb >= a, EE_CODES.index("a1-b1"), EE_CODES.index("a-b1"))), code)
    return code


def _evaluate(X, region, table, codes, derivatives):
    n = len(X)
    d2 = np.empty(n)
    g = np.zeros((n, 12)) if derivatives else None
    H = np.zeros((n, 12, 12)) if derivatives else None
    for ci, name in enumerate(codes):
        m = np.nonzero(region == ci)[0]
        if len(m) == 0:
            continue
        fn, slots = table[name]
        val, gk, hk = fn(*[X[m, s] for s in slots])
        d2[m] = val
        if derivatives:
            idx = np.concatenate([np.arange(3 * s, 3 * s + 3) for s in slots])
            g[m[:, None], idx[None, :]] = gk
            H[m[:, None, None], idx[None, :, None], idx[None, None, :]] = hk
    return d2, g, H


def pair_distance(kind, X, derivatives=True, ground=0.0):
    """Squared distance, gradient (n, 12), Hessian (n, 12, 12) and region codes.

    ``kind`` is PT, EE or PG (a scalar or one entry per stencil) and ``X`` the
    stacked (n, 4, 3) stencil positions. For PG only slot 0 is read and the
    plane is y = ``ground``.
    """
    X = np.asarray(X, float).reshape(-1, 4, 3)
    n = len(X)
    kind = np.broadcast_to(np.asarray(kind), (n,))
    d2 = np.empty(n)
    region = np.zeros(n, np.int64)
    g = np.zeros((n, 12)) if derivatives else None
    H = np.zeros((n, 12, 12)) if derivatives else None
    for k, classify, table, codes in ((PT, classify_pt, PT_REGIONS, PT_CODES),
                                      (EE, classify_ee, EE_REGIONS, EE_CODES)):
        m = np.nonzero(kind == k)[0]
        if len(m) == 0:
            continue
        region[m] = classify(X[m])
        dk, gk, hk = _evaluate(X[m], region[m], table, codes, derivatives)
        d2[m] = dk
        if derivatives:
            g[m], H[m] = gk, hk
    m = np.nonzero(kind == PG)[0]
    if len(m):
        h = X[m, 0, 1] - ground
        d2[m] = h * h
        if derivatives:
            g[m, 1] = 2.0 * h
            H[m, 1, 1] = 2.0
    return d2, g, H, region


def region_name(kind, region):
    if kind == PT:
        return PT_CODES[region]
    if kind == EE:
        return EE_CODES[region]
    return "p-ground"
