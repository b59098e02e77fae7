"""Incremental potential of the coupled FEM/affine system and its derivatives."""
from dataclasses import dataclass, field

import numpy as np

from ..contact.barrier import barrier, barrier_pair
from ..contact.distance import pair_distance
from ..contact.friction import FrictionPair, friction_energy
from ..elastic import (abd_orthogonality, abd_orthogonality_value, cubic_sl, fbw_membrane, hinge_bending,
                       hinge_bending_value, membrane_deformation, membrane_values, shear_energy,
                       stable_neo_hookean, stable_neo_hookean_value)
from ..sparse.abd import two_level_abd_reduce
from ..sparse.reduction import DEFAULT_WIDTH, fast_hash_reduction
from ..sparse.triplets import BlockTripletStream, pack_keys, sort_and_canonicalize
from .system import System


@dataclass
class StepContext:
    """Quantities frozen for one time step."""

    xHat: np.ndarray
    qHat: np.ndarray
    kappa: float
    x_start: np.ndarray  # full-node positions at the start of the step
    friction: FrictionPair = field(default_factory=FrictionPair.empty)


def stencil_stream(nodes, H):
    """Upper stencil-pair tiles of (n, 3k, 3k) element Hessians; slots < 0 are dropped."""
    nodes = np.asarray(nodes, np.int64)
    n, k = nodes.shape
    if n == 0:
        return BlockTripletStream.empty()
    T = H.reshape(n, k, 3, k, 3).transpose(0, 1, 3, 2, 4)
    a, b = np.triu_indices(k)
    rows, cols = nodes[:, a].ravel(), nodes[:, b].ravel()
    tiles = T[:, a, b].reshape(-1, 3, 3)
    keep = (rows >= 0) & (cols >= 0)
    return BlockTripletStream(pack_keys(rows[keep], cols[keep]), tiles[keep])


def _fem_gradient(n, nodes, g):
    G = np.zeros((n, 3))
    for k in range(3):
        G[:, k] = np.bincount(nodes.ravel(), weights=g[..., k].ravel(), minlength=n)
    return G


def _active(system, kind, nodes, X):
    if len(kind) == 0:
        return kind, nodes, np.zeros(0)
    d2 = pair_distance(kind, X[np.maximum(nodes, 0)], False, _ground(system))[0]
    act = d2 < system.dhat ** 2
    return kind[act], nodes[act], d2[act]


def _ground(system):
    return 0.0 if system.ground is None else system.ground


def ip_value(system: System, ctx: StepContext, U, stencils):
    """Scalar incremental potential at block vector U; inf if any stencil touches."""
    dt2 = system.dt ** 2
    nf = system.n_fem
    x = U[:nf]
    E = 0.5 * float(np.sum(system.mass[:, None] * (x - ctx.xHat) ** 2))
    if len(system.tets):
        E += dt2 * float(stable_neo_hookean_value(x[system.tets], system.tet_inv, system.tet_youngs,
                                                  system.tet_poisson, system.tet_vol).sum())
    if len(system.tris):
        defm = membrane_deformation(x[system.tris], system.tri_inv, system.tri_aT)
        st, sh, sl = membrane_values(defm)
        E += dt2 * float(np.sum(system.tri_membrane * st + system.tri_shear * sh + system.tri_strain_limit * sl))
    if len(system.hinges):
        E += dt2 * float(hinge_bending_value(x[system.hinges], system.hinge_rest, system.hinge_k,
                                             system.hinge_weight).sum())
    if system.n_bodies:
        q = U[nf:].reshape(-1, 12)
        dq = q - ctx.qHat
        E += 0.5 * float(np.einsum("bi,bij,bj->", dq, system.reduced_mass, dq))
        E += dt2 * float(abd_orthogonality_value(q, system.body_ortho, system.body_volume).sum())
    X = system.full_positions(U)
    kind, nodes = stencils
    if len(kind):
        d2 = pair_distance(kind, X[np.maximum(nodes, 0)], False, _ground(system))[0]
        if np.any(d2 <= 0.0):
            return np.inf
        b, _, _ = barrier(d2, system.dhat ** 2)
        E += ctx.kappa * float(b.sum())
    if len(ctx.friction) and system.config.friction_mu > 0:
        fp = ctx.friction
        fe = friction_energy(fp, X[np.maximum(fp.nodes, 0)], ctx.x_start[np.maximum(fp.nodes, 0)],
                             system.config.friction_mu, system.config.static_friction_tol_rel * system.diagonal)
        E += fe.total
    return E


@dataclass
class Derivatives:
    energy: float
    gradient: np.ndarray  # (n_dof, 3)
    hessian: object  # SortedSymBlockCoo
    contacts: tuple  # active (kind, nodes, d2)
    terms: dict


def ip_value_and_derivatives(system: System, ctx: StepContext, U, stencils, width=DEFAULT_WIDTH,
                             deterministic=False):
    """Energy, block gradient and PSD-projected block Hessian at U."""
    dt2 = system.dt ** 2
    nf = system.n_fem
    x = U[:nf]
    terms = {}
    G = np.zeros((system.n_dof, 3))
    streams = []
    # FEM inertia
    terms["inertia"] = 0.5 * float(np.sum(system.mass[:, None] * (x - ctx.xHat) ** 2))
    G[:nf] += system.mass[:, None] * (x - ctx.xHat)
    idx = np.arange(nf)
    streams.append(BlockTripletStream(pack_keys(idx, idx), system.mass[:, None, None] * np.eye(3)))
    if len(system.tets):
        e = stable_neo_hookean(x[system.tets], system.tet_inv, system.tet_youngs, system.tet_poisson,
                               system.tet_vol)
        terms["volume"] = dt2 * e.total
        G[:nf] += dt2 * _fem_gradient(nf, system.tets, e.gradient)
        streams.append(stencil_stream(system.tets, dt2 * e.hessian))
    if len(system.tris):
        defm = membrane_deformation(x[system.tris], system.tri_inv, system.tri_aT)
        parts = [fbw_membrane(defm, system.tri_membrane), shear_energy(defm, system.tri_shear),
                 cubic_sl(defm, system.tri_strain_limit)]
        for name, p in zip(("membrane", "shear", "strainLimit"), parts):
            terms[name] = dt2 * p.total
        g = sum(p.gradient for p in parts)
        Hm = sum(p.hessian for p in parts)
        G[:nf] += dt2 * _fem_gradient(nf, system.tris, g)
        streams.append(stencil_stream(system.tris, dt2 * Hm))
    if len(system.hinges):
        e = hinge_bending(x[system.hinges], system.hinge_rest, system.hinge_k, system.hinge_weight)
        terms["bending"] = dt2 * e.total
        G[:nf] += dt2 * _fem_gradient(nf, system.hinges, e.gradient)
        streams.append(stencil_stream(system.hinges, dt2 * e.hessian))
    if system.n_bodies:
        q = U[nf:].reshape(-1, 12)
        dq = q - ctx.qHat
        terms["inertiaAffine"] = 0.5 * float(np.einsum("bi,bij,bj->", dq, system.reduced_mass, dq))
        e = abd_orthogonality(q, system.body_ortho, system.body_volume)
        terms["orthogonality"] = dt2 * e.total
        gq = np.einsum("bij,bj->bi", system.reduced_mass, dq) + dt2 * e.gradient.reshape(-1, 12)
        G[nf:] += gq.reshape(-1, 3)
        Hq = system.reduced_mass + dt2 * e.hessian
        body_nodes = system.body_dof[:, None] + np.arange(4)[None, :]
        streams.append(stencil_stream(body_nodes, Hq))
    # contact and friction on full nodes
    X = system.full_positions(U)
    kind, nodes, d2 = _active(system, *stencils, X)
    g_full = np.zeros((system.n_full, 3))
    contact_streams = []
    if len(kind):
        e = barrier_pair(kind, X[np.maximum(nodes, 0)], system.dhat, ctx.kappa, _ground(system))
        terms["barrier"] = e.total
        _scatter_full(g_full, nodes, e.gradient)
        contact_streams.append(stencil_stream(nodes, e.hessian))
    mu = system.config.friction_mu
    if len(ctx.friction) and mu > 0:
        fp = ctx.friction
        e = friction_energy(fp, X[np.maximum(fp.nodes, 0)], ctx.x_start[np.maximum(fp.nodes, 0)], mu,
                            system.config.static_friction_tol_rel * system.diagonal)
        terms["friction"] = e.total
        _scatter_full(g_full, fp.nodes, e.gradient)
        contact_streams.append(stencil_stream(fp.nodes, e.hessian))
    if contact_streams:
        G += system.pull_back_gradient(g_full)
        mapped = two_level_abd_reduce(BlockTripletStream.concat(contact_streams), system.layout, width,
                                      deterministic)
        streams.append(mapped)
    stream = sort_and_canonicalize(BlockTripletStream.concat(streams))
    H = fast_hash_reduction(stream, system.n_dof, width, deterministic)
    if np.any(system.pinned):
        G[:nf][system.pinned] = 0.0
        H = _pin(H, system.pinned)
    return Derivatives(sum(terms.values()), G, H, (kind, nodes, d2), terms)


def _scatter_full(g_full, nodes, grad):
    for s in range(4):
        m = nodes[:, s] >= 0
        for k in range(3):
            g_full[:, k] += np.bincount(nodes[m, s], weights=grad[m, s, k], minlength=len(g_full))


def _pin(H, pinned_fem):
    from ..sparse.bcoo import SortedSymBlockCoo

    pin = np.zeros(H.n_rows, bool)
    pin[:len(pinned_fem)] = pinned_fem
    keep = ~(pin[H.rows] | pin[H.cols])
    rows, cols, blocks = H.rows[keep], H.cols[keep], H.blocks[keep]
    p = np.nonzero(pin)[0]
    rows = np.concatenate([rows, p])
    cols = np.concatenate([cols, p])
    blocks = np.concatenate([blocks, np.broadcast_to(np.eye(3), (len(p), 3, 3))])
    order = np.argsort(pack_keys(rows, cols), kind="stable")
    return SortedSymBlockCoo(rows[order], cols[order], blocks[order], H.n_rows)
