"""Projected Newton time stepping with CCD-filtered backtracking line search."""
import logging
import time
from dataclasses import dataclass, field

import numpy as np

from ..contact.barrier import initial_barrier_stiffness, barrier_pair
from ..contact.ccd import ccd_max_step
from ..contact.friction import FrictionPair, friction_pairs_update
from ..contact.pairs import stencils as find_stencils
from ..mas.partition import morton_order, multilevel_partition, ordered_partition, partition_graph
from ..mas.precond import BlockJacobi, MasPreconditioner
from ..scene import Scene
from ..sparse.reduction import DEFAULT_WIDTH
from .energy import StepContext, _active, _ground, ip_value, ip_value_and_derivatives
from .pcg import pcg_solve
from .system import System

log = logging.getLogger(__name__)

PRECONDITIONERS = ("cemas16", "cemas32", "blockJacobi", "masMortonFixture")
MIN_ALPHA = 1e-12


class SolverError(RuntimeError):
    """Newton could not make progress (exit code 3 in the command-line runner)."""


@dataclass
class NewtonStats:
    newtonIters: int = 0
    cgItersTotal: int = 0
    cgItersPerNewton: list = field(default_factory=list)
    alphas: list = field(default_factory=list)
    energies: list = field(default_factory=list)
    minDistances: list = field(default_factory=list)
    pcgResiduals: list = field(default_factory=list)
    pcgMaxIterFlags: int = 0
    converged: bool = False  # False means the step hit the Newton iteration cap
    minDistance: float = np.inf  # after the step
    timings: dict = field(default_factory=lambda: dict.fromkeys(("assembly", "pcg", "ccd", "lineSearch"), 0.0))

    def add_time(self, key, t0):
        self.timings[key] += time.perf_counter() - t0


def make_preconditioner(system: System, name="cemas16", deterministic=False, width=DEFAULT_WIDTH, max_levels=4,
                        seed=0):
    if name == "blockJacobi":
        return BlockJacobi()
    if name in ("cemas16", "cemas32", "cemas"):
        N = {"cemas16": 16, "cemas32": 32}.get(name, system.config.subdomain_size)
        part = partition_graph(system.base_adjacency, system.n_dof, N, system.groups,
                               lambda A, k: multilevel_partition(A, k, seed))
        return MasPreconditioner(part, max_levels, width, deterministic)
    if name == "masMortonFixture":
        N = system.config.subdomain_size
        centers = np.array([b.center for b in system.scene.bodies]).reshape(-1, 3)
        pts = np.concatenate([system.x_rest, np.repeat(centers, 4, axis=0)])
        return MasPreconditioner(ordered_partition(morton_order(pts), N), max_levels, width, deterministic)
    raise ValueError(f"unknown preconditioner {name!r}; choose from {PRECONDITIONERS}")


class Simulator:
    """Owns the system, its state, the barrier stiffness and the preconditioner."""

    def __init__(self, scene: Scene, preconditioner=None, deterministic=None, width=DEFAULT_WIDTH, seed=0):
        self.system = System(scene)
        cfg = scene.config
        self.deterministic = cfg.deterministic if deterministic is None else deterministic
        self.width = width
        if preconditioner is None:
            preconditioner = {"cemas": f"cemas{cfg.subdomain_size}"}.get(cfg.preconditioner, cfg.preconditioner)
        self.precond_name = preconditioner
        self.precond = make_preconditioner(self.system, preconditioner, self.deterministic, width,
                                           cfg.mas_max_levels, seed)
        self.state = self.system.initial_state()
        self.kappa, self.kappa_max = initial_barrier_stiffness(self.system.diagonal, self.system.dhat,
                                                               self.system.mean_mass)
        if cfg.barrier_stiffness is not None:
            self.kappa = self.kappa_max = float(cfg.barrier_stiffness)
        self.kappa_tuned = cfg.barrier_stiffness is not None
        self.prev_min_distance = np.inf
        self.history = []
        self.hessian_hook = None  # called as hook(step_index, newton_index, matrix)

    @property
    def eps_d(self):
        s = self.system
        return s.config.newton_tol_rel * s.diagonal * s.dt

    def dofs(self):
        return self.state.dofs()

    def full_positions(self, U=None):
        return self.system.full_positions(self.dofs() if U is None else U)

    def step(self):
        stats = advance_time_step(self)
        self.history.append(stats)
        return stats


def _direction_norm(system: System, D):
    n = np.abs(D[:system.n_fem]).max(initial=0.0)
    if system.n_bodies:
        n = max(n, system.body_vertex_displacement(D).max())
    return n


def _tune_kappa(sim: Simulator, ctx: StepContext, U, stencils):
    """Raise kappa toward balancing the barrier against the remaining forces."""
    system = sim.system
    X = system.full_positions(U)
    kind, nodes, _ = _active(system, *stencils, X)
    if len(kind) == 0:
        return False
    saved = ctx.kappa
    ctx.kappa = 0.0
    rest = ip_value_and_derivatives(system, ctx, U, (kind[:0], nodes[:0]), sim.width, sim.deterministic)
    ctx.kappa = saved
    e = barrier_pair(kind, X[np.maximum(nodes, 0)], system.dhat, 1.0, _ground(system), project=False)
    g_full = np.zeros((system.n_full, 3))
    for s in range(4):
        m = nodes[:, s] >= 0
        np.add.at(g_full, nodes[m, s], e.gradient[m, s])
    gb = system.pull_back_gradient(g_full)
    gb[:system.n_fem][system.pinned] = 0.0
    kappa, _ = initial_barrier_stiffness(system.diagonal, system.dhat, system.mean_mass,
                                         rest.gradient.ravel(), gb.ravel())
    sim.kappa = ctx.kappa = max(sim.kappa, kappa)
    return True


def newton_step(sim: Simulator, ctx: StepContext, U, stats: NewtonStats):
    """One projected Newton iteration from U; returns (U_new, converged)."""
    system = sim.system
    t0 = time.perf_counter()
    here = find_stencils(system.surface, system.full_positions(U), system.dhat, system.ground)
    der = ip_value_and_derivatives(system, ctx, U, here, sim.width, sim.deterministic)
    sim.precond.update(der.hessian, system.dof_adjacency(der.hessian.rows, der.hessian.cols))
    stats.add_time("assembly", t0)
    if sim.hessian_hook is not None:
        sim.hessian_hook(len(sim.history), len(stats.cgItersPerNewton), der.hessian)
    if not stats.energies:
        stats.energies.append(ip_value(system, ctx, U, here))

    t0 = time.perf_counter()
    cfg = system.config
    res = pcg_solve(der.hessian, der.gradient.ravel(), sim.precond, cfg.pcg_rel_tol, cfg.pcg_max_iter,
                    sim.width, sim.deterministic)
    stats.add_time("pcg", t0)
    stats.cgItersPerNewton.append(res.iterations)
    stats.cgItersTotal += res.iterations
    stats.pcgResiduals.append(res.residual)
    if not res.converged:
        stats.pcgMaxIterFlags += 1
        log.warning("PCG stopped at %d iterations, residual %.3g", res.iterations, res.residual)
    D = res.d.reshape(-1, 3)
    if _direction_norm(system, D) <= sim.eps_d:
        return U, True

    t0 = time.perf_counter()
    X = system.full_positions(U)
    P = system.full_positions(D)
    sweep = find_stencils(system.surface, X, system.dhat, system.ground, displacement=P)
    kind, nodes = sweep
    alpha = 1.0
    if len(kind):
        st = np.maximum(nodes, 0)
        alpha = min(1.0, ccd_max_step(kind, X[st], P[st], _ground(system)))
    stats.add_time("ccd", t0)

    t0 = time.perf_counter()
    E0 = stats.energies[-1]
    while True:
        if alpha < MIN_ALPHA:
            stats.add_time("lineSearch", t0)
            raise SolverError(f"line search failed: step below {MIN_ALPHA:g}, |d| = {_direction_norm(system, D):.3g}, "
                              f"energy {E0:.6g}")
        Un = U + alpha * D
        E = ip_value(system, ctx, Un, sweep)
        if E < E0:
            break
        alpha *= 0.5
    stats.add_time("lineSearch", t0)
    stats.alphas.append(alpha)
    stats.energies.append(E)
    Xn = system.full_positions(Un)
    dmin = _min_distance(system, sweep, Xn)
    if dmin <= 0.0:
        raise SolverError("accepted iterate is not penetration free")
    stats.minDistances.append(dmin)
    return Un, False


def _min_distance(system, stencils, X):
    from ..contact.distance import pair_distance

    kind, nodes = stencils
    if len(kind) == 0:
        return np.inf
    d2 = pair_distance(kind, X[np.maximum(nodes, 0)], False, _ground(system))[0]
    return float(np.sqrt(d2.min()))


def advance_time_step(sim: Simulator):
    """Solve one implicit step and update velocities; returns the step's NewtonStats."""
    system, st = sim.system, sim.state
    dt = system.dt
    g = system.gravity
    U_t = st.dofs()
    X_t = system.full_positions(U_t)
    xHat = st.xS + dt * st.vS + dt * dt * g
    qHat = st.q + dt * st.vQ
    qHat[:, :3] += dt * dt * g
    t_next = st.time + dt
    U = U_t.copy()
    for idx, target in system.pin_targets(t_next):
        U[idx] = target
        xHat[idx] = target
    ctx = StepContext(xHat, qHat, sim.kappa, X_t)
    here = find_stencils(system.surface, X_t, system.dhat, system.ground)
    if not sim.kappa_tuned and len(here[0]):
        sim.kappa_tuned = _tune_kappa(sim, ctx, U, here)
    mu = system.config.friction_mu
    if mu > 0 and len(here[0]):
        kind, nodes, _ = _active(system, *here, X_t)
        st_pos = X_t[np.maximum(nodes, 0)]
        ctx.friction = friction_pairs_update(kind, nodes, st_pos, system.dhat, sim.kappa, _ground(system))
    else:
        ctx.friction = FrictionPair.empty()

    stats = NewtonStats()
    for _ in range(system.config.max_newton_per_step):
        U, done = newton_step(sim, ctx, U, stats)
        if done:
            stats.converged = True
            break
        stats.newtonIters += 1
    else:
        log.warning("step at t=%.4g hit the Newton iteration cap", t_next)
    nf = system.n_fem
    st.vS = (U[:nf] - st.xS) / dt
    st.vQ = (U[nf:].reshape(-1, 12) - st.q) / dt
    st.xS = U[:nf].copy()
    st.q = U[nf:].reshape(-1, 12).copy()
    st.xHat, st.qHat = xHat, qHat
    st.time = t_next
    dmin = _min_distance(system, find_stencils(system.surface, system.full_positions(U), system.dhat,
                                               system.ground), system.full_positions(U))
    if dmin < 0.5 * system.dhat and dmin < sim.prev_min_distance:
        sim.kappa = min(2.0 * sim.kappa, sim.kappa_max)
    sim.prev_min_distance = dmin
    stats.minDistance = dmin
    return stats
