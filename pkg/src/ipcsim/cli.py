"""Command-line runner: ``ipcsim run`` simulates a scene, ``ipcsim verify`` runs oracle suites."""
import argparse
import csv
import logging
import os
import sys
import time
from pathlib import Path

import numpy as np

from . import presets
from .contact import PenetrationError
from .mas import MasError
from .scene import SceneError
from .solver import PRECONDITIONERS, Simulator, SolverError
from .sparse import dump_matrix

EXIT_OK, EXIT_USAGE, EXIT_SCENE, EXIT_SOLVER = 0, 1, 2, 3
THREADS_ENV = "IPCSIM_THREADS"
STATS_SCHEMA = "# schema: ipcsim-stats/1"
STATS_COLUMNS = ["step", "newtonIters", "cgIters", "assemblyTime", "pcgTime", "ccdTime", "lineSearchTime",
                 "minDistance"]
PHASES = ("assembly", "pcg", "ccd", "lineSearch")

log = logging.getLogger("ipcsim")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _default_threads():
    raw = os.environ.get(THREADS_ENV, "1")
    try:
        return max(int(raw), 1)
    except ValueError:
        return 1


def build_parser():
    p = _Parser(prog="ipcsim", description=__doc__)
    p.add_argument("-v", "--verbose", action="count", default=0)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    run = sub.add_parser("run", help="simulate a scene file or preset")
    run.add_argument("--scene", required=True, help="scene .toml path or preset name")
    run.add_argument("--frames", type=int, default=100)
    run.add_argument("--out", default="out")
    run.add_argument("--precond", choices=PRECONDITIONERS)
    run.add_argument("--subdomain", type=int, choices=(16, 32))
    run.add_argument("--threads", type=int, default=_default_threads(),
                     help=f"worker threads for dense kernels (default ${THREADS_ENV} or 1)")
    run.add_argument("--deterministic", action="store_true", help="sequential reductions, zeroed stats timings")
    run.add_argument("--dump-hessian", action="store_true", help="write every assembled Hessian")
    run.add_argument("--seed", type=int, default=0, help="graph partitioner seed")

    ver = sub.add_parser("verify", help="run an oracle suite")
    ver.add_argument("suite", choices=("fd-checks", "kernel-oracles", "mas-fixture", "stretch-study"))
    return p


def _limit_threads(n):
    try:
        from threadpoolctl import threadpool_limits
    except ImportError:
        return None
    return threadpool_limits(limits=n)


def write_frame(out, sim, frame):
    """One OBJ per object: surface triangles at the current positions."""
    from .scene import abd_world_positions, write_obj

    s = sim.system
    for mesh, o in zip(s.scene.meshes, s.mesh_offsets):
        x = sim.state.xS[o:o + len(mesh.vertices)]
        d = out / mesh.name
        d.mkdir(parents=True, exist_ok=True)
        write_obj(d / f"frame_{frame:05d}.obj", x, mesh.surface)
    for b, body in enumerate(s.scene.bodies):
        d = out / body.name
        d.mkdir(parents=True, exist_ok=True)
        write_obj(d / f"frame_{frame:05d}.obj", abd_world_positions(body, sim.state.q[b]), body.surface_triangles)


def summary_lines(history, wall):
    steps = max(len(history), 1)
    newton = sum(h.newtonIters for h in history)
    solves = sum(len(h.cgItersPerNewton) for h in history)
    cg = sum(h.cgItersTotal for h in history)
    t = {k: sum(h.timings[k] for h in history) for k in PHASES}
    return [
        "== summary ==",
        f"steps            {len(history)}",
        f"newton total     {newton}",
        f"newton avg/step  {newton / steps:.2f}",
        f"cg total         {cg}",
        f"cg avg/solve     {cg / max(solves, 1):.1f}",
        "time [s]         " + "  ".join(f"{k}={v:.2f}" for k, v in t.items()),
        f"wall [s]         {wall:.2f}",
        f"capped steps     {sum(not h.converged for h in history)}",
        f"pcg maxIter hits {sum(h.pcgMaxIterFlags for h in history)}",
    ]


def _row(step, h, zero_time):
    times = [0.0] * 4 if zero_time else [h.timings[k] for k in PHASES]
    return [step, h.newtonIters, h.cgItersTotal, *(f"{v:.6f}" for v in times), repr(float(h.minDistance))]


def cmd_run(args):
    out = Path(args.out)
    try:
        scene = presets.load(args.scene)
    except (SceneError, FileNotFoundError) as exc:
        print(f"scene error: {exc}", file=sys.stderr)
        return EXIT_SCENE
    if args.frames < 0:
        print("--frames must be nonnegative", file=sys.stderr)
        return EXIT_USAGE
    if args.subdomain:
        scene.config.subdomain_size = args.subdomain
    precond = args.precond or (f"cemas{args.subdomain}" if args.subdomain else None)
    try:
        out.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        print(f"cannot write to {out}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    limiter = _limit_threads(args.threads)
    t_start = time.perf_counter()
    try:
        sim = Simulator(scene, precond, deterministic=args.deterministic or None, seed=args.seed)
    except (SceneError, ValueError) as exc:
        print(f"scene error: {exc}", file=sys.stderr)
        return EXIT_SCENE
    if args.dump_hessian:
        hdir = out / "hessian"
        hdir.mkdir(exist_ok=True)
        sim.hessian_hook = lambda step, it, A: dump_matrix(A, hdir / f"step{step + 1:05d}_newton{it:03d}.txt")
    zero_time = sim.deterministic
    code = EXIT_OK
    with open(out / "stats.csv", "w", newline="") as fs, open(out / "timings.csv", "w", newline="") as ft:
        stats, timings = csv.writer(fs), csv.writer(ft)
        fs.write(STATS_SCHEMA + "\n")
        ft.write(STATS_SCHEMA + "\n")
        stats.writerow(STATS_COLUMNS)
        timings.writerow(STATS_COLUMNS)
        for step in range(1, args.frames + 1):
            try:
                h = sim.step()
            except (SolverError, MasError, PenetrationError, np.linalg.LinAlgError, FloatingPointError) as exc:
                print(f"solver failure at step {step}: {exc}", file=sys.stderr)
                code = EXIT_SOLVER
                break
            stats.writerow(_row(step, h, zero_time))
            timings.writerow(_row(step, h, False))
            write_frame(out, sim, step)
            log.info("step %d: newton %d, cg %d, min distance %.3g", step, h.newtonIters, h.cgItersTotal,
                     h.minDistance)
    lines = summary_lines(sim.history, time.perf_counter() - t_start)
    (out / "summary.txt").write_text("\n".join(lines) + "\n")
    print("\n".join(lines))
    if limiter is not None:
        limiter.restore_original_limits()
    return code


def cmd_verify(args):
    from .verify import run_suite

    ok, lines = run_suite(args.suite)
    print("\n".join(lines))
    return EXIT_OK if ok else EXIT_SOLVER


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2),
                        format="%(levelname)s %(name)s: %(message)s")
    if args.command == "run":
        return cmd_run(args)
    return cmd_verify(args)


if __name__ == "__main__":
    sys.exit(main())
