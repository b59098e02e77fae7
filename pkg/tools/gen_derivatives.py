"""Generate closed-form value/gradient/Hessian kernels with sympy.

Writes vectorized numpy code for the squared-distance primitives used by the
contact barrier and for the hinge dihedral angle used by bending. Run from the
repository root::

    python3 tools/gen_derivatives.py
"""
import textwrap
from pathlib import Path

import sympy as sp
from sympy.printing.numpy import NumPyPrinter

ROOT = Path(__file__).resolve().parents[1] / "src" / "ipcsim"


def vec(name, i):
    return sp.Matrix(sp.symbols(f"{name}{i}_0:3", real=True))


def emit(fname, argnames, expr, doc):
    pts = [vec(a, "") for a in argnames]
    flat = [s for p in pts for s in p]
    n = len(flat)
    grad = [sp.diff(expr, s) for s in flat]
    hess = {}
    for i in range(n):
        for j in range(i, n):
            hess[(i, j)] = sp.diff(grad[i], flat[j])
    keys = list(hess)
    exprs = [expr] + grad + [hess[k] for k in keys]
    repl, red = sp.cse(exprs, symbols=sp.numbered_symbols("t"), optimizations="basic")
    pr = NumPyPrinter({"fully_qualified_modules": False, "allow_unknown_functions": True})

    lines = [f"def {fname}({', '.join(argnames)}):", f'    """{doc}"""']
    for a, p in zip(argnames, pts):
        for k, s in enumerate(p):
            lines.append(f"    {s} = {a}[..., {k}]")
    for sym, e in repl:
        lines.append(f"    {sym} = {pr.doprint(e)}")
    lines.append(f"    val = {pr.doprint(red[0])}")
    lines.append(f"    shape = np.broadcast(*[{', '.join(str(s) for s in flat)}]).shape")
    lines.append(f"    g = np.empty(shape + ({n},))")
    for i in range(n):
        lines.append(f"    g[..., {i}] = {pr.doprint(red[1 + i])}")
    lines.append(f"    h = np.empty(shape + ({n}, {n}))")
    for idx, (i, j) in enumerate(keys):
        e = pr.doprint(red[1 + n + idx])
        lines.append(f"    h[..., {i}, {j}] = {e}")
        if i != j:
            lines.append(f"    h[..., {j}, {i}] = h[..., {i}, {j}]")
    lines.append("    return val + np.zeros(shape), g, h")
    return "\n".join(lines).replace("numpy.", "np.")


def distance_module():
    p, q = vec("p", ""), vec("q", "")
    out = []
    out.append(emit("pp_d2", ["p", "q"], (p - q).dot(p - q),
                    "Squared point-point distance with gradient and Hessian."))

    p, e0, e1 = vec("p", ""), vec("e0", ""), vec("e1", "")
    c = (e0 - p).cross(e1 - p)
    out.append(emit("pe_d2", ["p", "e0", "e1"],
                    c.dot(c) / (e1 - e0).dot(e1 - e0),
                    "Squared point-line distance with gradient and Hessian."))

    p, t0, t1, t2 = vec("p", ""), vec("t0", ""), vec("t1", ""), vec("t2", "")
    n = (t1 - t0).cross(t2 - t0)
    out.append(emit("pt_d2", ["p", "t0", "t1", "t2"],
                    (p - t0).dot(n) ** 2 / n.dot(n),
                    "Squared point-plane distance with gradient and Hessian."))

    a0, a1, b0, b1 = vec("a0", ""), vec("a1", ""), vec("b0", ""), vec("b1", "")
    n = (a1 - a0).cross(b1 - b0)
    out.append(emit("ee_d2", ["a0", "a1", "b0", "b1"],
                    (b0 - a0).dot(n) ** 2 / n.dot(n),
                    "Squared line-line distance with gradient and Hessian."))
    return out


def hinge_module():
    x0, x1, x2, x3 = (vec(f"x{i}", "") for i in range(4))
    e = x1 - x0
    n1 = e.cross(x2 - x0)
    n2 = (x3 - x0).cross(e)
    elen = sp.sqrt(e.dot(e))
    y = n1.cross(n2).dot(e) / elen
    x = n1.dot(n2)
    theta = sp.atan2(y, x)
    return [emit("dihedral_angle", ["x0", "x1", "x2", "x3"], theta,
                 "Signed dihedral angle of the hinge (x0, x1) with wings x2, x3.")]


HEADER = '''"""Generated by tools/gen_derivatives.py. Do not edit."""
import numpy as np
from numpy import sqrt, arctan2


'''


def main():
    (ROOT / "contact" / "_distance_gen.py").write_text(HEADER + "\n\n\n".join(distance_module()) + "\n")
    (ROOT / "elastic" / "_hinge_gen.py").write_text(HEADER + "\n\n\n".join(hinge_module()) + "\n")


if __name__ == "__main__":
    main()
