# %% [markdown]
# Block Jacobi against connectivity-enhanced MAS on a stiff beam.
# Takes a minute or so.

# %%
from ipcsim import presets
from ipcsim.mas import hierarchy_summary
from ipcsim.solver import Simulator

for name in ("blockJacobi", "cemas16", "cemas32"):
    sim = Simulator(presets.load(presets.BEAM), name)
    hist = [sim.step() for _ in range(3)]
    solves = sum(len(h.cgItersPerNewton) for h in hist)
    cg = sum(h.cgItersTotal for h in hist)
    print(f"{name:12s} newton {solves:3d}  avg cg/newton {cg / solves:7.1f}")
    if name.startswith("cemas"):
        print("   ", hierarchy_summary(sim.precond.hierarchy))
