# %% [markdown]
# A small cloth falling onto a block resting on the ground.

# %%
import tempfile
from pathlib import Path

import numpy as np

from ipcsim.scene import load_scene
from ipcsim.solver import Simulator

SCENE = """
[config]
dt = 0.01
dhat_rel = 1e-3
friction_mu = 0.2

[ground]
height = 0.0

[[object]]
name = "cloth"
role = "fem"
generate = { kind = "grid", size = [0.4, 0.4], res = [10, 10], plane = "xz", origin = [0.0, 0.1, 0.0] }
material = { density = 200.0, membrane = 5e4, strain_limit = 5e6, thickness = 1e-3, bending = 1e-4 }

[[object]]
name = "block"
role = "fem"
generate = { kind = "box", size = [0.15, 0.05, 0.15], res = [2, 1, 2], origin = [0.12, 0.0005, 0.12] }
material = { youngs = 1e6, poisson = 0.3 }
"""

path = Path(tempfile.mkdtemp()) / "drape.toml"
path.write_text(SCENE)
sim = Simulator(load_scene(path))
print(f"{sim.system.n_fem} nodes, dhat = {sim.system.dhat:.2e}")

# %%
for step in range(1, 41):
    h = sim.step()
    if step % 5 == 0:
        lowest = sim.state.xS[:121, 1].min()
        print(f"step {step:3d}  newton {h.newtonIters:2d}  cg {h.cgItersTotal:4d}  "
              f"min distance {h.minDistance:.2e}  lowest cloth y {lowest:.4f}")

# %%
# every accepted iterate lowered the incremental potential
print(all(np.all(np.diff(h.energies) < 0) for h in sim.history))
