"""Temperature and DM sweeps, and how the two DM orientations compare.

Run with ``python3 demos/04_figure_presets.py``. Each preset can also be
written to disk with ``dmlqu figure NAME --out DIR``.
"""

# %%
import numpy as np

from dmlqu import XModelParams, ZModelParams, threshold_temperature
from dmlqu.sweeps import run_figure

# %% [markdown]
# LQU decays with temperature. The temperature where it first drops below
# 0.01 moves up as the DM strength grows.

# %%
fig = run_figure("fig1a")
for cfg, entry in zip(fig.configs, fig.meta["curves"]):
    t_grid = entry["threshold_t_lqu_below_0.01"]["z-dm"]
    t_exact = threshold_temperature("z-dm", ZModelParams(cfg.j, cfg.delta, cfg.dm))
    print(f"Dz={cfg.dm}: T* on grid {t_grid:.3f}, bisection {t_exact:.3f}")

# %% [markdown]
# As a function of Dz at fixed T the curve is symmetric with its minimum at
# Dz = 0.

# %%
for curve in run_figure("fig3").curves:
    lq = np.array([r.lqu for r in curve])
    print(f"T={curve[0].t}: min {lq.min():.4f} at Dz={curve[int(lq.argmin())].dm:+.2f}, edge {lq[0]:.4f}")

# %% [markdown]
# With the same strength D = 2, the x-axis interaction keeps more LQU than
# the z-axis one.

# %%
rows = run_figure("fig7").rows
for t in (0.5, 2.0, 10.0, 100.0):
    z, x = (min((r for r in rows if r.model == m), key=lambda r: abs(r.t - t)) for m in ("z-dm", "x-dm"))
    print(f"T~{z.t:8.3f}: LQU z {z.lqu:.5f}  x {x.lqu:.5f}")
print("x-model T*:", threshold_temperature("x-dm", XModelParams(1.0, 0.5, 2.0)))
