"""The local quantum uncertainty computed three independent ways.

Run with ``python3 demos/03_three_routes_to_lqu.py``.
"""

# %%
import numpy as np

from dmlqu import (
    LocalObservable,
    ZModelParams,
    gibbs_state_numeric,
    hamiltonian_z,
    lqu_bruteforce,
    lqu_w,
    skew_information,
    thermal_lqu,
    variance_observable,
)

# %% [markdown]
# 1. the analytic omega eigenvalues of the X state,
# 2. the largest eigenvalue of the 3x3 W matrix built from sqrt(rho),
# 3. a direct search for the local observable with the least skew information.

# %%
p = ZModelParams(1.0, 0.5, 1.0)
for t in (0.5, 2.0, 8.0):
    closed = thermal_lqu("z-dm", p, t).lqu
    rho = gibbs_state_numeric(hamiltonian_z(p), t)
    print(f"T={t:4}: closed {closed.value:.10f} ({closed.branch}), "
          f"W {lqu_w(rho).value:.10f}, search {lqu_bruteforce(rho).value:.10f}")

# %% [markdown]
# For a pure state the skew information collapses to the ordinary variance
# of the observable.

# %%
rng = np.random.default_rng(0)
v = rng.normal(size=4) + 1j * rng.normal(size=4)
v /= np.linalg.norm(v)
pure = np.outer(v, v.conj())
obs = LocalObservable.from_angles(0.7, 1.9)
print("skew", skew_information(pure, obs), "variance", variance_observable(pure, obs))
