"""Thermal states in closed form, and the double Hadamard trick for the x model.

Run with ``python3 demos/02_thermal_states.py``.
"""

# %%
import numpy as np
from scipy.linalg import expm

from dmlqu import (
    XModelParams,
    ZModelParams,
    double_hadamard,
    hamiltonian_x,
    hamiltonian_z,
    partition_x,
    partition_z,
    thermal_state_x_closed,
    thermal_state_x_hadamard_closed,
    thermal_state_z_closed,
)

np.set_printoptions(precision=4, suppress=True)
T = 1.5

# %% [markdown]
# The z-axis model's Gibbs state is already an X state.

# %%
pz = ZModelParams(1.0, 0.5, 1.0)
rho_z = thermal_state_z_closed(pz, T).to_matrix()
ref = expm(-hamiltonian_z(pz) / T)
print(rho_z.real)
print("vs expm:", np.abs(rho_z - ref / np.trace(ref)).max(), " log Z =", partition_z(pz, T).log)

# %% [markdown]
# The x-axis state is centrosymmetric rather than X shaped. Conjugating by
# H x H moves all of its weight onto the X pattern.

# %%
px = XModelParams(1.0, 0.5, 1.0)
rho_x = thermal_state_x_closed(px, T)
print(np.abs(rho_x))
rotated = double_hadamard(rho_x)
print(np.abs(rotated))
print("vs closed X form:", np.abs(rotated - thermal_state_x_hadamard_closed(px, T).to_matrix()).max())
print("applied twice gives back rho:", np.abs(double_hadamard(rotated) - rho_x).max())
print("log Z' =", partition_x(px, T).log)

# %% [markdown]
# The closed forms shift exponents by the ground energy, so they stay finite
# far below the temperatures where exp(-H/T) would overflow.

# %%
print(thermal_state_z_closed(pz, 1e-4).populations)
