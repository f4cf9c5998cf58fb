"""Energy levels of the two DM models and where the ground state sits.

Run with ``python3 demos/01_spectra_and_ground_states.py``.
"""

# %%
import numpy as np

from dmlqu import XModelParams, ZModelParams, ground_state, hamiltonian_x, hamiltonian_z, spectrum_x, spectrum_z

# %% [markdown]
# The analytic levels come out labelled. We check them against a plain
# numerical diagonalization of the Hamiltonian matrix.

# %%
pz = ZModelParams(j=1.0, delta=0.5, dz=1.0)
px = XModelParams(j=1.0, delta=0.5, dx=1.0)

for name, spec, h in (("z-axis DM", spectrum_z(pz), hamiltonian_z(pz)), ("x-axis DM", spectrum_x(px), hamiltonian_x(px))):
    print(name)
    for lv in spec.levels:
        print(f"  {lv.label}: {lv.energy:+.6f}")
    print("  max |analytic - eigvalsh| =", np.abs(np.sort(spec.energies) - np.linalg.eigvalsh(h)).max())

# %% [markdown]
# For antiferromagnetic coupling (J > 0) the lowest level is z4 / x4. With
# ferromagnetic coupling the x-axis model can instead settle in x1.

# %%
for j in (1.0, -1.0):
    for spec in (spectrum_z(ZModelParams(j, 0.5, 1.0)), spectrum_x(XModelParams(j, 0.5, 1.0))):
        g = ground_state(spec)
        print(f"J={j:+}: ground {g.ground_label} at {g.ground_energy:+.4f}, gap {g.gap:.4f}, "
              f"maximally entangled: {g.maximally_entangled}")
