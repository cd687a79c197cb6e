# %% [markdown]
# # Eccentric cylinders: energy, force and the double series
#
# A dielectric rod of radius a sits off-centre by `offset` inside a
# cylindrical hole of radius b.  The energy drops as the rod moves towards
# the wall, so the force pushes it further off-centre.

# %%
import numpy as np

from casimir_polder import closed_forms as cf

a, b = 0.5, 2.0
print(" offset      energy        force")
for off in np.linspace(0.0, 1.4, 8):
    print(f"{off:7.3f}  {cf.energy_eccentric(a, b, off, 1.0): .6e}  {cf.force_eccentric(a, b, off, 1.0): .6e}")

# %% [markdown]
# Near the centre the force grows linearly with the offset.

# %%
for off in (1e-3, 1e-2, 1e-1):
    print(f"force/offset at {off:g}: {cf.force_eccentric(a, b, off, 1.0) / off:.6f}")

# %% [markdown]
# The same energy as a power series in a/b and offset/b converges quickly
# for small rods; the reported error is the size of the last terms kept.

# %%
for terms in (5, 10, 20, 40):
    s = cf.eccentric_series(0.3, 1.0, 0.2, 1.0, terms, terms)
    print(f"{terms:2d}x{terms:<2d} terms: {s.value:.15f}  (est. error {s.error_estimate:.1e})")
print("closed form:    ", f"{cf.energy_eccentric(0.3, 1.0, 0.2, 1.0):.15f}")
