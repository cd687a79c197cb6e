# %% [markdown]
# # From the Green's dyadic to the 1/R^7 pair kernel
#
# The Casimir-Polder interaction between two dilute volume elements follows
# from the free Green's dyadic.  Here we check the dyadic against numerical
# derivatives of the scalar Green's function, contract it, and integrate over
# imaginary frequency to get the constant 23.

# %%
import math

import numpy as np

from casimir_polder import kernel
from casimir_polder.kernel import MaterialPair
from casimir_polder.verification import fd_dyadic

r, r_prime, zeta = np.array([0.3, -0.2, 1.1]), np.array([-0.5, 0.4, 0.0]), 0.8
closed = kernel.dyadic_tensor(r, r_prime, zeta)
numeric = fd_dyadic(r, r_prime, zeta, 3e-5)
print("closed-form dyadic:\n", closed)
print("max deviation from finite differences:", np.max(np.abs(closed - numeric)))

# %% [markdown]
# The squared dyadic, with (4 pi R^3)^2 stripped, is a polynomial in
# t = |zeta| R times exp(-2t).  Integrating it over frequency gives 23.

# %%
dist = np.linalg.norm(r - r_prime)
t = zeta * dist
print("sum of squares:", np.sum(closed**2) * (4 * math.pi * dist**3) ** 2)
print("polynomial:    ", kernel.contraction_polynomial(t))
print("frequency integral:", kernel.frequency_integral())

# %% [markdown]
# Material enters through one number, the coupling N.  Integrating the 3D
# kernel along a line gives the 2D kernel used for parallel cylinders.

# %%
mat = MaterialPair.from_permittivities(1.1, 1.1)
print("N for eps = 1.1:", mat.n)
for s in (0.5, 1.0, 2.0):
    print(f"s={s}: 3D kernel {kernel.pair_kernel_3d(s, mat):.6e}, 2D kernel {kernel.pair_kernel_2d(s, mat):.6e}")
