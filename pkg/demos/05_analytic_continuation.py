# %% [markdown]
# # Two kinds of analytic continuation
#
# First: the energy of two separate parallel cylinders, evaluated with the
# radii and axis separation of a rod inside a hole, gives the eccentric energy
# once the sign of the root is fixed.

# %%
from casimir_polder import closed_forms as cf
from casimir_polder.pairwise import self_energy_integral_regulated

for a, b, off in [(0.5, 2.0, 0.5), (1.0, 3.0, 1.5), (0.2, 1.0, 0.0)]:
    cont = cf.continue_cyl_cyl_to_contained(a, b, off, 1.0)
    print(f"a={a} b={b} offset={off}: continued {cont:.15e}  eccentric {cf.energy_eccentric(a, b, off, 1.0):.15e}")

# %% [markdown]
# Second: the self-energy of a single dilute cylinder is divergent.  With the
# singular power replaced by a free exponent beta, the integral converges for
# beta < 1 and matches a closed form that is analytic in beta.  At the
# physical value beta = 5 it vanishes.

# %%
for beta in (-1.0, 0.0, 0.5, 0.9):
    num = self_energy_integral_regulated(1.0, 1.0, beta).value
    print(f"beta={beta:4}: quadrature {num: .12f}  closed form {cf.self_energy_regulated(1.0, 1.0, beta): .12f}")
for beta in (4.0, 4.5, 5.0, 5.5):
    print(f"beta={beta}: closed form {cf.self_energy_regulated(1.0, 1.0, beta): .6f}")
