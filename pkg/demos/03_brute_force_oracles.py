# %% [markdown]
# # Brute-force pairwise summation as an oracle
#
# The closed forms are checked by integrating the pair kernel directly over
# both bodies: 4D for cylinder cross-sections, 6D for a ball above a
# half-space.  Each result carries an error estimate from the cubature.

# %%
from casimir_polder import closed_forms as cf
from casimir_polder.cubature import QuadratureConfig
from casimir_polder.kernel import MaterialPair
from casimir_polder.pairwise import coaxial_reduced, energy_pair_2d, energy_pair_3d
from casimir_polder.regions import Ball, Disk, ExteriorDisk, HalfPlane, HalfSpace, min_separation

unit = MaterialPair.from_coupling(1.0)
cases = [
    ("eccentric", Disk(0.5, (0.5, 0.0)), ExteriorDisk(2.0), cf.energy_eccentric(0.5, 2.0, 0.5, 1.0)),
    ("cyl-plane", Disk(1.0, (2.0, 0.0)), HalfPlane(0.0, -1), cf.energy_cyl_plane(1.0, 2.0, 1.0)),
    ("cyl-cyl", Disk(1.0), Disk(1.0, (3.0, 0.0)), cf.energy_cyl_cyl(1.0, 1.0, 3.0, 1.0)),
]
for name, body1, body2, exact in cases:
    res = energy_pair_2d(body1, body2, unit)
    print(f"{name:>10}: gap {min_separation(body1, body2).distance:.2f}  integrated {res.value:.8f} "
          f"+/- {res.error_estimate:.1e}  closed {exact:.8f}")

# %%
res = energy_pair_3d(Ball(1.0, (0.0, 0.0, 2.0)), HalfSpace(0.0, -1), unit)
print(f"sphere-plane: {res.value:.8f} +/- {res.error_estimate:.1e} vs {cf.energy_sphere_plane(1.0, 2.0, 1.0):.8f} "
      f"({res.evaluations_used} evaluations)")

# %% [markdown]
# For the coaxial case the angular integral can be done analytically, which
# leaves a 2D integral that quadrature handles to near machine precision.

# %%
print("coaxial reduced:", coaxial_reduced(1.0, 2.0, 1.0).value, "closed:", cf.energy_coaxial(1.0, 2.0, 1.0))

# %% [markdown]
# Quasi Monte Carlo is available too; results are reproducible for a fixed seed.

# %%
cfg = QuadratureConfig(rel_tol=1e-3, method="qmc", seed=1)
a = energy_pair_2d(Disk(1.0), ExteriorDisk(2.0), unit, cfg)
b = energy_pair_2d(Disk(1.0), ExteriorDisk(2.0), unit, cfg)
print("qmc:", a.value, "+/-", a.error_estimate, "identical rerun:", a == b)
