# %% [markdown]
# # Closed-form energies for simple geometries
#
# Each geometry object knows its closed-form energy and its units.  Energies
# of infinite cylinders are per unit length; plates are per unit area.

# %%
from casimir_polder.geometry import (Coaxial, CylinderPlane, Eccentric, ParallelCylinders, Plates,
                                     SelfCylinder, SpherePlane)
from casimir_polder.kernel import coupling_n

n = coupling_n(0.1, 0.1)
for geom in (ParallelCylinders(1.0, 1.0, 3.0), CylinderPlane(1.0, 2.0), SpherePlane(1.0, 2.0),
             Coaxial(1.0, 2.0), Eccentric(1.0, 2.0, 0.5), Plates(1.0), SelfCylinder(1.0)):
    print(f"{geom.kind:>14}: {geom.energy(n): .6e}  [{geom.unit_kind.dimension}]")

# %% [markdown]
# Large radii at a fixed gap reproduce flat geometries: two huge cylinders
# look like a cylinder over a plane, and a thin coaxial shell looks like two
# plates.

# %%
from casimir_polder import closed_forms as cf

for b in (1e1, 1e2, 1e3, 1e4):
    print(f"b={b:g}: cyl-cyl / cyl-plane = {cf.energy_cyl_cyl(1.0, b, b + 2.0, 1.0) / cf.energy_cyl_plane(1.0, 2.0, 1.0):.6f}")
for b in (1e1, 1e2, 1e3):
    per_area = cf.energy_coaxial(b - 1.0, b, 1.0) / (2 * 3.141592653589793 * b)
    print(f"b={b:g}: coaxial per area / plates = {per_area / cf.energy_plates_dilute(1.0, 1.0):.6f}")
