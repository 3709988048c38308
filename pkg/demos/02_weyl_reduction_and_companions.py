"""
Nodal curves, Weyl reduction and isotropic companions
=====================================================

A surface model lists its smooth rational curves (nodal roots) and an
ample class H. Reflecting a class in the roots it meets negatively walks
it into the nef chamber; there an isotropic class f with
0 < (D, f) <= sqrt(D^2) always exists, and it can be carried back.
"""

from enriques import NSClass, SurfaceModel, norm, pair
from enriques.surface import (find_isotropic_companion, find_nodal_cycle, is_effective,
                              is_nodal_cycle, validate, weyl_reduce)

# An E8 configuration of (-2)-curves. H = 18(e + f) - rho has degree 1 on
# every simple root.
rho = (46, 68, 91, 135, 110, 84, 57, 29)
H = NSClass((18, 18) + tuple(-c for c in rho))
roots = tuple(NSClass.simple_root(i) for i in range(1, 9))
X = SurfaceModel(classical=True, nodal_roots=roots, ample=H)
print("valid model:", validate(X) == [], " (H^2) =", norm(H))

# A class that meets some roots negatively
e, f = NSClass.u_block(1, 0), NSClass.u_block(0, 1)
D = 4 * e + 3 * f + NSClass.e8((1, 2, 2, 3, 2, 2, 1, 1))
trace = weyl_reduce(X, D)
print(f"D = {D}, (D^2) = {norm(D)}, (D, H) = {pair(D, H)}")
print(f"{len(trace.steps)} reflections, in roots", " ".join(str(s.root_index + 1) for s in trace.steps))
print("(., H) along the way:", [pair(s.after, H) for s in trace.steps[:6]], "...",
      pair(trace.final, H))
print("pull back recovers D:", trace.pull_back(trace.final) == D)
print("nef representative:", trace.final)
print("pairs with roots:", [pair(trace.final, d) for d in roots])

# The isotropic companion: searched exhaustively in the nef chamber
comp = find_isotropic_companion(X, D)
print(f"f = {comp.f}: (f^2) = {norm(comp.f)}, (D, f) = {comp.pairing} <= {comp.bound}")
print("f effective:", is_effective(X, comp.f))

# Nodal cycles: square -2 combinations of roots that do not split off
# anything of non-negative square
theta = NSClass.e8((2, 3, 4, 6, 5, 4, 3, 2))
print("highest root is a nodal cycle:", is_nodal_cycle(X, theta))
hit = find_nodal_cycle(X, theta + 2 * e)
print("nodal cycle congruent to theta + 2e mod 2:", hit.cycle, hit.coefficients)
