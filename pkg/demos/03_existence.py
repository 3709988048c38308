"""
Which moduli spaces of stable sheaves are non-empty?
====================================================

For primitive v = (r, L, s/2) write q = (L^2) - rs. The verdict depends on
gcd(r, L, s), on q, and in the boundary cases on L mod 2 and on the nodal
curves of the surface.
"""

from enriques import MukaiVector, NSClass, SurfaceModel
from enriques.existence import decide, decide_existence

e, f, K = NSClass.u_block(1, 0), NSClass.u_block(0, 1), NSClass.canonical()
delta = NSClass.simple_root(1)
H = NSClass((18, 18, -46, -68, -91, -135, -110, -84, -57, -29))

X = SurfaceModel(classical=True, nodal_roots=(delta, NSClass.simple_root(3)), ample=H)
Y = X.twin()  # same curves, K_X = 0
unnodal = SurfaceModel.unnodal(classical=True)


def show(label, model, v):
    verdict = decide(model, v)
    state = {True: "non-empty", False: "empty", None: "unknown"}[verdict.nonempty]
    extra = f", witness {verdict.witness}" if verdict.witness is not None else ""
    dim = f", dim {verdict.dimension} ({verdict.dimension_kind})" if verdict.nonempty else ""
    print(f"{label:32s} q = {verdict.q:3d}  {state:9s} case {verdict.case or '-'}{dim}{extra}")


# v0 = v(O + O(K) - k_x): its moduli space is the surface itself
show("v0 = (2, K, 0)", unnodal, MukaiVector(2, K, 0))
show("line bundle (1, e + f, 3)", unnodal, MukaiVector(1, e + f, 3))
show("(2, 2e + 2f + K, 0)", unnodal, MukaiVector(2, 2 * e + 2 * f + K, 0))
show("(2, 2e, 0)", unnodal, MukaiVector(2, 2 * e, 0))
show("rank 0: (0, e + f, 0)", unnodal, MukaiVector(0, e + f, 0))

# Spherical rank 2: existence is governed by nodal cycles mod 2, and the
# K_X shift is what separates classical from non-classical surfaces.
print()
show("classical (2, delta + K, 0)", X, MukaiVector(2, delta + K, 0))
show("classical (2, delta, 0)", X, MukaiVector(2, delta, 0))
show("non-classical (2, delta, 0)", Y, MukaiVector(2, delta, 0))
show("unnodal (2, delta + K, 0)", unnodal, MukaiVector(2, delta + K, 0))

# Nothing with q < -2 is ever stable
print()
show("(2, delta, 2)", X, MukaiVector(2, delta, 2))

# A bounded search that cannot decide reports it
theta = NSClass.e8((2, 3, 4, 6, 5, 4, 3, 2))
E8 = SurfaceModel(True, tuple(NSClass.simple_root(i) for i in range(1, 9)), H, coeff_bound=1)
verdict = decide_existence(E8, MukaiVector(2, theta + K, 0))
print("\nE8 with coeff_bound 1:", verdict.nonempty, "-", verdict.notes[-1])
show("... with coeff_bound 6", E8.with_bounds(coeff_bound=6), MukaiVector(2, theta + K, 0))
