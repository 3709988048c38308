"""
The Neron-Severi lattice of an Enriques surface
===============================================

Numerically, NS(X) is U + E8(-1): an even unimodular lattice of rank 10
and signature (1, 9). A classical surface also carries the 2-torsion
class K_X, which is invisible to the intersection form.
"""

from enriques import GRAM, NSClass, enumerate_by_norm, enumerate_isotropic, norm, pair, reflect
from enriques.lattice import E8_HIGHEST_ROOT, e8_roots

print("Gram matrix")
print(GRAM.matrix)
print("det =", GRAM.determinant(), " even:", GRAM.is_even(), " signature:", GRAM.signature())

# e and f span the hyperbolic plane; K_X pairs to zero with everything
e, f, K = NSClass.u_block(1, 0), NSClass.u_block(0, 1), NSClass.canonical()
print("(e, f) =", pair(e, f), " (e, e) =", norm(e), " (K, e + f) =", pair(K, e + f))
print("K + K =", K + K)

# The E8 block holds 240 roots. Their coordinates in the simple-root basis
# reach 6 (the highest root), so a height bound of 1 or 2 misses many.
roots = e8_roots()
print("E8 roots:", len(roots))
for h in (1, 2, 4, 6):
    print(f"  with coordinates bounded by {h}: {len(enumerate_by_norm(-2, h, block='E8'))}")

theta = NSClass.e8(E8_HIGHEST_ROOT)
print("highest root", theta, "has square", norm(theta))

# Reflection in a root is an isometry of order two
x = 3 * e + 2 * f + NSClass.simple_root(8)
y = reflect(theta, x)
print("(x, theta) =", pair(x, theta))
print("s_theta(x) =", y, " norm preserved:", norm(x) == norm(y), " involution:", reflect(theta, y) == x)

# Isotropic classes pairing to 1 with e + f
print("isotropic, (e + f, x) = 1:", [str(c) for c in enumerate_isotropic(e + f, 1)])
