"""
The Fourier-Mukai involution on Mukai vectors
=============================================

On K(X) the transform sends E to chi(E)(O_X + O_X(K_X)) - E. It is an
involution, an isometry of the Mukai pairing, and it swaps rank with s.
"""

import random

from enriques import MukaiVector, NSClass, SurfaceModel
from enriques.existence import decide_existence
from enriques.fmtransform import fm_closed, fm_ktheory
from enriques.mukai import V_OK, V_OX, V_POINT, chi, mukai_pair, mukai_square

K = NSClass.canonical()
e, f = NSClass.u_block(1, 0), NSClass.u_block(0, 1)

# Skyscraper sheaves go to v0 = (2, K, 0), and O_X is exchanged with O_X(K_X)
print("v(k_x)    ->", fm_ktheory(V_POINT))
print("v(O)      ->", fm_ktheory(V_OX))
print("v(O(K))   ->", fm_ktheory(V_OK))
print("non-classical v(O) ->", fm_ktheory(V_OX, classical=False))

v = MukaiVector(3, 2 * e + f + K, 1)
w = fm_ktheory(v)
print(f"\nv = {v}  chi = {chi(v)}  <v^2> = {mukai_square(v)}")
print(f"Phi(v) = {w}  chi = {chi(w)}  <Phi(v)^2> = {mukai_square(w)}")
print("Phi(Phi(v)) == v:", fm_ktheory(w) == v)

# The closed formula agrees with the K-theory one for even rank
u = MukaiVector(2, e + 3 * f, 4)
print(f"\nclosed form {fm_closed(u)}  K-theory {fm_ktheory(u)}")

# Random check of the isometry property
rng = random.Random(0)


def random_vector():
    r = rng.randint(0, 6)
    L = NSClass(tuple(rng.randint(-3, 3) for _ in range(10)), rng.randint(0, 1))
    return MukaiVector(r, L, r + 2 * rng.randint(-4, 4))


bad = 0
for _ in range(1000):
    a, b = random_vector(), random_vector()
    bad += mukai_pair(fm_ktheory(a), fm_ktheory(b)) != mukai_pair(a, b)
print("pairing violations in 1000 random pairs:", bad)

# Existence verdicts are unchanged by the transform
X = SurfaceModel.unnodal(classical=True)
for v in (MukaiVector(2, K, 4), MukaiVector(1, e + f, 3), MukaiVector(3, 2 * e + f + K, 1), MukaiVector(2, 2 * e + 2 * f + K, 4)):
    a, b = decide_existence(X, v), decide_existence(X, fm_ktheory(v))
    print(f"{str(v):36s} {a.nonempty!s:5s} -> {str(fm_ktheory(v)):36s} {b.nonempty}")
