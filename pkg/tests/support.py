"""Surface models and seeded samplers shared by the tests."""

from __future__ import annotations

import random

from enriques import MukaiVector, NSClass, SurfaceModel, norm, pair

# rho in simple-root coordinates; (H, alpha_i) = 1 for H = 18(e + f) - rho
RHO = (46, 68, 91, 135, 110, 84, 57, 29)
H_STD = NSClass((18, 18) + tuple(-c for c in RHO))

E = NSClass.u_block(1, 0)
F = NSClass.u_block(0, 1)
K = NSClass.canonical()


def alpha(i: int) -> NSClass:
    return NSClass.simple_root(i)


CONFIGS = {
    "A1": (alpha(1),),
    "A2": (alpha(1), alpha(3)),
    "A3": (alpha(1), alpha(3), alpha(4)),
    "D4": (alpha(2), alpha(3), alpha(4), alpha(5)),
    "E8": tuple(alpha(i) for i in range(1, 9)),
    # affine A1: alpha_1 and e - alpha_1 meet with multiplicity 2
    "A1~": (alpha(1), E - alpha(1)),
    # affine A2: a triangle of (-2)-curves
    "A2~": (alpha(1), alpha(3), E - alpha(1) - alpha(3)),
    # two affine A1 fibres in the same pencil; e has two root representations
    "2A1~": (alpha(1), E - alpha(1), alpha(8), E - alpha(8)),
}


def model(name: str, classical: bool = True, **kw) -> SurfaceModel:
    if name == "unnodal":
        return SurfaceModel.unnodal(classical, **kw)
    return SurfaceModel(classical, CONFIGS[name], H_STD, **kw)


def random_class(rng: random.Random, height: int = 3, torsion: bool = False) -> NSClass:
    return NSClass(tuple(rng.randint(-height, height) for _ in range(10)),
                   rng.randint(0, 1) if torsion else 0)


def random_effective(rng: random.Random, m: SurfaceModel, lo: int = 2, hi: int = 50,
                     height: int = 3) -> NSClass:
    """Seeded class with lo <= (D^2) <= hi and (D, H) > 0 (hence effective)."""
    while True:
        x = random_class(rng, height)
        if lo <= norm(x) <= hi:
            return x if pair(x, m.ample) > 0 else -x


def random_vector(rng: random.Random, classical: bool = True, max_rank: int = 6,
                  height: int = 2, rank_min: int = 0) -> MukaiVector:
    r = rng.randint(rank_min, max_rank)
    L = random_class(rng, height, torsion=classical)
    a2 = rng.randint(-8, 8)
    if (a2 - r) % 2:
        a2 += 1
    return MukaiVector(r, L, a2)
