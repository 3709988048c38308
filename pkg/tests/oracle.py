"""Brute-force reference implementations for cross-checking the library.

Nothing here is clever: full box enumeration, no pruning beyond what is
needed to fit in memory. The Gram matrix is rebuilt from a literal E8
Cartan matrix rather than imported, so the oracle shares no arithmetic
with the code under test.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass

import numpy as np

from enriques.lattice import NSClass

# Bourbaki E8 Cartan matrix, written out by hand.
CARTAN_E8 = np.array([
    [2, 0, -1, 0, 0, 0, 0, 0],
    [0, 2, 0, -1, 0, 0, 0, 0],
    [-1, 0, 2, -1, 0, 0, 0, 0],
    [0, -1, -1, 2, -1, 0, 0, 0],
    [0, 0, 0, -1, 2, -1, 0, 0],
    [0, 0, 0, 0, -1, 2, -1, 0],
    [0, 0, 0, 0, 0, -1, 2, -1],
    [0, 0, 0, 0, 0, 0, -1, 2],
], dtype=np.int64)

GRAM = np.zeros((10, 10), dtype=np.int64)
GRAM[0, 1] = GRAM[1, 0] = 1
GRAM[2:, 2:] = -CARTAN_E8


@dataclass(frozen=True)
class OracleConfig:
    height_bound: int = 1
    coeff_bound: int = 3
    sample_count: int = 200
    seed: int = 20240601

    def rng(self) -> random.Random:
        return random.Random(self.seed)


def o_pair(x, y) -> int:
    return int(np.asarray(x.free if isinstance(x, NSClass) else x) @ GRAM
               @ np.asarray(y.free if isinstance(y, NSClass) else y))


def _box(dim: int, h: int) -> np.ndarray:
    axes = [np.arange(-h, h + 1)] * dim
    return np.stack(np.meshgrid(*axes, indexing="ij"), -1).reshape(-1, dim)


def e8_box_bounds() -> list[int]:
    """Per-coordinate bound for Cartan-norm-2 vectors.

    y_i is the Cartan product of y with the i-th dual basis vector, so by
    Cauchy-Schwarz y_i^2 <= 2 (C^-1)_ii.
    """
    inv_diag = np.diag(np.linalg.inv(CARTAN_E8.astype(float)))
    return [int(math.floor(math.sqrt(2 * d) + 1e-9)) for d in inv_diag]


def oracle_root_count(block: str = "E8", height: int | None = None) -> int:
    """Count norm -2 vectors by exhaustive box enumeration.

    ``block="E8"`` uses the provably sufficient box unless ``height`` caps it;
    ``"U"`` uses |m|, |n| <= 1 (2mn = -2 forces mn = -1); ``"all"`` scans
    the full 10-dimensional box of the given height.
    """
    if block == "U":
        h = 1 if height is None else height
        pts = _box(2, h)
        return int(np.sum(2 * pts[:, 0] * pts[:, 1] == -2))
    if block == "E8":
        bounds = e8_box_bounds()
        if height is not None:
            bounds = [min(b, height) for b in bounds]
        head = list(itertools.product(*(range(-b, b + 1) for b in bounds[:3])))
        tail_axes = [np.arange(-b, b + 1) for b in bounds[3:]]
        tail = np.stack(np.meshgrid(*tail_axes, indexing="ij"), -1).reshape(-1, 5)
        count = 0
        for h3 in head:
            full = np.concatenate([np.broadcast_to(np.array(h3), (len(tail), 3)), tail], axis=1)
            q = ((full @ CARTAN_E8) * full).sum(axis=1)
            count += int(np.sum(q == 2))
        return count
    if block == "all":
        if height is None:
            raise ValueError("full-lattice count needs a height")
        return int(sum(np.sum(_norms(chunk) == -2) for chunk in _chunks(height)))
    raise ValueError(block)


def _chunks(h: int):
    """The 10-dim box of height h, in chunks fixed on the first two coordinates."""
    rest = _box(8, h)
    for a in range(-h, h + 1):
        for b in range(-h, h + 1):
            head = np.broadcast_to(np.array([a, b]), (len(rest), 2))
            yield np.concatenate([head, rest], axis=1)


def _norms(pts: np.ndarray) -> np.ndarray:
    return ((pts @ GRAM) * pts).sum(axis=1)


def oracle_isotropic_exhaustive(D: NSClass, height: int) -> list[NSClass]:
    """All isotropic x with max |coordinate| <= height and (D, x) > 0."""
    d = np.asarray(D.free) @ GRAM
    out = []
    for chunk in _chunks(height):
        mask = (_norms(chunk) == 0) & (chunk @ d > 0)
        out.extend(NSClass(tuple(int(c) for c in row)) for row in chunk[mask])
    return out


def _combos(roots, bound):
    k = len(roots)
    R = np.array([r.free for r in roots], dtype=np.int64).reshape(k, 10)
    table = {}
    for b in itertools.product(range(bound + 1), repeat=k):
        key = tuple(int(c) for c in np.asarray(b, dtype=np.int64) @ R)
        table.setdefault(key, []).append(b)
    return table


def oracle_decompositions(roots, D: NSClass, bound: int):
    """Every splitting D = C + C' with C, C' nonzero non-negative root
    combinations (coefficients <= bound). Returns (C, C') coordinate pairs."""
    table = _combos(roots, bound)
    zero = (0,) * 10
    target = D.free
    out = []
    for c in table:
        if c == zero:
            continue
        rest = tuple(t - x for t, x in zip(target, c))
        if rest != zero and rest in table:
            out.append((c, rest))
    return out


def oracle_is_nodal(roots, D: NSClass, bound: int) -> bool:
    if D.torsion or o_pair(D, D) != -2:
        return False
    table = _combos(roots, bound)
    if D.free not in table or not any(D.free):
        return False
    for c, rest in oracle_decompositions(roots, D, bound):
        if o_pair(c, c) >= 0 or o_pair(rest, rest) >= 0:
            return False
    return True
