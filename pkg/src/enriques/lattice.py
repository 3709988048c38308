"""Exact arithmetic in the numerical Neron-Severi lattice of an Enriques surface.

The free part of NS(X) is the even unimodular lattice U + E8(-1) of
signature (1, 9). Coordinates are fixed once and for all:

    index 0, 1   the hyperbolic plane U, basis e, f with (e, f) = 1
    index 2..9   E8(-1) in the simple-root basis alpha_1..alpha_8

The E8 simple roots are labelled as in Bourbaki (alpha_2 is the short
branch attached to alpha_4), so the Dynkin chain reads
1 - 3 - 4 - 5 - 6 - 7 - 8 with 2 hanging off 4.

A class also carries a torsion bit: the coefficient of the canonical class
K_X, which is 2-torsion and numerically trivial.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, Sequence

import numpy as np
import sympy

from .errors import BoundTooLarge, NotARoot

RANK = 10
E8_OFFSET = 2
SAFETY_LIMIT = 10**7

# Dynkin edges of E8, 0-based within the block (Bourbaki labels minus one).
E8_EDGES = ((0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3))

E8_CARTAN = np.diag([2] * 8)
for _i, _j in E8_EDGES:
    E8_CARTAN[_i, _j] = E8_CARTAN[_j, _i] = -1
del _i, _j

# Highest root of E8 in the simple-root basis.
E8_HIGHEST_ROOT = (2, 3, 4, 6, 5, 4, 3, 2)


@dataclass(frozen=True)
class GramForm:
    """Integer symmetric bilinear form on the free part of NS(X)."""

    matrix: np.ndarray

    @classmethod
    def enriques(cls) -> "GramForm":
        m = np.zeros((RANK, RANK), dtype=np.int64)
        m[0, 1] = m[1, 0] = 1
        m[E8_OFFSET:, E8_OFFSET:] = -E8_CARTAN
        m.setflags(write=False)
        return cls(m)

    def determinant(self) -> int:
        return int(sympy.Matrix(self.matrix.tolist()).det())

    def is_even(self) -> bool:
        return bool(np.all(np.diag(self.matrix) % 2 == 0))

    def is_symmetric(self) -> bool:
        return bool(np.array_equal(self.matrix, self.matrix.T))

    def signature(self) -> tuple[int, int]:
        """(number of positive, number of negative) eigenvalues."""
        eig = np.linalg.eigvalsh(self.matrix.astype(float))
        return int(np.sum(eig > 1e-9)), int(np.sum(eig < -1e-9))


GRAM = GramForm.enriques()


@dataclass(frozen=True)
class NSClass:
    """A divisor class: ten integer coordinates plus the K_X bit."""

    free: tuple[int, ...]
    torsion: int = 0

    def __post_init__(self):
        free = tuple(int(c) for c in self.free)
        if len(free) != RANK:
            raise ValueError(f"expected {RANK} coordinates, got {len(free)}")
        if self.torsion not in (0, 1):
            raise ValueError(f"torsion bit must be 0 or 1, got {self.torsion!r}")
        object.__setattr__(self, "free", free)
        object.__setattr__(self, "torsion", int(self.torsion))

    @classmethod
    def from_coords(cls, coords: Sequence[int], torsion: int = 0) -> "NSClass":
        return cls(tuple(coords), torsion)

    @classmethod
    def zero(cls) -> "NSClass":
        return cls((0,) * RANK)

    @classmethod
    def canonical(cls) -> "NSClass":
        return cls((0,) * RANK, 1)

    @classmethod
    def basis(cls, i: int) -> "NSClass":
        coords = [0] * RANK
        coords[i] = 1
        return cls(tuple(coords))

    @classmethod
    def u_block(cls, m: int, n: int) -> "NSClass":
        """The class m*e + n*f."""
        return cls((m, n) + (0,) * 8)

    @classmethod
    def e8(cls, coeffs: Sequence[int]) -> "NSClass":
        """A class supported on the E8 block, given in simple-root coordinates."""
        if len(coeffs) != 8:
            raise ValueError("E8 block needs 8 coordinates")
        return cls((0, 0) + tuple(coeffs))

    @classmethod
    def simple_root(cls, i: int) -> "NSClass":
        """alpha_i for i = 1..8 (Bourbaki labels)."""
        if not 1 <= i <= 8:
            raise ValueError("simple roots are labelled 1..8")
        return cls.basis(E8_OFFSET + i - 1)

    def __add__(self, other: "NSClass") -> "NSClass":
        if not isinstance(other, NSClass):
            return NotImplemented
        return NSClass(tuple(a + b for a, b in zip(self.free, other.free)),
                       self.torsion ^ other.torsion)

    def __neg__(self) -> "NSClass":
        # -K_X = K_X
        return NSClass(tuple(-a for a in self.free), self.torsion)

    def __sub__(self, other: "NSClass") -> "NSClass":
        if not isinstance(other, NSClass):
            return NotImplemented
        return self + (-other)

    def __mul__(self, n: int) -> "NSClass":
        if not isinstance(n, (int, np.integer)):
            return NotImplemented
        n = int(n)
        return NSClass(tuple(n * a for a in self.free), self.torsion * (n % 2))

    __rmul__ = __mul__

    @property
    def u_part(self) -> tuple[int, int]:
        return self.free[0], self.free[1]

    @property
    def e8_part(self) -> tuple[int, ...]:
        return self.free[E8_OFFSET:]

    def is_zero(self) -> bool:
        return self.torsion == 0 and not any(self.free)

    def is_numerically_zero(self) -> bool:
        return not any(self.free)

    def height(self) -> int:
        return max(abs(c) for c in self.free)

    def free_gcd(self) -> int:
        """Divisibility of the free part; 0 for the numerically trivial class."""
        return math.gcd(*self.free)

    def drop_torsion(self) -> "NSClass":
        return NSClass(self.free, 0)

    def sort_key(self) -> tuple:
        return self.free + (self.torsion,)

    def __str__(self) -> str:
        return "[" + ",".join(str(c) for c in self.free) + f";{self.torsion}]"


def _cartan_form(x: Sequence[int], y: Sequence[int]) -> int:
    """Positive definite E8 Cartan form on two 8-vectors."""
    s = 2 * sum(a * b for a, b in zip(x, y))
    for i, j in E8_EDGES:
        s -= x[i] * y[j] + x[j] * y[i]
    return s


def _cartan_norm(y: Sequence[int]) -> int:
    s = 2 * sum(a * a for a in y)
    for i, j in E8_EDGES:
        s -= 2 * y[i] * y[j]
    return s


def pair(a: NSClass, b: NSClass) -> int:
    """Intersection number (a, b). The torsion bit plays no role."""
    x, y = a.free, b.free
    return x[0] * y[1] + x[1] * y[0] - _cartan_form(x[E8_OFFSET:], y[E8_OFFSET:])


def norm(a: NSClass) -> int:
    x = a.free
    return 2 * x[0] * x[1] - _cartan_norm(x[E8_OFFSET:])


def reflect(root: NSClass, x: NSClass) -> NSClass:
    """Reflection in the hyperplane orthogonal to a (-2)-class.

    x -> x + (x, root) root; the torsion bit of x is kept.
    """
    if root.torsion or norm(root) != -2:
        raise NotARoot(f"{root} is not a torsion-free (-2)-class")
    c = pair(x, root)
    if c == 0:
        return x
    return NSClass(tuple(a + c * b for a, b in zip(x.free, root.free)), x.torsion)


# --------------------------------------------------------------------------
# Enumeration

class _Budget:
    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0

    def spend(self, n: int = 1):
        self.used += n
        if self.used > self.limit:
            raise BoundTooLarge(
                f"enumeration visited more than {self.limit} candidates; "
                "lower the height bound or raise the safety limit")


def _ldl(gram: Sequence[Sequence[int]]) -> tuple[list[float], list[list[float]]]:
    """Decompose a positive definite form as sum_i d_i (y_i + sum_{j>i} u_ij y_j)^2."""
    n = len(gram)
    d: list[Fraction] = []
    u = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for i in range(n):
        di = Fraction(int(gram[i][i])) - sum(d[l] * u[l][i] ** 2 for l in range(i))
        if di <= 0:
            raise ValueError("form is not positive definite")
        d.append(di)
        for j in range(i + 1, n):
            u[i][j] = (Fraction(int(gram[i][j]))
                       - sum(d[l] * u[l][i] * u[l][j] for l in range(i))) / di
    return [float(x) for x in d], [[float(x) for x in row] for row in u]


class DefiniteEnumerator:
    """Fincke-Pohst enumeration of y with q(y) == target for a positive definite q.

    Optional per-coordinate box and a linear window lo <= c.y <= hi prune the
    tree. Floating point is used only for pruning, with slack; every yielded
    vector is checked with exact integer arithmetic.
    """

    EPS = 1e-7

    def __init__(self, gram: Sequence[Sequence[int]],
                 exact_norm: Callable[[Sequence[int]], int] | None = None):
        self.gram = [[int(v) for v in row] for row in gram]
        self.n = len(self.gram)
        self.d, self.u = _ldl(self.gram)
        self._exact = exact_norm or self._generic_norm

    def _generic_norm(self, y: Sequence[int]) -> int:
        g = self.gram
        return sum(y[i] * g[i][j] * y[j] for i in range(self.n) for j in range(self.n))

    def solutions(self, target: int, box: Sequence[tuple[int, int]] | None = None,
                  linear: Sequence[int] | None = None,
                  window: tuple[int, int] | None = None,
                  budget: _Budget | None = None,
                  within: bool = False) -> Iterator[tuple[int, ...]]:
        """Yield y with q(y) == target, or q(y) <= target when ``within``."""
        n, d, u = self.n, self.d, self.u
        eps = self.EPS * max(1, target)
        if target < 0:
            return
        budget = budget or _Budget(SAFETY_LIMIT)
        y = [0] * n

        # Range of the linear form over coordinates 0..i-1, for slab pruning.
        lin_lo = lin_hi = None
        if linear is not None:
            if box is None:
                raise ValueError("linear window needs a box")
            lin_lo, lin_hi = [0] * (n + 1), [0] * (n + 1)
            for i in range(n):
                a, b = linear[i] * box[i][0], linear[i] * box[i][1]
                lin_lo[i + 1] = lin_lo[i] + min(a, b)
                lin_hi[i + 1] = lin_hi[i] + max(a, b)

        def rec(i: int, partial: float, lin: int):
            if i < 0:
                q = self._exact(y)
                if (q <= target if within else q == target) and (
                        linear is None or window[0] <= lin <= window[1]):
                    yield tuple(y)
                return
            rem = target - partial
            if rem < -eps:
                return
            center = -sum(u[i][j] * y[j] for j in range(i + 1, n))
            r = math.sqrt(max(rem, 0.0) / d[i])
            lo = math.ceil(center - r - eps)
            hi = math.floor(center + r + eps)
            if box is not None:
                lo, hi = max(lo, box[i][0]), min(hi, box[i][1])
            for v in range(lo, hi + 1):
                budget.spend()
                if linear is not None:
                    nl = lin + linear[i] * v
                    if nl + lin_hi[i] < window[0] or nl + lin_lo[i] > window[1]:
                        continue
                else:
                    nl = 0
                y[i] = v
                yield from rec(i - 1, partial + d[i] * (v - center) ** 2, nl)
            y[i] = 0

        yield from rec(n - 1, 0.0, 0)


_E8_ENUM = DefiniteEnumerator(E8_CARTAN.tolist(), exact_norm=_cartan_norm)


def _search(target_norm: int, height_bound: int, block: str | None,
            pair_with: NSClass | None, pair_window: tuple[int, int] | None,
            limit: int) -> list[NSClass]:
    if height_bound < 0:
        raise ValueError("height_bound must be non-negative")
    if block not in (None, "U", "E8"):
        raise ValueError(f"unknown block {block!r}")
    h = height_bound
    budget = _Budget(limit)
    u_range = range(-h, h + 1) if block != "E8" else range(0, 1)
    box = [(-h, h)] * 8
    linear = None
    if pair_with is not None:
        w = pair_with.free
        # (w, x) restricted to the E8 block, as a linear form in x's coordinates
        linear = [-c for c in (E8_CARTAN @ np.array(w[E8_OFFSET:])).tolist()]

    out = []
    for m in u_range:
        for n in u_range:
            budget.spend()
            t = 2 * m * n - target_norm  # required Cartan norm of the E8 part
            if t < 0 or t % 2:
                continue
            window = None
            if pair_with is not None:
                u_contrib = w[1] * m + w[0] * n
                window = (pair_window[0] - u_contrib, pair_window[1] - u_contrib)
            if block == "U":
                if t != 0:
                    continue
                cands = [(0,) * 8]
                if pair_with is not None and not window[0] <= 0 <= window[1]:
                    cands = []
            else:
                cands = _E8_ENUM.solutions(t, box, linear, window, budget)
            for y in cands:
                if m == 0 and n == 0 and not any(y):
                    continue
                out.append(NSClass((m, n) + tuple(y)))
    out.sort(key=NSClass.sort_key)
    return out


def enumerate_by_norm(norm_value: int, height_bound: int, block: str | None = None,
                      limit: int = SAFETY_LIMIT) -> list[NSClass]:
    """All nonzero torsion-free x with (x, x) = norm_value and height <= height_bound.

    ``block`` restricts to classes supported on "U" or on "E8". Output is in
    lexicographic order of coordinates.
    """
    return _search(norm_value, height_bound, block, None, None, limit)


def _linear_coeffs(w: NSClass) -> list[int]:
    """g with (w, x) = g . x for every x."""
    return [int(c) for c in GRAM.matrix @ np.array(w.free)]


def enumerate_isotropic(pair_with: NSClass, pair_bound: int, height_bound: int | None = None,
                        limit: int = SAFETY_LIMIT) -> list[NSClass]:
    """Nonzero isotropic x with 0 < (pair_with, x) <= pair_bound and height <= height_bound.

    When (w^2) > 0 the answer is finite even without a height bound: on
    isotropic x with (w, x) = p the positive definite form
    2 (w, x)^2 - (w^2)(x, x) takes the value 2 p^2, so an ellipsoid search
    is exhaustive. Otherwise a height bound is required.
    """
    if pair_bound < 1:
        raise ValueError("pair_bound must be at least 1")
    n = norm(pair_with)
    if n <= 0:
        if height_bound is None:
            raise ValueError("a height bound is required unless (pair_with^2) > 0")
        return _search(0, height_bound, None, pair_with, (1, pair_bound), limit)

    g = _linear_coeffs(pair_with)
    G = GRAM.matrix.tolist()
    majorant = [[2 * g[i] * g[j] - n * G[i][j] for j in range(RANK)] for i in range(RANK)]
    enum = DefiniteEnumerator(majorant)
    box = None if height_bound is None else [(-height_bound, height_bound)] * RANK
    out = []
    for y in enum.solutions(2 * pair_bound ** 2, box, g if box else None,
                            (1, pair_bound) if box else None, _Budget(limit), within=True):
        x = NSClass(y)
        if norm(x) == 0 and 0 < pair(pair_with, x) <= pair_bound:
            out.append(x)
    out.sort(key=NSClass.sort_key)
    return out


def e8_roots() -> list[NSClass]:
    """The 240 roots of the E8 block (all coordinates lie in [-6, 6])."""
    return enumerate_by_norm(-2, max(E8_HIGHEST_ROOT), block="E8")
