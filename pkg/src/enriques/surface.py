"""A modelled Enriques surface: its configuration of smooth rational curves
and a polarization, together with the effectivity questions the existence
criteria need.

Nodal roots are the classes of irreducible (-2)-curves. Negative-square
effective classes are recognised only inside the non-negative span of the
nodal roots, which is exactly where nodal cycles live.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

import sympy

from .errors import BoundTooLarge, NonTermination, NotFoundWithinBound, SearchBoundExceeded
from .lattice import (RANK, SAFETY_LIMIT, DefiniteEnumerator, NSClass,
                      enumerate_isotropic, norm, pair, reflect)
from .mukai import congruent_mod2

DEFAULT_COEFF_BOUND = 6
DEFAULT_HEIGHT_BOUND = 4
MAX_REDUCTION_STEPS = 100_000


@dataclass(frozen=True)
class SurfaceModel:
    classical: bool
    nodal_roots: tuple[NSClass, ...] = ()
    ample: NSClass = field(default_factory=lambda: NSClass.u_block(1, 1))
    coeff_bound: int = DEFAULT_COEFF_BOUND
    height_bound: int = DEFAULT_HEIGHT_BOUND

    def __post_init__(self):
        object.__setattr__(self, "nodal_roots", tuple(self.nodal_roots))

    @classmethod
    def unnodal(cls, classical: bool = True, **kw) -> "SurfaceModel":
        return cls(classical=classical, nodal_roots=(), **kw)

    def twin(self) -> "SurfaceModel":
        """Same nodal geometry with the other value of the classical flag."""
        ample = self.ample if self.classical is False else self.ample.drop_torsion()
        return SurfaceModel(not self.classical, self.nodal_roots, ample,
                            self.coeff_bound, self.height_bound)

    def with_bounds(self, coeff_bound: int | None = None,
                    height_bound: int | None = None) -> "SurfaceModel":
        return SurfaceModel(self.classical, self.nodal_roots, self.ample,
                            self.coeff_bound if coeff_bound is None else coeff_bound,
                            self.height_bound if height_bound is None else height_bound)

    @property
    def canonical(self) -> NSClass:
        """K_X: the torsion class on a classical surface, zero otherwise."""
        return NSClass.canonical() if self.classical else NSClass.zero()

    def check_class(self, x: NSClass) -> NSClass:
        if not self.classical and x.torsion:
            raise ValueError(f"{x} has a K_X bit but the surface is non-classical (K_X = 0)")
        return x

    # Linear algebra of the root configuration, computed once per model.

    @cached_property
    def _root_degrees(self) -> tuple[int, ...]:
        return tuple(pair(self.ample, d) for d in self.nodal_roots)

    @cached_property
    def root_gram(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(pair(a, b) for b in self.nodal_roots) for a in self.nodal_roots)

    @cached_property
    def _left_inverse(self) -> list[list[Fraction]] | None:
        """Exact left inverse of the 10 x k root matrix, or None if the roots are dependent."""
        k = len(self.nodal_roots)
        if k == 0:
            return []
        R = sympy.Matrix([[d.free[i] for d in self.nodal_roots] for i in range(RANK)])
        if R.rank() < k:
            return None
        inv = (R.T * R).inv() * R.T
        return [[Fraction(int(x.p), int(x.q)) for x in inv.row(i)] for i in range(k)]

    @property
    def roots_independent(self) -> bool:
        return self._left_inverse is not None

    @cached_property
    def span_is_definite(self) -> bool:
        """Whether the nodal roots span a negative definite sublattice."""
        if not self.nodal_roots:
            return True
        return bool((-sympy.Matrix(self.root_gram)).is_positive_definite)

    @cached_property
    def positive_roots(self) -> tuple[tuple[int, ...], ...]:
        """Coefficient vectors a >= 0 with (sum a_i delta_i)^2 = -2.

        Only meaningful (and finite) when the span is negative definite.
        """
        if not self.span_is_definite:
            raise ValueError("root span is not negative definite")
        if not self.nodal_roots:
            return ()
        gram = [[-x for x in row] for row in self.root_gram]
        found = [a for a in DefiniteEnumerator(gram).solutions(2) if min(a) >= 0]
        return tuple(sorted(found))

    def combine(self, coeffs: Sequence[int]) -> NSClass:
        out = NSClass.zero()
        for c, d in zip(coeffs, self.nodal_roots):
            if c:
                out = out + c * d
        return out


def validate(model: SurfaceModel) -> list[str]:
    """Every broken invariant of the model, as text. Empty means valid."""
    problems = []
    H = model.ample
    if norm(H) <= 0:
        problems.append(f"ample class {H} has (H^2) = {norm(H)} <= 0")
    if not model.classical and H.torsion:
        problems.append("ample class carries a K_X bit on a non-classical surface")
    if model.coeff_bound < 0:
        problems.append("coeff_bound must be non-negative")
    if model.height_bound < 0:
        problems.append("height_bound must be non-negative")
    seen = set()
    for i, d in enumerate(model.nodal_roots):
        if d.torsion:
            problems.append(f"root {i} {d} carries a K_X bit")
        if norm(d) != -2:
            problems.append(f"root {i} {d} has square {norm(d)}, expected -2")
        if pair(H, d) <= 0:
            problems.append(f"ample class not positive on root {i} {d}: (H, root) = {pair(H, d)}")
        if d.free in seen:
            problems.append(f"root {i} {d} is listed twice")
        seen.add(d.free)
    for (i, a), (j, b) in itertools.combinations(enumerate(model.nodal_roots), 2):
        if a.free != b.free and pair(a, b) < 0:
            problems.append(f"roots {i} and {j} pair negatively: {pair(a, b)}")
    return problems


@dataclass(frozen=True)
class ReductionStep:
    root_index: int
    root: NSClass
    after: NSClass


@dataclass(frozen=True)
class ReductionTrace:
    start: NSClass
    steps: tuple[ReductionStep, ...]
    final: NSClass

    def pull_back(self, x: NSClass) -> NSClass:
        """Apply the inverse of the reduction to x."""
        for step in reversed(self.steps):
            x = reflect(step.root, x)
        return x


def weyl_reduce(model: SurfaceModel, D: NSClass,
                max_steps: int = MAX_REDUCTION_STEPS) -> ReductionTrace:
    """Reflect D in nodal roots it meets negatively until it meets none negatively.

    Each step lowers (D, H) by (D, delta)(delta, H) > 0. The first root in
    list order with negative pairing is used, so the trace is deterministic.
    """
    model.check_class(D)
    current = D
    steps = []
    while True:
        for i, d in enumerate(model.nodal_roots):
            if pair(current, d) < 0:
                current = reflect(d, current)
                steps.append(ReductionStep(i, d, current))
                break
        else:
            return ReductionTrace(D, tuple(steps), current)
        if len(steps) >= max_steps:
            raise NonTermination(
                f"Weyl reduction of {D} did not settle after {max_steps} reflections")


def root_combinations(model: SurfaceModel, D: NSClass,
                      limit: int = SAFETY_LIMIT) -> list[tuple[int, ...]]:
    """All ways to write D as a non-negative combination of nodal roots,
    coefficients at most ``coeff_bound``.

    Raises SearchBoundExceeded when a representation might need larger
    coefficients and none was found below the bound.
    """
    model.check_class(D)
    k = len(model.nodal_roots)
    if k == 0 or D.torsion or D.is_numerically_zero():
        return []
    degree = pair(D, model.ample)
    if degree <= 0:
        return []
    cb = model.coeff_bound

    inv = model._left_inverse
    if inv is not None:
        coeffs = [sum(c * x for c, x in zip(row, D.free)) for row in inv]
        if any(c.denominator != 1 or c < 0 for c in coeffs):
            return []
        a = tuple(int(c) for c in coeffs)
        if model.combine(a) != D:
            return []
        if max(a) > cb:
            raise SearchBoundExceeded(
                f"{D} needs a root coefficient {max(a)} > coeff_bound {cb}")
        return [a]

    # Dependent roots: sum a_i (delta_i, H) = (D, H) bounds every coefficient.
    degs = model._root_degrees
    caps = [degree // h for h in degs]
    truncated = any(c > cb for c in caps)
    caps = [min(c, cb) for c in caps]
    spent = [0]
    found = []
    a = [0] * k

    def rec(i: int, left: int):
        if i == k:
            if left == 0 and model.combine(a) == D:
                found.append(tuple(a))
            return
        for c in range(min(caps[i], left // degs[i]) + 1):
            spent[0] += 1
            if spent[0] > limit:
                raise BoundTooLarge("root combination search exceeded the safety limit")
            a[i] = c
            rec(i + 1, left - c * degs[i])
        a[i] = 0

    rec(0, degree)
    if not found and truncated:
        raise SearchBoundExceeded(
            f"no root combination for {D} with coefficients <= {cb}; larger ones not ruled out")
    return sorted(found)


def is_effective(model: SurfaceModel, D: NSClass) -> bool:
    """Effectivity of a nonzero class.

    Non-negative square: Riemann-Roch gives D or K_X - D effective, and
    (D, H) decides which. Negative square: D must be a non-negative
    combination of nodal roots.
    """
    model.check_class(D)
    if D.is_numerically_zero():
        # 0 is not a nonzero effective class and K_X has no sections
        return False
    if norm(D) >= 0:
        return pair(D, model.ample) > 0
    return bool(root_combinations(model, D))


def is_nef(model: SurfaceModel, D: NSClass) -> bool:
    model.check_class(D)
    return pair(D, model.ample) >= 0 and all(pair(D, d) >= 0 for d in model.nodal_roots)


def _sub_vectors(a: Sequence[int]):
    """Coefficient vectors b with 0 <= b <= a, excluding 0 and a."""
    for b in itertools.product(*(range(c + 1) for c in a)):
        if any(b) and tuple(b) != tuple(a):
            yield b


def is_nodal_cycle(model: SurfaceModel, D: NSClass) -> bool:
    """(D^2) = -2, D effective in the root span, and every splitting
    D = C + C' into nonzero effective root combinations has (C^2), (C'^2) < 0.
    """
    model.check_class(D)
    if D.torsion or norm(D) != -2:
        return False
    reps = root_combinations(model, D)
    if not reps:
        return False
    for a in reps:
        for b in _sub_vectors(a):
            C = model.combine(b)
            if norm(C) >= 0 or norm(D - C) >= 0:
                return False
    return True


def _parity_patterns(model: SurfaceModel, target: NSClass) -> list[tuple[int, ...]]:
    k = len(model.nodal_roots)
    return [p for p in itertools.product((0, 1), repeat=k)
            if congruent_mod2(model.combine(p), target)]


@dataclass(frozen=True)
class NodalCycle:
    cycle: NSClass
    coefficients: tuple[int, ...]


def find_nodal_cycle(model: SurfaceModel, target: NSClass,
                     limit: int = SAFETY_LIMIT) -> NodalCycle | None:
    """Nodal cycle D with D = target mod 2, smallest coefficient vector first.

    None means no such cycle exists (definite root span) or none was found
    with the search provably exhaustive. SearchBoundExceeded means the
    answer is unknown at the current coeff_bound.
    """
    model.check_class(target)
    if not model.nodal_roots or target.torsion:
        # every root combination is torsion-free
        return None
    patterns = set(_parity_patterns(model, target))
    if not patterns:
        return None
    cb = model.coeff_bound

    if model.span_is_definite:
        hits = [a for a in model.positive_roots if tuple(c % 2 for c in a) in patterns]
        for a in hits:
            if max(a) <= cb:
                D = model.combine(a)
                if is_nodal_cycle(model, D):
                    return NodalCycle(D, a)
        if any(max(a) > cb for a in hits):
            raise SearchBoundExceeded(
                f"a nodal cycle congruent to {target} needs coefficients above {cb}")
        return None

    spent = 0
    for a in itertools.product(range(cb + 1), repeat=len(model.nodal_roots)):
        spent += 1
        if spent > limit:
            raise BoundTooLarge("nodal cycle search exceeded the safety limit")
        if tuple(c % 2 for c in a) not in patterns or not any(a):
            continue
        D = model.combine(a)
        if norm(D) == -2 and is_nodal_cycle(model, D):
            return NodalCycle(D, a)
    raise SearchBoundExceeded(
        f"no nodal cycle congruent to {target} with coefficients <= {cb}; "
        "the root span is not definite, so larger ones are not ruled out")


def find_nodal_cycle_mod2(model: SurfaceModel, target: NSClass) -> NSClass | None:
    hit = find_nodal_cycle(model, target)
    return None if hit is None else hit.cycle


@dataclass(frozen=True)
class IsotropicCompanion:
    f: NSClass
    reduced_f: NSClass
    trace: ReductionTrace
    pairing: int
    bound: int
    height: int


def find_isotropic_companion(model: SurfaceModel, D: NSClass) -> IsotropicCompanion:
    """Effective isotropic f with 0 < (D, f) <= floor(sqrt(D^2)).

    D is first reduced to the nef chamber. There the isotropic classes with
    pairing in range form a finite set, enumerated exhaustively; the best
    one (smallest pairing, then smallest height, then lexicographic) is
    carried back through the inverse reflections.
    """
    model.check_class(D)
    n = norm(D)
    if n <= 0 or not is_effective(model, D):
        raise ValueError(f"{D} must be effective with positive square")
    bound = math.isqrt(n)
    trace = weyl_reduce(model, D)
    Dn = trace.final
    cands = [x for x in enumerate_isotropic(Dn, bound) if is_effective(model, x)]
    if not cands:
        raise NotFoundWithinBound(f"no isotropic companion of {D}")
    best = min(cands, key=lambda x: (pair(Dn, x), x.height(), x.sort_key()))
    f = trace.pull_back(best)
    p = pair(D, f)
    assert norm(f) == 0 and 0 < p <= bound and is_effective(model, f), f
    return IsotropicCompanion(f, best, trace, p, bound, best.height())


def isotropic_companion(model: SurfaceModel, D: NSClass) -> NSClass:
    return find_isotropic_companion(model, D).f
