"""Non-emptiness of moduli of stable sheaves M_H(r, L, s/2) on an Enriques surface.

For a primitive v = (r, L, s/2) with q = (L^2) - rs, the moduli space is
non-empty for general H exactly when one of the following holds:

    (i)   gcd(r, L, s) = 1 and q >= -1
    (ii)  gcd(r, L, s) = 2 and q >= 2
    (iii) gcd(r, L, s) = 2, q = 0 and L = (r/2) K_X mod 2
    (iv)  q = -2 and L = D + (r/2) K_X mod 2 for a nodal cycle D

The same test applies to r = 0 when L is positive against an ample class.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .errors import SearchBoundExceeded
from .lattice import NSClass, pair
from .mukai import MukaiVector, congruent_mod2, gcd_divisibility, mukai_square
from .surface import SurfaceModel, find_nodal_cycle

CASES = ("i", "ii", "iii", "iv", "spherical-rank2")
ROUTES = ("existence", "rank0", "spherical-rank2")
INAPPLICABLE = "inapplicable"


@dataclass(frozen=True)
class Verdict:
    """Outcome of an existence query.

    ``nonempty`` is None when a bounded search could not decide. ``case`` is
    the matching clause for non-empty verdicts, the clause left undecided
    for unknown ones, ``"inapplicable"`` when the criterion does not apply,
    and None when no clause matches.
    """

    nonempty: bool | None
    case: str | None
    route: str
    q: int
    gcd_rs: int | None = None
    gcd_primitive: int | None = None
    witness: NSClass | None = None
    witness_coefficients: tuple[int, ...] | None = None
    target: NSClass | None = None
    dimension: int | None = None
    dimension_kind: str | None = None
    notes: tuple[str, ...] = field(default_factory=tuple)

    @property
    def decided(self) -> bool:
        return self.nonempty is not None

    def to_dict(self) -> dict[str, Any]:
        def s(x):
            return None if x is None else str(x)
        return {
            "nonempty": self.nonempty,
            "case": self.case,
            "route": self.route,
            "q": self.q,
            "gcd_rs": self.gcd_rs,
            "gcd_primitive": self.gcd_primitive,
            "witness": s(self.witness),
            "witness_coefficients": (None if self.witness_coefficients is None
                                     else list(self.witness_coefficients)),
            "target": s(self.target),
            "dimension": self.dimension,
            "dimension_kind": self.dimension_kind,
            "notes": list(self.notes),
        }


def dimension_bounds(v: MukaiVector) -> tuple[int, int]:
    """(lower bound (L^2) - rs + 1, expected dimension clamped at 0)."""
    lower = mukai_square(v) + 1
    return lower, max(lower, 0)


def _dimension(v: MukaiVector, q: int, case: str) -> tuple[int, str, list[str]]:
    if case == "iii":
        return 2, "proved", []
    if q < 0:
        # q = -2: a rigid point; q = -1 only occurs for odd rank, where <v^2>+1 = 0
        return 0, "proved", []
    if v.r % 2:
        return q + 1, "proved", []
    return q + 1, "expected", [
        "dimension is the lower bound (L^2)-rs+1; smoothness is only known for odd rank"]


def _nonempty(v: MukaiVector, q: int, case: str, route: str, gcds, notes, **kw) -> Verdict:
    dim, kind, extra = _dimension(v, q, case)
    return Verdict(True, case, route, q, *gcds, dimension=dim, dimension_kind=kind,
                   notes=tuple(notes + extra), **kw)


def _nodal_verdict(model: SurfaceModel, v: MukaiVector, q: int, case: str, route: str,
                   target: NSClass, gcds, notes: list[str]) -> Verdict:
    try:
        hit = find_nodal_cycle(model, target)
    except SearchBoundExceeded as exc:
        return Verdict(None, case, route, q, *gcds, target=target,
                       notes=tuple(notes + [f"unknown: {exc}"]))
    if hit is None:
        return Verdict(False, None, route, q, *gcds, target=target,
                       notes=tuple(notes + [f"no nodal cycle is congruent to {target} mod 2"]))
    return _nonempty(v, q, case, route, gcds, notes, witness=hit.cycle,
                     witness_coefficients=hit.coefficients, target=target)


def _four_cases(model: SurfaceModel, v: MukaiVector, route: str) -> Verdict:
    q = mukai_square(v)
    gcds = gcd_divisibility(v)
    g_rs, g_prim = gcds
    if g_prim != 1:
        return Verdict(None, INAPPLICABLE, route, q, *gcds, notes=(
            f"v is not primitive (gcd(r, L, (r+s)/2) = {g_prim}); the criterion assumes primitivity",))
    notes: list[str] = []
    if q < -2:
        return Verdict(False, None, route, q, *gcds,
                       notes=(f"<v^2> = {q} < -2, impossible for a stable sheaf",))
    # g_rs is 1 or 2 for primitive v; q = r (mod 2), so q = -2 forces r even.
    half_rank_K = (v.r // 2) * model.canonical
    if g_rs == 1 and q >= -1:
        return _nonempty(v, q, "i", route, gcds, notes)
    if g_rs == 2 and q >= 2:
        return _nonempty(v, q, "ii", route, gcds, notes)
    if g_rs == 2 and q == 0:
        if congruent_mod2(v.L, half_rank_K):
            return _nonempty(v, q, "iii", route, gcds, notes)
        return Verdict(False, None, route, q, *gcds,
                       notes=("gcd 2 and q = 0 but L is not congruent to (r/2)K_X mod 2",))
    if q == -2:
        return _nodal_verdict(model, v, q, "iv", route, v.L + half_rank_K, gcds, notes)
    return Verdict(False, None, route, q, *gcds, notes=("no case applies",))


def _prepare(model: SurfaceModel, v: MukaiVector) -> None:
    v.check_parity()
    model.check_class(v.L)


def decide_existence(model: SurfaceModel, v: MukaiVector) -> Verdict:
    """Decide M_H(v) != empty for positive rank."""
    _prepare(model, v)
    if v.r <= 0:
        return Verdict(None, INAPPLICABLE, "existence", mukai_square(v),
                       notes=("rank must be positive; use decide_rank0 for r = 0",))
    return _four_cases(model, v, "existence")


def decide_rank0(model: SurfaceModel, v: MukaiVector) -> Verdict:
    """The rank-zero version, valid when (L, H) > 0."""
    _prepare(model, v)
    q = mukai_square(v)
    if v.r != 0:
        return Verdict(None, INAPPLICABLE, "rank0", q, notes=("rank is not zero",))
    degree = pair(v.L, model.ample)
    if degree <= 0:
        return Verdict(None, INAPPLICABLE, "rank0", q,
                       notes=(f"(L, H) = {degree} <= 0; the rank-zero criterion needs (L, H) > 0",))
    return _four_cases(model, v, "rank0")


def decide_spherical_rank2(model: SurfaceModel, v: MukaiVector) -> Verdict:
    """v = (2, L, s/2) with (L^2) - 2s = -2: a stable sheaf exists iff
    L = D + K_X mod 2 for a nodal cycle D."""
    _prepare(model, v)
    q = mukai_square(v)
    route = "spherical-rank2"
    if v.r != 2 or q != -2:
        return Verdict(None, INAPPLICABLE, route, q,
                       notes=("needs rank 2 and (L^2) - 2s = -2",))
    gcds = gcd_divisibility(v)
    return _nodal_verdict(model, v, q, "spherical-rank2", route, v.L + model.canonical,
                          gcds, [])


def decide(model: SurfaceModel, v: MukaiVector, spherical: bool = False) -> Verdict:
    """Dispatch on rank: r = 0 to the rank-zero test, r > 0 to the main test.

    With ``spherical`` set, rank-2 vectors of square -2 go through the
    rank-2 spherical criterion instead.
    """
    if v.r == 0:
        return decide_rank0(model, v)
    if spherical and v.r == 2 and mukai_square(v.check_parity()) == -2:
        return decide_spherical_rank2(model, v)
    return decide_existence(model, v)
