import random

import pytest

from enriques import MukaiVector, NSClass
from enriques.errors import ParityViolation
from enriques.lattice import E8_HIGHEST_ROOT
from enriques.existence import (decide, decide_existence, decide_rank0, decide_spherical_rank2,
                                dimension_bounds)
from enriques.mukai import V0, V_OX, line_bundle, mukai_square

from support import E, F, K, alpha, model

DELTA = alpha(1)


def test_v0_is_the_surface():
    v = decide_existence(model("A2"), V0)
    assert v.nonempty and v.case == "iii" and v.dimension == 2
    assert v.dimension_kind == "proved"


def test_line_bundles_case_i():
    for L in (NSClass.zero(), E, 3 * E - F + K):
        v = decide_existence(model("unnodal"), line_bundle(L))
        assert v.nonempty and v.case == "i" and v.dimension == 0


def test_case_ii_and_iii_boundary():
    m = model("unnodal")
    # gcd 2, q = 8: case ii
    v = decide_existence(m, MukaiVector(2, 2 * E + 2 * F + K, 0))
    assert v.gcd_rs == 2 and v.q == 8 and v.nonempty and v.case == "ii"
    # gcd 2, q = 0, L = K mod 2: case iii
    assert decide_existence(m, MukaiVector(2, 2 * E + K, 0)).case == "iii"
    # gcd 2, q = 0, L = 0 mod 2: empty
    w = decide_existence(m, MukaiVector(2, 2 * E, 0))
    assert w.nonempty is False and w.case is None


def test_spherical_rank_two_with_nodal_cycle():
    m = model("A2")
    hit = decide_existence(m, MukaiVector(2, DELTA + K, 0))
    assert hit.nonempty and hit.case == "iv" and hit.witness == DELTA
    assert hit.dimension == 0
    miss = decide_existence(m, MukaiVector(2, DELTA, 0))
    assert miss.nonempty is False
    assert decide_existence(m.twin(), MukaiVector(2, DELTA, 0)).nonempty
    sph = decide_spherical_rank2(m, MukaiVector(2, DELTA + K, 0))
    assert sph.nonempty and sph.case == "spherical-rank2"
    assert decide(m, MukaiVector(2, DELTA + K, 0), spherical=True).route == "spherical-rank2"


def test_unknown_when_bound_runs_out():
    # the highest root of E8 needs coefficients up to 6
    theta = NSClass.e8(E8_HIGHEST_ROOT)
    v = decide_existence(model("E8", coeff_bound=1), MukaiVector(2, theta + K, 0))
    assert v.nonempty is None and not v.decided and v.case == "iv"


def test_below_minus_two_is_empty():
    v = decide_existence(model("A2"), MukaiVector(2, DELTA, 2))
    assert v.q == -6 and v.nonempty is False


def test_non_primitive_inapplicable():
    v = decide_existence(model("unnodal"), MukaiVector(4, 2 * E, 0))
    assert v.case == "inapplicable" and v.nonempty is None


def test_rank0():
    m = model("unnodal")
    v = decide_rank0(m, MukaiVector(0, E + F, 0))
    assert v.nonempty and v.case == "i" and v.dimension == 3
    v = decide_rank0(m, MukaiVector(0, 2 * E + 2 * F, 2))
    assert v.nonempty and v.case == "ii" and v.dimension == 9
    assert decide_rank0(m, MukaiVector(0, -E - F, 0)).case == "inapplicable"
    assert decide_rank0(m, V_OX).case == "inapplicable"
    assert decide(m, MukaiVector(0, E + F, 0)).route == "rank0"


def test_existence_rejects_bad_input():
    m = model("unnodal")
    with pytest.raises(ParityViolation):
        decide_existence(m, MukaiVector(1, E, 0))
    with pytest.raises(ValueError):
        decide_existence(model("unnodal", classical=False), MukaiVector(2, K, 0))
    assert decide_existence(m, MukaiVector(0, E, 0)).case == "inapplicable"


def test_dimension_bounds():
    assert dimension_bounds(MukaiVector(1, E + F, 3)) == (0, 0)
    assert dimension_bounds(MukaiVector(2, DELTA, 2)) == (-5, 0)


def test_even_rank_dimension_is_marked_expected():
    v = decide_existence(model("unnodal"), MukaiVector(2, 2 * E + 2 * F + K, 0))
    assert v.dimension == 9 and v.dimension_kind == "expected"
    w = decide_existence(model("unnodal"), MukaiVector(3, 2 * E + 2 * F, 1))
    assert w.dimension == 6 and w.dimension_kind == "proved"


def test_case_iv_needs_even_rank():
    # q = (L^2) - rs has the parity of r, so odd rank never reaches q = -2
    rng = random.Random(3)
    for _ in range(500):
        r = rng.choice([1, 3, 5])
        s = rng.choice(range(-7, 8, 2))
        L = NSClass(tuple(rng.randint(-2, 2) for _ in range(10)))
        assert mukai_square(MukaiVector(r, L, s)) % 2 == 1
