from fractions import Fraction
import random

import pytest
from hypothesis import given, strategies as st

from enriques import MukaiVector, NSClass, norm
from enriques.errors import ParityViolation
from enriques.mukai import (V0, V_OK, V_OX, V_POINT, chi, congruent_mod2, gcd_divisibility,
                            is_primitive, line_bundle, mukai_pair, mukai_square)

from support import E, F, K, alpha, random_vector


def test_standard_vectors():
    assert V0 == MukaiVector(2, K, 0)
    assert mukai_square(V_OX) == -1  # line bundles have <v^2> = -1
    assert mukai_square(V_POINT) == 0
    assert mukai_square(V0) == 0
    assert chi(V_OX) == 1 and chi(V_OK) == 1 and chi(V_POINT) == 1
    assert chi(V0) == 1


def test_line_bundle_riemann_roch():
    D = 2 * E + F
    v = line_bundle(D)
    assert chi(v) == norm(D) // 2 + 1
    assert mukai_square(v) == -1


def test_pair_example():
    # <v(O), v(k_x)> = -chi(O, k_x) = -1
    assert mukai_pair(V_OX, V_POINT) == -1


def test_parity_enforced():
    bad = MukaiVector(1, E, 0)
    assert not bad.parity_ok()
    with pytest.raises(ParityViolation):
        mukai_square(bad)
    assert chi(bad) == Fraction(1, 2)


def test_gcd_ignores_torsion():
    assert gcd_divisibility(MukaiVector(2, K, 0)) == (2, 1)
    assert gcd_divisibility(MukaiVector(2, 2 * E, 4)) == (2, 1)
    assert gcd_divisibility(MukaiVector(2, 2 * E + K, 2)) == (2, 2)
    assert gcd_divisibility(MukaiVector(3, E, 1)) == (1, 1)
    assert not is_primitive(MukaiVector(4, 2 * E, 0))
    with pytest.raises(ValueError):
        gcd_divisibility(MukaiVector(0, NSClass.zero(), 0))


def test_congruence_mod2():
    assert congruent_mod2(3 * E + alpha(1), E - alpha(1))
    assert not congruent_mod2(E, E + K)
    assert congruent_mod2(E + K, 3 * E + K)


@given(st.integers(0, 10 ** 6))
def test_pair_bilinear_symmetric(seed):
    rng = random.Random(seed)
    u, v, w = (random_vector(rng) for _ in range(3))
    assert mukai_pair(u, v) == mukai_pair(v, u)
    assert mukai_pair(u + v, w) == mukai_pair(u, w) + mukai_pair(v, w)
    assert mukai_square(v) == norm(v.L) - v.r * v.s
    assert mukai_square(v) % 2 == v.r % 2
