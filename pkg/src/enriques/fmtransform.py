"""Action of the Fourier-Mukai involution on Mukai vectors.

On K(X) the transform is E -> chi(E)(O_X + O_X(K_X)) - E. The closed form
on vectors written as (r, M + (r/2)K_X, s/2) is

    (r, M + (r/2)K_X, s/2) -> (s, -(M + (s/2)K_X) + s K_X, r/2).

The K-theory form is authoritative; the closed form is only unambiguous
when r is even or K_X = 0, and is checked against it there.
"""

from __future__ import annotations

from .lattice import NSClass
from .mukai import V_OK, V_OX, MukaiVector, chi


def _canonical(classical: bool) -> NSClass:
    return NSClass.canonical() if classical else NSClass.zero()


def fm_ktheory(v: MukaiVector, classical: bool = True) -> MukaiVector:
    """chi(v) (v(O_X) + v(O_X(K_X))) - v."""
    v.check_parity()
    if not classical and v.L.torsion:
        raise ValueError("K_X bit on a non-classical surface")
    c = chi(v)
    ok = V_OK if classical else V_OX
    return c * (V_OX + ok) - v


def fm_closed(v: MukaiVector, classical: bool = True) -> MukaiVector:
    """The closed formula; odd rank on a classical surface falls back to fm_ktheory."""
    v.check_parity()
    if classical and v.r % 2:
        return fm_ktheory(v, classical)
    K = _canonical(classical)
    r, s = v.r, v.a2
    M = v.L - (r // 2) * K
    L_new = -(M + (s // 2) * K) + s * K
    return MukaiVector(s, L_new, r)


def closed_form_defined(v: MukaiVector, classical: bool) -> bool:
    return not classical or v.r % 2 == 0


def check_consistency(v: MukaiVector, classical: bool = True) -> bool:
    return fm_closed(v, classical) == fm_ktheory(v, classical)
