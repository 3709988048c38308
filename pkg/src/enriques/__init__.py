"""Existence of stable sheaves on Enriques surfaces, decided by exact
arithmetic in the lattice U + E8(-1) with a 2-torsion canonical class."""

__version__ = "0.1.0"

from .errors import (BoundTooLarge, EnriquesError, NonTermination, NotARoot,
                     NotFoundWithinBound, ParityViolation, SearchBoundExceeded)
from .existence import (Verdict, decide, decide_existence, decide_rank0,
                        decide_spherical_rank2, dimension_bounds)
from .fmtransform import check_consistency, fm_closed, fm_ktheory
from .lattice import (GRAM, GramForm, NSClass, e8_roots, enumerate_by_norm,
                      enumerate_isotropic, norm, pair, reflect)
from .mukai import (K_X, V0, V_OK, V_OX, V_POINT, MukaiVector, chi, congruent_mod2,
                    gcd_divisibility, is_primitive, line_bundle, mukai_pair, mukai_square)
from .surface import (ReductionTrace, SurfaceModel, find_isotropic_companion,
                      find_nodal_cycle, find_nodal_cycle_mod2, is_effective, is_nef,
                      is_nodal_cycle, isotropic_companion, root_combinations, validate,
                      weyl_reduce)
