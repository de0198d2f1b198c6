"""Zeta functions of proper isometry classes of sublattices of the hyperbolic plane."""

from .analytics import RatioReport, partial_ratio, ratio_r, residue_at_2, slope_check, table1
from .dirichlet import (DirichletCoeffs, count_squares, ddiv, dmul, shift_scale,
                        sieve_tables, theorem11_coeffs, X_func)
from .enumeration import (DivisorTuple, M_direct, M_valuation, bruteforce_am,
                          coset_union_count, enumerate_sublattices)
from .errors import DomainError, InvariantViolation, UnsupportedError, UsageError
from .lattice import (BasisTriple, CanonicalLattice, QZ, SublatticeHNF, canonicalize,
                      class_invariant, gram, properly_isometric)
from .squareclass import (EulerEvalConfig, classify_primes, explicit_zeta_coeffs, h_eval,
                          omega, square_units)

__version__ = "0.1.0"
