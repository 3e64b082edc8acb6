"""Exact arithmetic, Moore-Penrose inverses and linear equations in Cl2."""

from .algebra import (E0, E1, E2, E3, Cl2Element, ComplexSplit, cim,
                      complex_split, conj, cre, element, g_map, h_map, inverse,
                      is_central, is_zero_divisor, modulus_sq, mul, prime)
from .equivalence import (CanonicalForm, CanonicalKind, Witness, canonical,
                          is_pseudosimilar, is_similar,
                          pseudosimilarity_witness, similarity_witness)
from .errors import (Cl2Error, InternalConsistencyError,
                     IrrationalCoefficientError, NotPseudosimilarError,
                     NotSimilarError, RadicandMismatchError, ZeroDivisorError)
from .linalg import RatMatrix, mp_oracle
from .literal import parse
from .mp_inverse import mp, mp_matrix_consistency, phi_mp, verify_penrose
from .scalar import Scalar
from .solvers import (SolutionSet, null_left, null_right, solve_ax, solve_axb,
                      solve_consylvester, solve_sylvester, solve_xb)

__version__ = "0.1.0"
