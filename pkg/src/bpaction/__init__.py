"""Action polynomials of BP_*-module structure on tensor products of BP_*(BZ/2).

Sparse GF(2) polynomial arithmetic, symmetric-function constructors, the
polynomials p_{ell,j} by division and closed forms, the v_j-action on
classes z_I, and Dickson / Steenrod identities.
"""

from .f2poly import (F2Poly, NotDivisible, add, evaluate, exact_divide,
                     is_symmetric, mul, substitute_linear)
from .plj import (BudgetExceeded, PljQuery, p0_by_partitions,
                  p0_by_surjections, p_by_division, p_by_system,
                  p_closed_ell_eq_k, p_closed_k3, parity_census)
from .dickson import (DicksonWord, NotInAlgebra, dickson_generator, expand,
                      hung_rhs, sq, subduct, total_square)
from .zmodule import (GradedElement, act_polynomial, bp_k_action, two_times,
                      vj_action)

__version__ = "0.1.0"


def clear_caches() -> None:
    """Drop memoized p_{l,j}, generator and monomial-symmetric tables."""
    from . import dickson, plj, symfun
    plj._p_by_division.cache_clear()
    symfun._monomial_symmetric.cache_clear()
    dickson.dickson_generator.cache_clear()
    dickson._generator_power.cache_clear()
