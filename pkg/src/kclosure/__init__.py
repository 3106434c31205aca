"""k-orbits and k-closures of finite permutation groups."""

from ._backend import kernels as _kernels
from .budgets import Budgets
from .engine import (ClosureResult, closure, closure_backtrack, closure_k1,
                      closure_nilpotent, closure_oracle, is_k_closed)
from .errors import (BlockSystemError, BudgetExceeded, CycleSyntaxError,
                     DecompositionFailed, DegreeMismatch, InternalContradiction,
                     KClosureError, KLessThanTwo, NotNilpotent)
from .korbit import (TupleOrbitPartition, k_orbits, preserves_partition,
                     wielandt_member)
from .perm import (PermGroup, Permutation, PointSet, compose, direct_product_action,
                   direct_sum, induced_action, orbits, setwise_stabilizer)
from .structure import (PrimeSet, SylowDecomposition, TransitiveDecomposition,
                        hall_subgroup, is_nilpotent, n_pi, p_part,
                        sylow_decomposition, sylow_subgroup, transitive_decompose)

BACKEND = _kernels.BACKEND

__version__ = "0.1.0"
