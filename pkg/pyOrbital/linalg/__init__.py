"""Dense exact linear algebra over Q and E, Hankel recurrences and
number-field arithmetic."""

# Authors: pyOrbital developers
#
# License: BSD (3-clause)

from .matrix import charpoly, det, inverse, rank, nullspace, solve_linear
from .matrix import LinearSolution, companion
from .recurrence import hankel_determinants, minimal_recurrence
from .recurrence import berlekamp_massey
from .quotient_ring import QuotientRingElement, trace_dual_basis

__all__ = [
    "charpoly", "det", "inverse", "rank", "nullspace", "solve_linear",
    "LinearSolution", "companion",
    "hankel_determinants", "minimal_recurrence", "berlekamp_massey",
    "QuotientRingElement", "trace_dual_basis"
]
