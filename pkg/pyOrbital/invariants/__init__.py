"""Invariant theory of gl~_n, gl_{n+1} and S: relative invariants,
quotient points, regularity and Cayley transforms."""

# Authors: pyOrbital developers
#
# License: BSD (3-clause)

from .elements import TildeGlElement, GlNextElement, SElement, EtaleMatrix
from .invariants import QuotientPoint
from .invariants import delta, delta_from_corner, quotient_point, is_regular
from .invariants import central_element, stabilizer_dimension
from .cayley import CayleyParams, cayley, cayley_identity
from .cayley import cayley_to_group, cayley_to_lie

__all__ = [
    "TildeGlElement", "GlNextElement", "SElement", "EtaleMatrix",
    "QuotientPoint",
    "delta", "delta_from_corner", "quotient_point", "is_regular",
    "central_element", "stabilizer_dimension",
    "CayleyParams", "cayley", "cayley_identity",
    "cayley_to_group", "cayley_to_lie"
]
