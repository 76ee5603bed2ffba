"""Descent along the Luna slice and classification of regular orbits."""

# Authors: pyOrbital developers
#
# License: BSD (3-clause)

from .descent import DescentData, DescentFactor, stratify, descend
from .orbits import OrbitRep, orbit_representatives, classify_type
from .orbits import realize_rs, iota, assemble, orbit_witness, locate

__all__ = [
    "DescentData", "DescentFactor", "stratify", "descend",
    "OrbitRep", "orbit_representatives", "classify_type",
    "realize_rs", "iota", "assemble", "orbit_witness", "locate"
]
