"""Exact local L-factors and gamma factors as rational functions of
t = p^-s."""

# Authors: pyOrbital developers
#
# License: BSD (3-clause)

from .laurent import LaurentRational, HoloResult
from .lfactors import LFactorSpec, build_L, gamma_factor, central_L
from .lfactors import central_gamma, L_for_orbit, local_degrees, chi_of

__all__ = [
    "LaurentRational", "HoloResult",
    "LFactorSpec", "build_L", "gamma_factor", "central_L",
    "central_gamma", "L_for_orbit", "local_degrees", "chi_of"
]
