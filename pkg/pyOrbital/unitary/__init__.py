"""Unitary side: Hermitian classes, semisimple orbits, matching at n = 1,
transfer constants and the singular transfer checks."""

# Authors: pyOrbital developers
#
# License: BSD (3-clause)

from .hermitian import HermitianClass, hermitian_classes, matching_disc
from .hermitian import SemisimpleOrbitTag, semisimple_orbits, orbit_ledger
from .matching import UTildeElement, UnitaryOrbital, match_element
from .matching import unitary_indicator, unitary_zero, norm_classes
from .matching import unitary_orbital_n1, transfer_factor, measure_ratio
from .constants import TransferConstants, transfer_constants
from .constants import hermitian_constants, slice_signs
from .transfer import MatchReport, rs_grid, verify_matching
from .transfer import flip_pair, fourier_pair, singular_transfer_check

__all__ = [
    "HermitianClass", "hermitian_classes", "matching_disc",
    "SemisimpleOrbitTag", "semisimple_orbits", "orbit_ledger",
    "UTildeElement", "UnitaryOrbital", "match_element",
    "unitary_indicator", "unitary_zero", "norm_classes",
    "unitary_orbital_n1", "transfer_factor", "measure_ratio",
    "TransferConstants", "transfer_constants",
    "hermitian_constants", "slice_signs",
    "MatchReport", "rs_grid", "verify_matching",
    "flip_pair", "fourier_pair", "singular_transfer_check"
]
