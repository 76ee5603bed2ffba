"""Exact computation of the local orbital integrals of the Jacquet-Rallis
relative trace formula (Bessel periods on U(n) x U(n+1))."""

# PEP0440 compatible formatted version, see:
# https://www.python.org/dev/peps/pep-0440/
#
# Generic release markers:
#   X.Y
#   X.Y.Z   # For bugfix releases
#
# Admissible pre-release markers:
#   X.YaN   # Alpha release
#   X.YbN   # Beta release
#   X.YrcN  # Release Candidate
#   X.Y     # Final release
#
# Dev branch marker is: 'X.Y.devN' where N is an integer.
#
from . import utils, padic, linalg, invariants, descent, lfactors
from . import orbital, unitary, workbench

__all__ = ["utils", "padic", "linalg", "invariants", "descent", "lfactors",
           "orbital", "unitary", "workbench"]

__version__ = '0.1'
