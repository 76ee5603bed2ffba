"""Regularized orbital integrals on gl~_n: lattice coset functions, Tate
and gamma routes, closed orbits, descent products, the group side at
n = 1 and a brute-force Iwasawa oracle."""

# Authors: pyOrbital developers
#
# License: BSD (3-clause)

from .cosets import LatticeCosetFunction, CosetTerm, AMBIENTS
from .fourier import fourier, self_dual_scale
from .kaverage import KAverage, gl_residues
from .cells import IwasawaCell, iwasawa_element, cell_value
from .tate import f_phi, tate_integral, orbital_central, orbital_central_rep
from .tate import central_data, twist_factor
from .gamma import orbital_via_gamma
from .rs import orbital_rs, rs_window, rs_cells
from .oracle import oracle_integrate, rational_tail, x_support_valuation
from .oracle import central_tail_denominator
from .general import orbital_general, OrbitalResult
from .group import group_pullback, group_direct_rs, sigma_independence
from .group import nu, nu_witness, alpha, group_element_from_lie, mu_ratio
from .group import GroupCosetFunction, GroupCosetTerm, f_S, f_gl
from .group import unit_residues

__all__ = [
    "LatticeCosetFunction", "CosetTerm", "AMBIENTS",
    "fourier", "self_dual_scale",
    "KAverage", "gl_residues",
    "IwasawaCell", "iwasawa_element", "cell_value",
    "f_phi", "tate_integral", "orbital_central", "orbital_central_rep",
    "central_data", "twist_factor",
    "orbital_via_gamma",
    "orbital_rs", "rs_window", "rs_cells",
    "oracle_integrate", "rational_tail", "x_support_valuation",
    "central_tail_denominator",
    "orbital_general", "OrbitalResult",
    "group_pullback", "group_direct_rs", "sigma_independence",
    "nu", "nu_witness", "alpha", "group_element_from_lie", "mu_ratio",
    "GroupCosetFunction", "GroupCosetTerm", "f_S", "f_gl", "unit_residues"
]
