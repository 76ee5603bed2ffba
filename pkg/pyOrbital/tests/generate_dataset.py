# coding: utf-8

# Synthetic datasets

# pyOrbital uses small exact datasets in order to validate the implementation
# of its functionalities: bases, elements of gl~_n and lattice functions
# whose orbital integrals are known in closed form.

from fractions import Fraction

from pyOrbital.invariants import TildeGlElement
from pyOrbital.lfactors import LaurentRational
from pyOrbital.orbital import LatticeCosetFunction, CosetTerm
from pyOrbital.padic import BaseField


# Helper functions
def generate_base(p=5, etale='inert'):
    """Generates a base field

    Parameters
    ----------

    p: int, optional
        Odd prime.
        Default is 5.
    etale: str, optional
        Type of the quadratic etale algebra ('inert' or 'split').
        Default is 'inert'.

    Returns
    -------

    base: BaseField
    """

    return BaseField(p, etale)


def generate_unit_lattice(n=1, p=5, etale='inert'):
    """Indicator of the standard lattice of gl~_n."""

    return LatticeCosetFunction.unit_lattice(n, generate_base(p, etale))


def generate_box_function(center, depth, base, weight=1):
    """Single-coset function on gl~_1

    Parameters
    ----------

    center: list
        Coordinates (a, v, u) of the center.
    depth: tuple
        Depth of the box on each coordinate.
    base: BaseField
    weight: int, optional
        Default is 1.

    Returns
    -------

    phi: LatticeCosetFunction
    """

    return LatticeCosetFunction(
        'gl~', 1, base, [CosetTerm(weight, center, depth, None)]
    )


def generate_rs_n1(a=0, v=1, u=1):
    """Regular semisimple element (a, v, u) of gl~_1."""

    return TildeGlElement([[a]], [v], [u])


def generate_rs_n2():
    """Integral regular semisimple element of gl~_2 with d_2 = 1."""

    return TildeGlElement([[0, 0], [0, 1]], [1, 1], [1, 1])


def generate_sample_n2():
    """Element of gl~_2 with delta^+ = 3 and delta^- = -3."""

    return TildeGlElement([[1, 2], [3, 4]], [1, 0], [0, 1])


def generate_diagonal(values, v=None, u=None):
    """Element (diag(values), v, u) of gl~_n (v and u default to 0)."""

    n = len(values)
    A = [[Fraction(values[i]) if i == j else Fraction(0) for j in range(n)]
         for i in range(n)]
    v = [0] * n if v is None else v
    u = [0] * n if u is None else u
    return TildeGlElement(A, v, u)


def generate_laurent(num, den=None):
    """LaurentRational from {exponent: coefficient} dictionaries."""

    return LaurentRational.from_terms(num, den)


def plus_central_L_n1(chi_value):
    """Closed form chi t / (chi t - 1) of the n = 1 plus L-factor."""

    c = Fraction(chi_value)
    return generate_laurent({1: c}, {1: c, 0: -1})


def minus_central_L_n1(chi_value):
    """Closed form 1 / (1 - chi t) of the n = 1 minus L-factor."""

    return generate_laurent({0: 1}, {0: 1, 1: -Fraction(chi_value)})
