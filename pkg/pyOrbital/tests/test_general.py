from generate_dataset import generate_base, generate_unit_lattice
from generate_dataset import generate_diagonal, generate_rs_n1
from generate_dataset import generate_box_function, plus_central_L_n1

import pytest

from fractions import Fraction
from pyOrbital.descent import orbit_representatives
from pyOrbital.invariants import TildeGlElement, quotient_point
from pyOrbital.lfactors import central_L, chi_of
from pyOrbital.linalg.matrix import companion, poly_from_coeffs
from pyOrbital.orbital import orbital_general, orbital_rs, OrbitalResult
from pyOrbital.orbital import twist_factor

inert5 = generate_base(5, 'inert')
chi = chi_of(1, inert5)
unit1 = generate_unit_lattice(1, 5)
unit3 = generate_unit_lattice(3, 5)

# k = 2 descent point: r = 1 with the factors x - 1 and x
a_k2 = quotient_point(generate_diagonal([0, 1, 2], [0, 0, 1], [0, 0, 1]))
reps_k2 = orbit_representatives(a_k2)

a_quadratic = quotient_point(
    TildeGlElement(companion(poly_from_coeffs([-2, 0, 1])), [0, 0], [0, 0])
)
reps_quadratic = orbit_representatives(a_quadratic)


def test_rs_route():

    X = generate_rs_n1(0, 1, 5)
    result = orbital_general(X, unit1, 1)
    assert isinstance(result, OrbitalResult)
    assert result.value == orbital_rs(X, unit1, 1)
    assert result.L == 1
    assert result.normalized == result.value


def test_central_route():

    Z = TildeGlElement.central(1, 0, 1)
    result = orbital_general(Z, unit1, 1)
    assert result.value == plus_central_L_n1(-1)
    assert result.L == plus_central_L_n1(-1)
    assert result.normalized == 1


def test_central_route_box():

    Z = TildeGlElement.central(1, 0, 1)
    box = generate_box_function((0, 1, 0), (0, 1, 1), inert5)
    result = orbital_general(Z, box, 1)
    assert result.value == Fraction(1, 4)


def test_central_n3():

    Z = TildeGlElement.central(3, 0, -1)
    result = orbital_general(Z, unit3, 1)
    assert result.L == central_L(3, -1, chi, inert5)
    assert result.normalized == 1


def test_descent_product():

    assert len(reps_k2) == 4
    for rep in reps_k2:
        result = orbital_general(rep.X, unit3, 1)
        assert result.normalized == 1


def test_descent_product_components():

    rep = reps_k2[0]
    result = orbital_general(rep.X, unit3, 1,
                             components=(None, [None, None]))
    assert result.normalized == 1
    with pytest.raises(ValueError):
        orbital_general(rep.X, unit3, 1, components=(None, [None]))


def test_descent_twist():

    rep = reps_k2[1]
    g = [[1, 1, 0], [0, 1, 0], [0, 0, 5]]
    result = orbital_general(rep.X.act(g), unit3, 1)
    base_result = orbital_general(rep.X, unit3, 1)
    assert result.value == \
        base_result.value * twist_factor(g, chi, inert5)
    assert result.normalized == base_result.normalized * \
        twist_factor(g, chi, inert5)


def test_quadratic_factor():

    for rep in reps_quadratic:
        result = orbital_general(rep.X, generate_unit_lattice(2, 5), 1)
        assert result.L == central_L(1, rep.epsilon[0], chi, inert5, 2)
        assert result.normalized == 1


def test_unsupported_function():

    box3 = generate_unit_lattice(3, 5).scale(2)
    with pytest.raises(ValueError) as excinfo:
        orbital_general(reps_k2[0].X, box3, 1)
    assert 'general Schwartz descent' in str(excinfo.value)
    with pytest.raises(TypeError):
        orbital_general([[0]], unit1, 1)


def test_support_neighbourhood():

    # cutting phi down to A in A_X + p^k O keeps I_X
    Z = TildeGlElement.central(1, 1, 1)
    window = generate_box_function((1, 0, 0), (2, 0, 0), inert5)
    assert orbital_general(Z, window, 1).value == \
        orbital_general(Z, unit1, 1).value
    X = generate_rs_n1(0, 1, 5)
    box = generate_box_function((0, 1, 0), (0, 1, 1), inert5)
    narrow = generate_box_function((0, 1, 0), (3, 1, 1), inert5)
    assert orbital_general(X, narrow, 1).value == \
        orbital_general(X, box, 1).value
    off = generate_box_function((1, 0, 0), (1, 0, 0), inert5)
    assert orbital_general(X, off, 1).value == 0
