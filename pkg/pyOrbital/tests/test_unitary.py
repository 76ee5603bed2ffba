from generate_dataset import generate_base, generate_unit_lattice
from generate_dataset import generate_rs_n1, generate_diagonal

import pytest

from fractions import Fraction
from pyOrbital.invariants import TildeGlElement, quotient_point
from pyOrbital.linalg.matrix import companion, poly_from_coeffs
from pyOrbital.orbital import LatticeCosetFunction
from pyOrbital.unitary import HermitianClass, hermitian_classes
from pyOrbital.unitary import matching_disc, semisimple_orbits, orbit_ledger
from pyOrbital.unitary import UTildeElement, match_element
from pyOrbital.unitary import unitary_indicator, unitary_zero
from pyOrbital.unitary import unitary_orbital_n1, transfer_factor
from pyOrbital.unitary import measure_ratio, hermitian_constants
from pyOrbital.unitary import transfer_constants, rs_grid, verify_matching
from pyOrbital.unitary import flip_pair, fourier_pair
from pyOrbital.unitary import singular_transfer_check
from pyOrbital.utils import DeskScaleError, UnsupportedConfigurationError

inert5 = generate_base(5, 'inert')
split5 = generate_base(5, 'split')
unit1 = generate_unit_lattice(1, 5)
unit1_split = generate_unit_lattice(1, 5, 'split')

# Fundamental lemma pair of the unit lattice
unit_pair = {0: unitary_indicator(inert5, 0), 1: unitary_zero(inert5, 1)}
split_pair = {0: unitary_indicator(split5, 0)}

# phi = 1_{O x O x pO} matches the unit lattice of the non-norm line
shifted = LatticeCosetFunction.indicator('gl~', 1, inert5, (0, 0, 1))
shifted_pair = {0: unitary_zero(inert5, 0), 1: unitary_indicator(inert5, 1)}

Z_plus = TildeGlElement.central(1, 0, 1)
Z_minus = TildeGlElement.central(1, 0, -1)

a_central = quotient_point(Z_plus)
a_k2 = quotient_point(generate_diagonal([0, 1, 2], [0, 0, 1], [0, 0, 1]))
a_quadratic = quotient_point(
    TildeGlElement(companion(poly_from_coeffs([-2, 0, 1])), [0, 0], [0, 0])
)


def test_hermitian_classes():

    classes = hermitian_classes(inert5, 2)
    assert [c.disc_class for c in classes] == [0, 1]
    assert classes[1].gram(5) == [1, 5]
    assert classes[1].eta_disc() == -1
    assert len(hermitian_classes(inert5, 2, degree=2)) == 1
    assert len(hermitian_classes(split5, 2)) == 1
    assert HermitianClass(1, 1, degree=2).base_disc_class() == 0
    assert HermitianClass(0).gram(5) == []


def test_invalid_hermitian_class():

    with pytest.raises(ValueError):
        HermitianClass(1, 2)
    with pytest.raises(ValueError):
        HermitianClass(1, 1, split=True)
    with pytest.raises(ValueError):
        HermitianClass(-1)


def test_matching_disc():

    assert matching_disc(generate_rs_n1(0, 1, 1), inert5) == 0
    assert matching_disc(generate_rs_n1(0, 1, 5), inert5) == 1
    assert matching_disc(generate_rs_n1(0, 1, 5), split5) == 0
    with pytest.raises(ValueError):
        matching_disc(Z_plus, inert5)


def test_semisimple_orbits():

    assert len(semisimple_orbits(a_central, inert5)) == 2
    assert len(semisimple_orbits(a_k2, inert5)) == 4
    assert len(semisimple_orbits(a_k2, split5)) == 1
    assert len(semisimple_orbits(a_quadratic, inert5)) == 1
    discs = sorted(V.disc_class for V, _ in
                   semisimple_orbits(a_central, inert5))
    assert discs == [0, 1]


def test_orbit_ledger():

    ledger = orbit_ledger(semisimple_orbits(a_k2, inert5))
    assert list(ledger.columns) == ['V_disc', 'h0_disc', 'components']
    assert len(ledger) == 4
    assert set(ledger['h0_disc']) == {0}


def test_utilde_element():

    j = inert5.j
    XV = UTildeElement([[3]], [1 + j], [1], inert5)
    assert XV.moments() == [-1]
    assert XV.char_coeffs() == [-3]
    assert XV.coordinates() == [3, 1, 1]
    assert UTildeElement.from_json(XV.to_json()) == XV
    with pytest.raises(ValueError):
        UTildeElement([[j]], [1], [1], inert5)
    with pytest.raises(ValueError):
        UTildeElement([[1]], [1], [0], inert5)
    with pytest.raises(TypeError):
        UTildeElement([[1]], [1], [1], 5)


def test_match_element():

    V, XV = match_element(generate_rs_n1(0, 1, 1), inert5)
    assert V.disc_class == 0
    assert inert5.valuation(XV.moments()[0] - 1) >= 6

    V, XV = match_element(generate_rs_n1(2, 1, 5), inert5)
    assert V.disc_class == 1
    assert XV.h0 == 5
    assert XV.coordinates()[0] == 2

    V, XV = match_element(generate_rs_n1(0, 1, 3), split5)
    assert V.split
    assert XV.moments() == [3]
    with pytest.raises(DeskScaleError):
        match_element(TildeGlElement.zero(2), inert5)


def test_unitary_orbital():

    phi0 = unitary_indicator(inert5, 0)
    assert unitary_orbital_n1((0, 1), phi0) == 1
    assert unitary_orbital_n1((0, 2), phi0) == 1
    assert unitary_orbital_n1((0, 5), phi0) == 0
    assert unitary_orbital_n1((0, Fraction(1, 25)), phi0) == 0
    assert unitary_orbital_n1((0, 0), phi0) == 1
    assert unitary_orbital_n1((Fraction(1, 5), 1), phi0) == 0
    assert unitary_orbital_n1((0, 5), unitary_indicator(inert5, 1)) == 1


def test_unitary_orbital_details():

    record = unitary_orbital_n1((0, 1), unitary_indicator(inert5, 0),
                                details=True)
    assert record.value == 1
    assert record.raw == record.volume
    # Nm w = 1 has p + 1 solutions modulo p
    assert record.volume == Fraction(6, 5)


def test_unitary_orbital_split():

    phi0 = unitary_indicator(split5, 0)
    assert unitary_orbital_n1((0, 1), phi0) == 1
    assert unitary_orbital_n1((0, 5), phi0) == 2


def test_unitary_orbital_errors():

    with pytest.raises(TypeError):
        unitary_orbital_n1((0, 1), unit1)
    XV = UTildeElement([[0]], [1], [1], inert5)
    with pytest.raises(ValueError):
        unitary_orbital_n1(XV, unitary_indicator(inert5, 1))


def test_transfer_factor():

    X = generate_rs_n1(0, 5, 1)
    assert transfer_factor(X, inert5, '+') == -1
    assert transfer_factor(X, inert5, '-') == 1
    assert transfer_factor(X, split5, '+') == 1
    with pytest.raises(ValueError):
        transfer_factor(Z_plus, inert5, '-')


def test_measure_ratio():

    inert = measure_ratio(inert5, 1, 1)
    assert inert['gl'] == Fraction(4, 5)
    assert inert['u'] == Fraction(6, 5)
    assert inert['ratio'] == Fraction(2, 3)
    assert inert['ratio'] == inert['expected']

    split = measure_ratio(split5, 1, 1)
    assert split['ratio'] == 1
    with pytest.raises(ValueError):
        measure_ratio(inert5, 0, 1)
    with pytest.raises(ValueError):
        measure_ratio(inert5, 5, 1)


def test_hermitian_constants():

    V = HermitianClass(1, 1)
    assert hermitian_constants(V) == (1, -1)
    eps = {'shift': 2, 'half': 1, 'eta_minus_one': 1}
    assert hermitian_constants(V, eps) == (Fraction(1, 2), Fraction(-1, 2))
    with pytest.raises(UnsupportedConfigurationError):
        hermitian_constants(V, {'shift': 2})


def test_transfer_constants():

    constants = transfer_constants(Z_plus, inert5)
    assert constants.c_plus == 1
    assert constants.c_X == 1
    assert constants.epsilon == (1,)
    assert constants.c_X_o(HermitianClass(1, 1)) == 1
    assert len(constants.ledger()) == 2

    constants = transfer_constants(Z_minus, inert5)
    assert constants.c_X_o(HermitianClass(1, 1)) == -1
    assert constants.to_json()['epsilon'] == '-'


def test_transfer_constants_modes():

    with pytest.raises(ValueError):
        transfer_constants(Z_plus, inert5, eps={'shift': 1})
    with pytest.raises(UnsupportedConfigurationError):
        transfer_constants(Z_plus, inert5, unramified=False)


def test_rs_grid():

    assert len(rs_grid(inert5)) == 150
    assert len(rs_grid(inert5, 1)) == 54


def test_verify_matching():

    report = verify_matching(unit1, unit_pair)
    assert report.matched
    assert report.first_failure is None
    assert report.checked == 150
    assert verify_matching(shifted, shifted_pair).matched
    assert verify_matching(unit1_split, split_pair).matched


def test_verify_matching_minus():

    assert verify_matching(unit1, flip_pair(unit_pair, inert5), 3,
                           '-').matched


def test_verify_matching_failure():

    report = verify_matching(unit1, {0: unitary_zero(inert5, 0),
                                     1: unitary_zero(inert5, 1)})
    assert not report.matched
    assert report.first_failure['lhs'] != report.first_failure['rhs']


def test_verify_matching_family():

    with pytest.raises(ValueError):
        verify_matching(unit1, {0: unitary_indicator(inert5, 0)})
    with pytest.raises(ValueError):
        verify_matching(unit1, {0: unitary_indicator(inert5, 1),
                                1: unitary_zero(inert5, 1)})


def test_fourier_pair():

    phi_hat, phiV_hat = fourier_pair(unit1, unit_pair)
    assert phi_hat == unit1
    assert phiV_hat[0] == unit_pair[0]
    assert phiV_hat[1].is_zero()


def test_transfer_check_central():

    for Z in (Z_plus, Z_minus):
        report = singular_transfer_check(unit1, unit_pair, Z)
        assert report['verdict'] == 'equal'


def test_transfer_check_shifted():

    report = singular_transfer_check(shifted, shifted_pair, Z_minus)
    assert report['verdict'] == 'equal'
    assert report['lhs'] == '-1'
    report = singular_transfer_check(shifted, shifted_pair, Z_plus)
    assert report['verdict'] == 'equal'


def test_transfer_check_full_n1():

    X = generate_rs_n1(1, 1, 5)
    report = singular_transfer_check(unit1, unit_pair, X, mode='full_n1')
    assert report['verdict'] == 'equal'
    assert report['lhs'] == '0'


def test_transfer_check_unmatched():

    zeros = {0: unitary_zero(inert5, 0), 1: unitary_zero(inert5, 1)}
    report = singular_transfer_check(unit1, zeros, Z_plus)
    assert report['verdict'] == 'unmatched'


def test_transfer_check_n2():

    unit2 = generate_unit_lattice(2, 5)
    for sign in (1, -1):
        with pytest.warns(UserWarning):
            report = singular_transfer_check(
                unit2, {0: 1, 1: 0}, TildeGlElement.central(2, 0, sign)
            )
        assert report['verdict'] == 'equal'


def test_transfer_check_errors():

    with pytest.raises(ValueError):
        singular_transfer_check(unit1, unit_pair, generate_rs_n1(0, 1, 1))
    with pytest.raises(ValueError):
        singular_transfer_check(unit1, unit_pair, Z_plus, mode='group')
    with pytest.raises(TypeError):
        singular_transfer_check(unit1, unit_pair, [[0], [1], [0]])
