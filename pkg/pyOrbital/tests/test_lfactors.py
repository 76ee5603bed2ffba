from generate_dataset import generate_base, generate_laurent
from generate_dataset import plus_central_L_n1, minus_central_L_n1
from generate_dataset import generate_sample_n2

import pytest

from fractions import Fraction
from pyOrbital.descent import descend
from pyOrbital.invariants import TildeGlElement, quotient_point
from pyOrbital.lfactors import LaurentRational, LFactorSpec, build_L
from pyOrbital.lfactors import central_L, central_gamma, gamma_factor
from pyOrbital.lfactors import L_for_orbit, local_degrees, chi_of
from pyOrbital.linalg.matrix import companion, poly_from_coeffs
from pyOrbital.padic import UnramifiedCharacter
from pyOrbital.utils import UnsupportedConfigurationError

inert5 = generate_base(5, 'inert')
split5 = generate_base(5, 'split')
chi = chi_of(1, inert5)
t = LaurentRational.t()
geometric = generate_laurent({0: 1}, {0: 1, 1: -1})


def test_chi_of():

    assert chi.value_at_p == -1
    assert chi_of(1, split5).value_at_p == 1
    assert chi_of(UnramifiedCharacter(2), inert5).value_at_p == -2


def test_arithmetic():

    assert t * t ** -1 == 1
    assert (1 - t) * geometric == 1
    assert geometric - 1 == t * geometric
    with pytest.raises(ZeroDivisionError):
        t / LaurentRational(0)


def test_canonical_form():

    inv = generate_laurent({0: 1}, {1: 1})
    num, den = inv.canonical()
    assert num == {-1: 1}
    assert den == {0: 1}
    assert inv.is_laurent_polynomial()
    assert not geometric.is_laurent_polynomial()


def test_json():

    L = plus_central_L_n1(-1)
    assert L.to_json() == {'num': [[1, '1']], 'den': [[1, '1'], [0, '1']]}
    assert LaurentRational.from_json(L.to_json()) == L
    with pytest.raises(ValueError):
        LaurentRational.from_json({'num': [[0, '1']], 'den': []})


def test_variable_changes():

    assert plus_central_L_n1(-1).substitute_inverse() == \
        generate_laurent({0: 1}, {0: 1, 1: 1})
    assert geometric.power_variable(2) == \
        generate_laurent({0: 1}, {0: 1, 2: -1})
    assert geometric.scale_variable(2) == \
        generate_laurent({0: 1}, {0: 1, 1: -2})


def test_evaluate():

    assert geometric.evaluate(Fraction(1, 2)) == 2
    with pytest.raises(ValueError):
        geometric.evaluate(1)
    with pytest.raises(ValueError):
        geometric.evaluate(0)


def test_order():

    assert (1 - t).order_at(1) == 1
    assert (geometric ** 2).order_at(1) == -2
    assert geometric.order_at(2) == 0
    with pytest.raises(ValueError):
        LaurentRational(0).order_at(1)


def test_holo_at():

    assert tuple(geometric.holo_at(0, 5)) == (-1, None)
    assert tuple(geometric.holo_at(1, 5)) == (0, Fraction(5, 4))
    assert tuple((1 - t).holo_at(0, 5)) == (1, 0)
    assert tuple(LaurentRational(0).holo_at(0, 5)) == (None, 0)
    with pytest.raises(ValueError):
        geometric.holo_at(Fraction(1, 2), 5)


def test_lfactor_spec():

    spec = LFactorSpec(chi, 1, 0)
    dual = spec.dual()
    assert dual.s_coefficient == -1
    assert dual.s_offset == 1
    assert dual.character.value_at_p == -1
    with pytest.raises(ValueError):
        LFactorSpec(chi, 1, Fraction(1, 2))
    with pytest.raises(ValueError):
        LFactorSpec(chi, 1.5, 0)


def test_build_L():

    trivial = UnramifiedCharacter(1)
    assert build_L(LFactorSpec(trivial, 1, 0), inert5) == geometric
    # L(s + 1) = (1 - t / p)^-1
    assert build_L(LFactorSpec(trivial, 1, 1), inert5) == \
        generate_laurent({0: 1}, {0: 1, 1: Fraction(-1, 5)})


def test_central_L_n1():

    assert central_L(1, 1, chi, inert5) == plus_central_L_n1(-1)
    assert central_L(1, -1, chi, inert5) == minus_central_L_n1(-1)
    assert central_L(1, -1, chi, inert5, degree=2) == \
        generate_laurent({0: 1}, {0: 1, 2: -1})


def test_central_L_n2():

    c = Fraction(-1)
    plus = 1 / ((1 - 1 / (c * t)) * (1 - 5 / (c * t) ** 2))
    minus = 1 / ((1 - c * t) * (1 - 5 * c ** 2 * t ** 2))
    assert central_L(2, 1, chi, inert5) == plus
    assert central_L(2, -1, chi, inert5) == minus


def test_gamma_factor():

    trivial = UnramifiedCharacter(1)
    gamma = gamma_factor(trivial, 1, 0, inert5)
    assert gamma == (1 - t) / (1 - 1 / (5 * t))
    assert central_gamma(1, -1, chi, inert5) == gamma_factor(chi, 1, 0,
                                                             inert5)


def test_local_degrees():

    P = poly_from_coeffs([-2, 0, 1])
    assert local_degrees(P, 5) == [2]
    assert local_degrees(P, 7) == [1, 1]
    assert local_degrees(poly_from_coeffs([Fraction(-2, 25), 0, 1]), 5) == [2]
    with pytest.raises(UnsupportedConfigurationError):
        local_degrees(poly_from_coeffs([-5, 0, 1]), 5)


def test_L_for_orbit():

    Z = TildeGlElement.central(1, 0, 1)
    assert L_for_orbit(Z, UnramifiedCharacter(1), inert5) == \
        plus_central_L_n1(-1)
    assert L_for_orbit(generate_sample_n2(), UnramifiedCharacter(1),
                       inert5) == 1


def test_L_for_orbit_quadratic():

    X = TildeGlElement(companion(poly_from_coeffs([-2, 0, 1])), [0, 0],
                       [0, 0])
    dd = descend(quotient_point(X))
    L = L_for_orbit((dd, (1,)), UnramifiedCharacter(1), inert5)
    assert L == central_L(1, 1, chi, inert5, degree=2)
    with pytest.raises(ValueError):
        L_for_orbit((dd, (1, -1)), UnramifiedCharacter(1), inert5)
