from generate_dataset import generate_base

import math
import pytest
import warnings

import pyOrbital

from fractions import Fraction
from pyOrbital.padic import BaseField, EtaleScalar, UnramifiedCharacter
from pyOrbital.padic import char_eval, etale_ops
from pyOrbital.utils import UnsupportedConfigurationError, error_code

inert5 = generate_base(5, 'inert')
split5 = generate_base(5, 'split')


def test_nonresidue():

    assert inert5.d == 2
    assert generate_base(3).d == 2
    assert generate_base(7).d == 3
    assert split5.d == 1


def test_nonresidue_no_deprecation():

    with warnings.catch_warnings():
        warnings.simplefilter('error', DeprecationWarning)
        assert BaseField(11).d == 2
        assert BaseField(13).d == 2
        assert BaseField(17).d == 3


def test_package_docstring():

    assert 'Jacquet-Rallis' in pyOrbital.__doc__
    assert 'Friedberg' not in pyOrbital.__doc__


def test_unsupported_prime():

    with pytest.raises(UnsupportedConfigurationError) as excinfo:
        BaseField(2)
    assert error_code(excinfo.value) == 'unsupported'

    with pytest.raises(UnsupportedConfigurationError):
        BaseField(9)


def test_unsupported_etale():

    with pytest.raises(UnsupportedConfigurationError):
        BaseField(5, 'ramified')


def test_prime_type():

    with pytest.raises(TypeError):
        BaseField(5.0)


def test_valuation():

    assert inert5.valuation(Fraction(50, 3)) == 2
    assert inert5.valuation(Fraction(3, 25)) == -2
    assert inert5.valuation(0) == math.inf
    assert inert5.is_integral(Fraction(7, 3))
    assert not inert5.is_integral(Fraction(1, 5))


def test_residue():

    assert inert5.residue(Fraction(1, 2), 1) == 3
    assert inert5.residue(-1, 2) == 24
    with pytest.raises(ValueError):
        inert5.residue(Fraction(1, 5), 1)


def test_fractional_part():

    assert inert5.fractional_part(Fraction(7, 5)) == Fraction(2, 5)
    assert inert5.fractional_part(3) == 0


def test_etale_arithmetic():

    j = inert5.j
    assert j * j == 2
    assert j.conj() == -j
    z = inert5.scalar(1, 1)
    assert z.norm() == -1
    assert z * z.inverse() == 1
    assert (z + 1).trace() == 4


def test_split_components():

    z = split5.from_components(3, 0)
    assert z.components == (3, 0)
    assert z.norm() == 0
    with pytest.raises(ValueError):
        z.inverse()
    with pytest.raises(ValueError):
        inert5.from_components(1, 2)


def test_mixed_algebras():

    with pytest.raises(ValueError):
        inert5.j + split5.j


def test_etale_json():

    z = inert5.scalar(Fraction(1, 2), -3)
    assert z.to_json() == {'inert': ['1/2', '-3'], 'd': 2}
    assert EtaleScalar.from_json(z.to_json()) == z
    w = split5.from_components(1, 4)
    assert w.to_json() == {'split': ['1', '4']}


def test_etale_ops():

    z = inert5.scalar(2, 1)
    assert etale_ops(z, None, 'norm') == 2
    assert etale_ops(z, z, 'add') == inert5.scalar(4, 2)
    with pytest.raises(ValueError):
        etale_ops(z, z, 'sqrt')


def test_characters():

    eta = inert5.eta
    assert eta.value_at_p == -1
    assert char_eval(eta, 25, inert5) == 1
    assert eta(Fraction(1, 5), inert5) == -1
    assert split5.eta.is_trivial()

    xi = UnramifiedCharacter(3, 'xi')
    assert (xi * xi.inverse()).is_trivial()
    assert (xi ** 2).value_at_p == 9


def test_character_errors():

    with pytest.raises(ValueError):
        UnramifiedCharacter(0)
    with pytest.raises(ValueError):
        UnramifiedCharacter(1, 'lambda')
    with pytest.raises(ValueError):
        char_eval(inert5.eta, 0, inert5)
