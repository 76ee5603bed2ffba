from generate_dataset import generate_sample_n2
from generate_dataset import generate_rs_n2

import pytest

from fractions import Fraction
from pyOrbital.invariants import TildeGlElement, GlNextElement, QuotientPoint
from pyOrbital.invariants import delta, quotient_point, is_regular
from pyOrbital.invariants import central_element, stabilizer_dimension

X = generate_sample_n2()
g = [[2, 0], [0, 1]]
Z_plus = TildeGlElement.central(2, 3, 1)
Z_minus = TildeGlElement.central(2, 3, -1)


def test_delta():

    assert delta(X, '+') == 3
    assert delta(X, '-') == -3


def test_delta_equivariance():

    Xg = X.act(g)
    assert delta(Xg, '+') == Fraction(3, 2)
    assert delta(Xg, '-') == -6


def test_delta_theta():

    assert delta(X.theta(), '+') == delta(X, '-')
    assert delta(X.theta(), '-') == delta(X, '+')


def test_delta_sign():

    with pytest.raises(ValueError):
        delta(X, '*')


def test_quotient_point():

    a = quotient_point(X)
    assert a.char_coeffs == [-2, -5]
    assert a.moments == [0, 3]
    assert a.extended_moments(3) == [0, 3, 15]
    assert a.d_values == [0, -9]
    assert a.r == 2
    assert a.is_regular_semisimple()
    assert not a.is_central()


def test_quotient_invariance():

    assert quotient_point(X.act(g)) == quotient_point(X)


def test_quotient_json():

    a = quotient_point(X)
    assert a.to_json() == {'charpoly': ['-2', '-5', '1'], 'moments': ['0', '3']}
    assert QuotientPoint.from_json(a.to_json()) == a
    with pytest.raises(ValueError):
        QuotientPoint.from_json({'charpoly': ['0', '2'], 'moments': ['0']})


def test_central_representatives():

    assert delta(Z_plus, '+') == -1
    assert delta(Z_plus, '-') == 0
    assert delta(Z_minus, '+') == 0
    assert delta(Z_minus, '-') == -1
    a = quotient_point(Z_plus)
    assert a.is_central()
    assert a.d_values == [0, 0]
    assert a.r == 0
    assert quotient_point(Z_minus) == a
    assert quotient_point(central_element(2, 3)) == a


def test_regularity():

    assert is_regular(Z_plus)
    assert is_regular(Z_minus)
    assert is_regular(generate_rs_n2())
    assert not is_regular(central_element(2, 3))
    assert stabilizer_dimension(TildeGlElement.zero(1)) == 1


def test_gl_next():

    Y = GlNextElement.join(X, 7)
    assert Y.n == 2
    Xs, d = Y.split()
    assert Xs == X
    assert d == 7
    assert quotient_point(Y).d == 7
    assert GlNextElement.from_json(Y.to_json()) == Y


def test_element_json():

    payload = X.to_json()
    assert payload == {'n': 2, 'A': [['1', '2'], ['3', '4']],
                       'v': ['1', '0'], 'u': ['0', '1']}
    with pytest.raises(KeyError):
        TildeGlElement.from_json({'A': [[0]], 'v': [0]})
    with pytest.raises(ValueError):
        TildeGlElement.from_json({'n': 2, 'A': [[0]], 'v': [0], 'u': [0]})


def test_dimensions():

    with pytest.raises(ValueError):
        TildeGlElement([[1, 2]], [1], [1])
    with pytest.raises(ValueError):
        TildeGlElement([[1]], [1, 2], [1])
