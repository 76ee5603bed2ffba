from generate_dataset import generate_base

import pytest

from pyOrbital.invariants import GlNextElement, SElement, EtaleMatrix
from pyOrbital.invariants import CayleyParams, cayley, cayley_identity
from pyOrbital.invariants import cayley_to_group, cayley_to_lie, delta

inert5 = generate_base(5, 'inert')
split5 = generate_base(5, 'split')
params = CayleyParams(inert5)
params_split = CayleyParams(split5)

Y_swap = GlNextElement([[0, 1], [1, 0]])
Y_nilpotent = GlNextElement([[0, 1], [0, 0]])
Y_3 = GlNextElement([[1, 0, 1], [0, -1, 2], [1, 1, 0]])


def test_default_params():

    assert params.tau == inert5.j
    assert params.sigma == 1
    assert params.is_integral_unit()


def test_invalid_params():

    with pytest.raises(ValueError):
        CayleyParams(inert5, tau=1)
    with pytest.raises(ValueError):
        CayleyParams(inert5, sigma=2)
    with pytest.raises(ValueError):
        CayleyParams(inert5, tau=split5.j)


def test_params_json():

    payload = params.to_json()
    assert payload == {'tau': {'inert': ['0', '1'], 'd': 2},
                       'sigma': {'inert': ['1', '0'], 'd': 2}}
    other = CayleyParams.from_json(inert5, payload)
    assert other.tau == params.tau and other.sigma == params.sigma


def test_image_in_S():

    x = cayley_to_group(Y_swap, params)
    assert isinstance(x, SElement)
    assert x.n == 1


def test_round_trip():

    for Y in (Y_swap, Y_nilpotent, Y_3):
        assert cayley_to_lie(cayley_to_group(Y, params), params) == Y
    assert cayley(cayley(Y_nilpotent, params_split), params_split,
                  'to_lie') == Y_nilpotent


def test_determinant_identity():

    for Y in (Y_swap, Y_nilpotent):
        for sign in ('+', '-'):
            lhs, rhs = cayley_identity(Y, params, sign)
            assert lhs == rhs


def test_nilpotent_image():

    # x = -(1 + 2 Y / tau) for Y^2 = 0
    x = cayley_to_group(Y_nilpotent, params)
    rows = x.x.rows
    assert rows[0][0] == -1
    assert rows[0][1] == -2 * params.tau.inverse()
    assert rows[1][0] == 0
    assert delta(x, '+') == rows[0][1]


def test_outside_chart():

    identity = SElement(EtaleMatrix.identity(2, inert5.d))
    with pytest.raises(ValueError) as excinfo:
        cayley_to_lie(identity, params)
    assert 'outside Cayley chart' in str(excinfo.value)


def test_direction():

    with pytest.raises(ValueError):
        cayley(Y_swap, params, 'sideways')
