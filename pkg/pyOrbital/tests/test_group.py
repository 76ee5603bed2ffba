from generate_dataset import generate_base, plus_central_L_n1

import pytest

from fractions import Fraction

from pyOrbital.invariants import CayleyParams, EtaleMatrix, GlNextElement
from pyOrbital.invariants import TildeGlElement, cayley_to_group
from pyOrbital.orbital import group_pullback, group_direct_rs, f_S, f_gl
from pyOrbital.orbital import GroupCosetFunction, unit_residues
from pyOrbital.orbital import group_element_from_lie, sigma_independence
from pyOrbital.orbital import nu, nu_witness, alpha, mu_ratio
from pyOrbital.orbital import LatticeCosetFunction
from pyOrbital.utils import DeskScaleError, UnsupportedConfigurationError

inert5 = generate_base(5, 'inert')
split5 = generate_base(5, 'split')
params = CayleyParams(inert5)

# Cayley images of Z_0^+ (central) and of (0, 1, 1) (regular semisimple)
Y_central = GlNextElement.join(TildeGlElement.central(1, 0, 1), 0)
Y_rs = GlNextElement([[0, 1], [1, 0]])
gamma_central = group_element_from_lie(Y_central, params)
gamma_rs = group_element_from_lie(Y_rs, params)
unit = GroupCosetFunction.unit(inert5)
coset_rs = GroupCosetFunction.coset(inert5, gamma_rs)


def test_nu():

    j = inert5.j
    x = nu(EtaleMatrix([[j, 0], [0, 1]], inert5.d))
    assert x.x.rows[0][0] == -1
    assert x.x.rows[1][1] == 1
    with pytest.raises(TypeError):
        nu([[1, 0], [0, 1]])


def test_nu_witness():

    x = alpha(gamma_rs)
    y = nu_witness(x, inert5)
    assert nu(y) == x
    assert inert5.valuation(y.det().norm()) == 0


def test_alpha_of_lie_element():

    g1, g2 = gamma_central
    assert g1.size == 1
    assert g2.size == 2
    assert alpha(gamma_central) == cayley_to_group(Y_central, params)
    assert alpha(gamma_rs) == cayley_to_group(Y_rs, params)


def test_unit_residues():

    assert len(unit_residues(inert5)) == 24
    assert len(unit_residues(split5)) == 16


def test_coset_function_values():

    g1, g2 = gamma_rs
    assert unit(gamma_rs) == 1
    assert coset_rs(gamma_rs) == 1
    assert coset_rs((g1.scale(2), g2)) == 0
    assert (unit + coset_rs.scale(3))(gamma_rs) == 4
    five = EtaleMatrix([[Fraction(1, 5)]], inert5.d)
    assert unit((five, g2)) == 0


def test_coset_function_depth():

    with pytest.raises(DeskScaleError):
        GroupCosetFunction(inert5, [(1, gamma_rs, 2)])
    with pytest.raises(ValueError):
        GroupCosetFunction.coset(
            inert5, (EtaleMatrix([[5]], inert5.d), gamma_rs[1])
        )


def test_f_S_unit():

    x = alpha(gamma_rs)
    assert f_S(unit, x) == 1
    assert f_S(unit.scale(3), x) == 3
    # b -> b / 5 leaves S(O)
    assert f_S(unit, x.act([[5]])) == 0


def test_f_S_coset():

    x = alpha(gamma_rs)
    order = (5 ** 2 - 1) * (5 ** 2 - 5)
    value = f_S(coset_rs, x)
    assert 0 < value <= Fraction(1, order)
    assert f_S(coset_rs, x.act([[5]])) == 0


def test_f_gl_unit():

    phi = f_gl(unit, params, 0)
    assert phi.evaluate(TildeGlElement([[0]], [1], [1])) == 1
    assert phi.evaluate(TildeGlElement([[0]], [5], [1])) == 1
    assert phi.evaluate(TildeGlElement([[0]], [Fraction(1, 5)], [1])) == 0
    assert f_gl(unit, params, Fraction(1, 5)).is_zero()


def test_f_gl_coset():

    phi = f_gl(coset_rs, params, 0)
    assert isinstance(phi, LatticeCosetFunction)
    assert phi.evaluate(TildeGlElement([[0]], [1], [1])) == \
        f_S(coset_rs, alpha(gamma_rs))


def test_pullback_central():

    L, I = group_pullback(unit, gamma_central, params, 1)
    assert L == plus_central_L_n1(-1)
    assert I == L


def test_pullback_rs():

    L, I = group_pullback(unit, gamma_rs, params, 1)
    assert L == 1
    assert I == 1
    assert group_direct_rs(unit, gamma_rs, 1) == I


def test_pullback_weight():

    L, I = group_pullback(unit.scale(3), gamma_central, params, 1)
    assert I == 3 * L


def test_pullback_coset():

    L, I = group_pullback(coset_rs, gamma_rs, params, 1)
    assert L == 1
    assert I != 0
    assert I == group_direct_rs(coset_rs, gamma_rs, 1)
    # scaling by mu(det g_1 / det g_2) is the only dependence on mu
    assert group_pullback(coset_rs, gamma_rs, params, 1, 3)[1] == \
        I * mu_ratio(gamma_rs, 3, inert5)


def test_pullback_type():

    with pytest.raises(TypeError):
        group_pullback(LatticeCosetFunction.unit_lattice(1, inert5),
                       gamma_rs, params, 1)


def test_pullback_n2():

    gamma = (EtaleMatrix.identity(2, inert5.d),
             EtaleMatrix.identity(3, inert5.d))
    with pytest.raises(DeskScaleError):
        group_pullback(unit, gamma, params, 1)


def test_mu_ratio():

    one = EtaleMatrix.identity(2, inert5.d)
    five = EtaleMatrix([[5]], inert5.d)
    assert mu_ratio((five, one), 3, inert5) == 3
    assert mu_ratio((five, one), None, inert5) == 1
    assert mu_ratio((EtaleMatrix([[inert5.j]], inert5.d), one), 3,
                    inert5) == 1

    z = split5.from_components(5, 1)
    with pytest.raises(UnsupportedConfigurationError):
        mu_ratio((EtaleMatrix([[z]], split5.d),
                  EtaleMatrix.identity(2, split5.d)), 3, split5)


def test_sigma_independence():

    values = sigma_independence(gamma_rs, [1, -1], 1, inert5)
    assert values[1] == 1
    assert values[-1] == 1


def test_sigma_independence_coset():

    values = sigma_independence(gamma_rs, [1, -1], 1, inert5, f=coset_rs)
    assert values[1] == group_direct_rs(coset_rs, gamma_rs, 1)


def test_twist_eta():

    g1, g2 = gamma_rs
    eta = inert5.eta
    value = group_direct_rs(coset_rs, gamma_rs, 1, eta)
    assert value != 0
    uniformizer = EtaleMatrix([[5, 0], [0, 1]], inert5.d)
    assert group_direct_rs(coset_rs, (g1, g2 @ uniformizer), 1, eta) == \
        -value
    unit_y = EtaleMatrix([[2, 0], [1, 1]], inert5.d)
    assert group_direct_rs(coset_rs, (g1, g2 @ unit_y), 1, eta) == value
