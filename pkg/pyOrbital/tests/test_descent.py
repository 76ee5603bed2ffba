from generate_dataset import generate_diagonal
from generate_dataset import generate_sample_n2

import pytest

from pyOrbital.descent import DescentFactor, stratify, descend
from pyOrbital.descent import orbit_representatives, classify_type
from pyOrbital.descent import realize_rs, assemble, locate
from pyOrbital.descent.orbits import _intersection_dim
from pyOrbital.invariants import TildeGlElement, quotient_point, is_regular
from pyOrbital.invariants import central_element
from pyOrbital.linalg.matrix import poly_coeffs, companion, poly_from_coeffs

# Points with k = 0, 1 and 2 descent factors
a_rs = quotient_point(generate_sample_n2())
a_central = quotient_point(TildeGlElement.central(2, 3, 1))
a_k2 = quotient_point(generate_diagonal([0, 1, 2], [0, 0, 1], [0, 0, 1]))
a_quadratic = quotient_point(
    TildeGlElement(companion(poly_from_coeffs([-2, 0, 1])), [0, 0], [0, 0])
)


def test_stratify():

    r, a0, residual = stratify(a_k2)
    assert r == 1
    assert a0.char_coeffs == [-2]
    assert a0.moments == [1]
    assert poly_coeffs(residual) == [0, -1, 1]


def test_stratify_type():

    with pytest.raises(TypeError):
        stratify([0, 1])


def test_descend_rs():

    dd = descend(a_rs)
    assert dd.r == 2
    assert dd.k == 0
    assert dd.is_regular_semisimple()


def test_descend_central():

    dd = descend(a_central)
    assert dd.r == 0
    assert dd.k == 1
    assert dd.factors[0].mult == 2
    assert poly_coeffs(dd.factors[0].P) == [-3, 1]
    assert dd.is_central()


def test_descend_k2():

    dd = descend(a_k2)
    assert dd.k == 2
    assert [poly_coeffs(f.P) for f in dd.factors] == [[-1, 1], [0, 1]]
    assert poly_coeffs(dd.residual()) == [0, -1, 1]
    assert not dd.is_central()


def test_descend_quadratic():

    dd = descend(a_quadratic)
    assert dd.r == 0
    assert dd.k == 1
    assert dd.factors[0].degree == 2
    assert not dd.is_central()


def test_certificate():

    dd = descend(a_k2, [([0, 1], 1), ([-1, 1], 1)])
    assert [poly_coeffs(f.P) for f in dd.factors] == [[-1, 1], [0, 1]]


def test_bad_certificate():

    with pytest.raises(ValueError) as excinfo:
        descend(a_k2, [([0, 1], 1)])
    assert 'differs from the residual' in str(excinfo.value)
    with pytest.raises(ValueError) as excinfo:
        descend(a_k2, [([0, -1, 1], 1)])
    assert 'reducible' in str(excinfo.value)


def test_descent_factor():

    with pytest.raises(ValueError):
        DescentFactor([1, 2], 1)
    with pytest.raises(ValueError):
        DescentFactor([0, 1], 0)
    f = DescentFactor([-3, 1], 2)
    assert DescentFactor.from_json(f.to_json()).mult == 2


def test_realize_rs():

    X0 = realize_rs(a_rs)
    assert quotient_point(X0) == a_rs


def test_central_orbits():

    reps = orbit_representatives(a_central)
    assert len(reps) == 2
    assert reps[0].X == TildeGlElement.central(2, 3, 1)
    assert classify_type(TildeGlElement.central(2, 3, 1)) == (1,)
    assert classify_type(TildeGlElement.central(2, 3, -1)) == (-1,)


def test_k2_orbits():

    reps = orbit_representatives(a_k2)
    assert len(reps) == 4
    for rep in reps:
        assert quotient_point(rep.X) == a_k2
        assert is_regular(rep.X)
        assert classify_type(rep.X) == rep.epsilon


def test_k2_representative():

    dd = descend(a_k2)
    rep = assemble(dd, (1, -1))
    assert rep.X.A == [[2, 0, 1], [1, 1, 0], [0, 0, 0]]
    assert rep.X.v == [1, 0, 0]
    assert rep.X.u == [1, 0, 0]
    with pytest.raises(ValueError):
        assemble(dd, (1,))


def test_dual_basis_orbits():

    reps = orbit_representatives(a_quadratic, kind='dual')
    assert len(reps) == 2
    for rep in reps:
        assert quotient_point(rep.X) == a_quadratic


def test_locate():

    dd = descend(a_k2)
    rep = assemble(dd, (1, -1))
    g = [[1, 1, 0], [0, 1, 0], [0, 0, 2]]
    X = rep.X.act(g)
    found, witness = locate(X, dd)
    assert found.epsilon == (1, -1)
    assert found.X.act(witness) == X


def test_classify_non_regular():

    with pytest.raises(ValueError):
        classify_type(central_element(2, 3))


def test_intersection_dim():

    U = [[1, 0, 0], [0, 1, 0]]
    W = [[0, 1, 0], [0, 0, 1]]
    assert _intersection_dim(U, W) == 1
    assert _intersection_dim(U, U) == 2
    assert _intersection_dim(U, []) == 0
