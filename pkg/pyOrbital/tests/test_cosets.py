from generate_dataset import generate_base, generate_unit_lattice
from generate_dataset import generate_box_function, generate_rs_n1

import pytest

from fractions import Fraction
from pyOrbital.orbital import LatticeCosetFunction, CosetTerm
from pyOrbital.orbital import fourier, self_dual_scale
from pyOrbital.orbital import KAverage, gl_residues
from pyOrbital.orbital import iwasawa_element
from pyOrbital.orbital.cells import x_classes
from pyOrbital.utils import DeskScaleError

inert5 = generate_base(5, 'inert')
unit1 = generate_unit_lattice(1, 5)
box = generate_box_function((0, 1, 0), (0, 1, 1), inert5)
shifted = LatticeCosetFunction.indicator('gl~', 1, inert5, 1, (1, 0, 0))


def test_evaluate():

    assert unit1(generate_rs_n1(0, 1, 1)) == 1
    assert unit1([0, Fraction(1, 5), 0]) == 0
    assert box([3, 6, 5]) == 1
    assert box([3, 2, 5]) == 0
    with pytest.raises(ValueError):
        unit1([0, 0])


def test_algebra():

    assert (box - box).is_zero()
    assert (box + box) == box.scale(2)
    assert 3 * box == box * 3
    assert not (unit1 - box).is_zero()


def test_canonicalize():

    far = LatticeCosetFunction.indicator('gl~', 1, inert5, 1, (6, 5, -10))
    assert far == shifted
    assert far.canonicalize().terms[0].center == (1, 0, 0)


def test_translate():

    assert unit1.translate(1) == unit1
    assert shifted.translate(1) == \
        LatticeCosetFunction.indicator('gl~', 1, inert5, 1, (0, 0, 0))


def test_theta():

    theta_box = box.pullback_theta()
    term = theta_box.terms[0]
    assert term.center == (0, 0, 1)
    assert term.depth == (0, 1, 1)
    assert theta_box.pullback_theta() == box


def test_shape():

    assert unit1.dim == 3
    assert unit1.is_phase_free()
    assert unit1.is_uniform()
    assert not box.is_uniform()
    assert box.max_depth() == 1
    assert LatticeCosetFunction.indicator('gl~', 1, inert5,
                                          -1).support_bound() == 1


def test_invalid_functions():

    with pytest.raises(TypeError):
        LatticeCosetFunction('gl~', 1, 5)
    with pytest.raises(ValueError):
        LatticeCosetFunction('sl', 1, inert5)
    with pytest.raises(ValueError):
        LatticeCosetFunction('u~', 2, inert5)
    with pytest.raises(ValueError):
        LatticeCosetFunction('u~', 1, inert5, h0=0)
    with pytest.raises(ValueError):
        LatticeCosetFunction('gl~', 1, inert5,
                             [CosetTerm(1, (0, 0), 0, None)])


def test_incompatible_ambients():

    other = LatticeCosetFunction.indicator('F^n', 3, inert5)
    with pytest.raises(ValueError):
        unit1 + other
    assert unit1 != other


def test_json():

    payload = box.to_json()
    assert payload['terms'][0]['center'] == ['0', '1', '0']
    assert payload['terms'][0]['depth'] == [0, 1, 1]
    assert LatticeCosetFunction.from_json(payload) == box
    with pytest.raises(KeyError):
        LatticeCosetFunction.from_json({'ambient': 'gl~', 'n': 1})


def test_self_dual_scale():

    assert self_dual_scale(unit1) == 0
    assert self_dual_scale(
        LatticeCosetFunction.indicator('u~', 1, inert5)) == 0


def test_fourier_unit():

    assert fourier(unit1) == unit1


def test_fourier_inversion():

    # F F phi = phi(-X)
    negated = LatticeCosetFunction.indicator('gl~', 1, inert5, 1, (-1, 0, 0))
    assert fourier(fourier(shifted)) == negated


def test_fourier_phase():

    transform = fourier(shifted)
    assert not transform.is_phase_free()
    assert transform([0, 0, 0]) == Fraction(1, 125)
    with pytest.raises(ValueError):
        transform([Fraction(1, 5), 0, 0])


def test_gl_residues():

    assert gl_residues(1, 5, 0) == [[[1]]]
    assert len(gl_residues(1, 5, 1)) == 4
    assert len(gl_residues(2, 3, 1)) == 48
    with pytest.raises(DeskScaleError):
        gl_residues(2, 5, 3)


def test_kaverage():

    Phi = KAverage(box)
    assert Phi.support_bound == 0
    assert Phi(generate_rs_n1(0, 3, 5)) == Fraction(1, 4)
    assert Phi(generate_rs_n1(0, 1, 5)) == Fraction(1, 4)
    assert Phi(generate_rs_n1(0, 5, 5)) == 0
    assert KAverage(unit1)(generate_rs_n1(1, 1, 1)) == 1


def test_kaverage_errors():

    with pytest.raises(ValueError):
        KAverage(LatticeCosetFunction.indicator('F^n', 1, inert5))
    with pytest.raises(ValueError):
        KAverage(fourier(shifted))
    box2 = LatticeCosetFunction.indicator('gl~', 2, inert5,
                                          (0, 0, 0, 0, 1, 1, 0, 0))
    with pytest.raises(DeskScaleError):
        KAverage(box2)


def test_iwasawa_cells():

    assert iwasawa_element((1, 0), Fraction(2), 5) == [[5, 10], [0, 1]]
    assert iwasawa_element((2,), None, 5) == [[25]]
    assert x_classes(0, 5) == [0]
    assert x_classes(-1, 5) == [Fraction(i, 5) for i in range(5)]
