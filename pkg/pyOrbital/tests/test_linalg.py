import pytest

from fractions import Fraction
from pyOrbital.linalg import det, inverse, rank, solve_linear, charpoly
from pyOrbital.linalg import hankel_determinants, minimal_recurrence
from pyOrbital.linalg import berlekamp_massey, trace_dual_basis
from pyOrbital.linalg import QuotientRingElement, companion
from pyOrbital.linalg.matrix import poly_coeffs, poly_from_coeffs, matmul

fibonacci = [1, 1, 2, 3, 5, 8, 13, 21]
powers_of_two = [1, 2, 4, 8]
P = poly_from_coeffs([-2, 0, 1])


def test_det():

    assert det([[1, 2], [3, 4]]) == -2
    assert det([]) == 1
    with pytest.raises(ValueError):
        det([[1, 2, 3], [4, 5, 6]])


def test_inverse():

    A = [[1, 2], [3, 4]]
    assert matmul(A, inverse(A)) == [[1, 0], [0, 1]]
    with pytest.raises(ValueError):
        inverse([[1, 2], [2, 4]])


def test_rank():

    assert rank([[1, 2], [2, 4]]) == 1


def test_solve_linear():

    sol = solve_linear([[1, 1], [1, -1]], [3, 1])
    assert sol.solution == [2, 1]
    assert sol.rank == 2

    sol = solve_linear([[1, 1], [2, 2]], [1, 3])
    assert sol.solution is None


def test_charpoly():

    assert poly_coeffs(charpoly([[0, 1], [1, 0]])) == [-1, 0, 1]


def test_companion():

    C = companion(P)
    assert poly_coeffs(charpoly(C)) == [-2, 0, 1]


def test_hankel_determinants():

    assert hankel_determinants([1, 1, 1]) == [1, 0]


def test_minimal_recurrence():

    assert poly_coeffs(minimal_recurrence(powers_of_two)) == [-2, 1]
    assert poly_coeffs(minimal_recurrence(fibonacci, 2)) == [-1, -1, 1]


def test_inconsistent_window():

    with pytest.raises(ValueError):
        minimal_recurrence([1, 2, 4, 9], 1)
    with pytest.raises(ValueError):
        minimal_recurrence([1, 2, 4], 2)


def test_berlekamp_massey():

    Q, L = berlekamp_massey(fibonacci)
    assert L == 2
    assert poly_coeffs(Q) == [-1, -1, 1]

    Q, L = berlekamp_massey(powers_of_two)
    assert L == 1
    assert poly_coeffs(Q) == [-2, 1]


def test_berlekamp_massey_zero():

    Q, L = berlekamp_massey([0, 0, 0])
    assert L == 0


def test_number_field():

    alpha = QuotientRingElement.generator(P)
    assert alpha ** 2 == 2
    assert alpha.trace() == 0
    assert alpha.norm() == -2
    assert alpha * alpha.inverse() == 1
    assert (1 + alpha).norm() == -1


def test_reducible_modulus():

    with pytest.raises(ValueError):
        QuotientRingElement(poly_from_coeffs([0, -1, 1]), 1, check=True)


def test_trace_dual_basis():

    alpha = QuotientRingElement.generator(P)
    dual = trace_dual_basis(P)
    for i, b in enumerate(dual):
        for k in range(2):
            assert (b * alpha ** k).trace() == Fraction(int(i == k))
