import itertools

from fractions import Fraction

from ..invariants import TildeGlElement, quotient_point
from ..lfactors import chi_of
from ..linalg.matrix import inverse, krylov_columns, krylov_rows
from ..utils import vmin, DeskScaleError
from .cells import IwasawaCell, cell_value, series_in_w
from .kaverage import KAverage


#: Largest number of (cell, x-class) pairs summed by orbital_rs.
MAX_RS_EVALUATIONS = 200000


def _inverse_valuation(vectors, base):
    Kinv = inverse(vectors)
    return vmin(base.valuation(e) for row in Kinv for e in row)


def rs_window(X, phi):
    r"""Proven window of the closed-orbit integral.

    If X.g lies in the support p^-M Lambda_0, the Krylov matrices give
    g = K_u^-1 K_u(X.g) and g^-1 = K_v(X.g) K_v^-1, whose entries have
    valuations at least -alpha and -beta. Writing g = p^k n(x) k0 this
    forces -alpha <= k_i <= beta and v(x) >= -alpha - k_1.

    Returns
    -------
    (alpha, beta): (int, int)
    """
    base = phi.base
    n = X.n
    M = phi.support_bound()
    alpha = n * M - _inverse_valuation(krylov_rows(X.u, X.A), base)
    beta = n * M - _inverse_valuation(krylov_columns(X.A, X.v), base)
    return alpha, beta


def rs_cells(X, phi):
    r"""The IwasawaCells covering the support of g -> phi(X.g)."""
    alpha, beta = rs_window(X, phi)
    ks = itertools.product(range(-alpha, beta + 1), repeat=X.n)
    return [IwasawaCell(k, -alpha - k[0]) for k in ks]


def orbital_rs(X, phi, xi, max_evaluations=None):
    r"""Orbital integral over the closed orbit of a regular semisimple X.

    Parameters
    ----------
    X: TildeGlElement
        Regular semisimple (d_n(X) != 0), n <= 2.
    phi: LatticeCosetFunction
        Phase-free function on gl~_n.
    xi: UnramifiedCharacter or rational
    max_evaluations: int, optional
        Budget for the number of (cell, x-class) evaluations.
        Default is MAX_RS_EVALUATIONS.

    Returns
    -------
    LaurentRational
        A Laurent polynomial in t.

    Raises
    ------
    DeskScaleError
        If the proven window exceeds the budget; the message carries the
        computed bound.
    """
    if not isinstance(X, TildeGlElement):
        raise TypeError('Wrong element type: {}. Should be: {}'.format(
            type(X).__name__, 'TildeGlElement'
        ))
    if X.n != phi.n:
        raise ValueError('Element of size {} for a function on gl~_{}.'
                         .format(X.n, phi.n))
    if X.n > 2:
        raise DeskScaleError('desk-scale limit: orbital_rs is computed for '
                             'n <= 2, got n={}.'.format(X.n))
    if not quotient_point(X).is_regular_semisimple():
        raise ValueError('orbital_rs needs a regular semisimple element; '
                         'd_n({}) = 0.'.format(X))
    base = phi.base
    p = base.p
    chi = chi_of(xi, base)
    budget = MAX_RS_EVALUATIONS if max_evaluations is None else \
        max_evaluations
    cells = rs_cells(X, phi)
    cost = sum(p ** max(0, -c.x_valuation) if X.n > 1 else 1 for c in cells)
    if cost > budget:
        alpha, beta = rs_window(X, phi)
        raise DeskScaleError(
            'desk-scale limit: the window k in [{}, {}]^{} needs {} '
            'evaluations (budget {}).'.format(-alpha, beta, X.n, cost, budget)
        )
    Phi = KAverage(phi)
    coefficients = {}
    for cell in cells:
        value = cell_value(Phi, X, cell, p)
        if value != 0:
            s = sum(cell.k)
            coefficients[s] = coefficients.get(s, Fraction(0)) + value
    return series_in_w(coefficients, chi)
