import collections

from fractions import Fraction

from ..lfactors import LaurentRational
from ..linalg.matrix import matmul


IwasawaCell = collections.namedtuple('IwasawaCell', ['k', 'x_valuation'])
IwasawaCell.__doc__ = r"""Cell p^k N(p^x_valuation O) K of GL_n, n <= 2.

With vol O = vol K = 1 and dg = da dn dk, the classes of
p^x_valuation O / O each have measure 1 (at n = 1 the N factor is
trivial and x_valuation is ignored)."""


def torus_element(k, p):
    n = len(k)
    return [[Fraction(p) ** k[i] if i == j else Fraction(0)
             for j in range(n)] for i in range(n)]


def iwasawa_element(k, x, p):
    r"""p^k n(x), with n(x) = [[1, x], [0, 1]] at n = 2."""
    a = torus_element(k, p)
    if len(k) == 1:
        return a
    return matmul(a, [[Fraction(1), x], [Fraction(0), Fraction(1)]])


def x_classes(x_valuation, p):
    r"""Representatives of p^x_valuation O / O."""
    if x_valuation >= 0:
        return [Fraction(0)]
    step = Fraction(p) ** x_valuation
    return [i * step for i in range(p ** (-x_valuation))]


def cell_value(Phi, X, cell, p):
    r"""int_N Phi(X . p^k n) dn over the cell, for a K-invariant Phi."""
    if len(cell.k) == 1:
        return Phi(X.act(torus_element(cell.k, p)))
    out = Fraction(0)
    for x in x_classes(cell.x_valuation, p):
        out += Phi(X.act(iwasawa_element(cell.k, x, p)))
    return out


def series_in_w(coefficients, chi):
    r"""sum_sigma c_sigma (chi(p) t)^sigma as a LaurentRational."""
    c = chi.value_at_p
    return LaurentRational.from_terms(
        {s: v * c ** s for s, v in coefficients.items() if v != 0} or {0: 0}
    )
