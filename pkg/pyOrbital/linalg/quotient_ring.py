from fractions import Fraction
from sympy import Poly, QQ

from ..utils import as_fraction
from .matrix import x, det, inverse, transpose, poly_coeffs, poly_from_coeffs


class QuotientRingElement():
    r"""Element of the number field F_P = Q[x]/(P).

    Parameters
    ----------
    P: sympy.Poly
        Monic polynomial, irreducible over Q.
    rep: sympy.Poly, list or rational
        Representative (list: coefficients constant term first).
    check: bool, optional
        If True, irreducibility of P is verified.
        Default is False.
    """

    def __init__(self, P, rep, check=False):

        if not isinstance(P, Poly):
            raise TypeError('Wrong modulus type: {}. Should be: Poly'.format(
                type(P).__name__
            ))
        if P.LC() != 1:
            raise ValueError('The modulus `P` must be monic.')
        if check and not P.is_irreducible:
            raise ValueError('The modulus {} is reducible over Q.'.format(
                P.as_expr()
            ))
        if isinstance(rep, Poly):
            poly = rep
        elif isinstance(rep, (list, tuple)):
            poly = poly_from_coeffs(rep)
        else:
            poly = poly_from_coeffs([as_fraction(rep)])
        self.__P = P
        self.__rep = poly.rem(P) if P.degree() > 0 else Poly(0, x, domain=QQ)

    @classmethod
    def generator(cls, P):
        r"""The class alpha of x in Q[x]/(P)."""
        if P.degree() == 1:
            return cls(P, [-poly_coeffs(P)[0]])
        return cls(P, [0, 1])

    @property
    def modulus(self):
        return self.__P

    @property
    def rep(self):
        return self.__rep

    @property
    def degree(self):
        return self.__P.degree()

    def coeffs(self):
        r"""Coordinates in the power basis 1, alpha, ..., alpha^(f-1)."""
        c = poly_coeffs(self.__rep) if not self.__rep.is_zero else []
        return c + [Fraction(0)] * (self.degree - len(c))

    def _coerce(self, other):
        if isinstance(other, QuotientRingElement):
            if other.modulus != self.__P:
                raise ValueError('Elements of different fields cannot be '
                                 'combined.')
            return other
        return QuotientRingElement(self.__P, as_fraction(other))

    def __add__(self, other):
        other = self._coerce(other)
        return QuotientRingElement(self.__P, self.__rep + other.rep)

    __radd__ = __add__

    def __neg__(self):
        return QuotientRingElement(self.__P, -self.__rep)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        return QuotientRingElement(self.__P, self.__rep * other.rep)

    __rmul__ = __mul__

    def __pow__(self, k):
        k = int(k)
        if k < 0:
            return self.inverse() ** (-k)
        out = QuotientRingElement(self.__P, 1)
        for _ in range(k):
            out = out * self
        return out

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def is_zero(self):
        return self.__rep.is_zero

    def inverse(self):
        if self.is_zero():
            raise ValueError('Cannot invert zero in Q[x]/({}).'.format(
                self.__P.as_expr()
            ))
        return QuotientRingElement(self.__P, self.__rep.invert(self.__P))

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except (TypeError, ValueError):
            return False
        return (self.__rep - other.rep).is_zero

    def __hash__(self):
        return hash((str(self.__P.as_expr()), tuple(self.coeffs())))

    def __repr__(self):
        return 'QuotientRingElement({} mod {})'.format(
            self.__rep.as_expr(), self.__P.as_expr()
        )

    def mult_matrix(self):
        r"""Matrix of y -> self*y in the power basis (columns are images)."""
        f = self.degree
        cols = []
        for j in range(f):
            basis = QuotientRingElement(self.__P, [0] * j + [1])
            cols.append((self * basis).coeffs())
        return transpose(cols)

    def trace(self):
        M = self.mult_matrix()
        return sum((M[i][i] for i in range(self.degree)), Fraction(0))

    def norm(self):
        return det(self.mult_matrix())

    def to_json(self):
        from .matrix import poly_to_json
        return {'P': poly_to_json(self.__P),
                'rep': poly_to_json(Poly(self.__rep, x, domain=QQ))
                if not self.__rep.is_zero else ['0']}


def trace_form(P):
    r"""Gram matrix Tr(alpha^(i+j)) of the trace form in the power basis."""
    f = P.degree()
    alpha = QuotientRingElement.generator(P)
    traces = [(alpha ** k).trace() for k in range(2 * f - 1)]
    return [[traces[i + j] for j in range(f)] for i in range(f)]


def trace_dual_basis(P):
    r"""Basis (b_0, ..., b_{f-1}) of Q[x]/(P) with Tr(b_i alpha^j) = delta_ij.

    Returns
    -------
    list of QuotientRingElement
    """
    G = trace_form(P)
    if det(G) == 0:
        raise ValueError('The trace form of {} is degenerate.'.format(
            P.as_expr()
        ))
    Ginv = inverse(G)
    return [QuotientRingElement(P, [Ginv[k][i] for k in range(P.degree())])
            for i in range(P.degree())]


def field_basis(P, kind='power'):
    r"""Power basis 1, alpha, ... or its trace dual."""
    if kind == 'power':
        alpha = QuotientRingElement.generator(P)
        return [alpha ** k for k in range(P.degree())]
    if kind == 'dual':
        return trace_dual_basis(P)
    raise ValueError('Unknown basis kind `{}`. Should be power or dual.'
                     .format(kind))
