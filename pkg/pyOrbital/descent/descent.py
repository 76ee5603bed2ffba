from sympy import Poly, QQ, gcd

from ..utils import format_rational
from ..linalg.matrix import x, poly_coeffs, poly_from_coeffs, poly_to_json
from ..linalg.matrix import poly_from_json
from ..linalg.recurrence import minimal_recurrence
from ..linalg.quotient_ring import QuotientRingElement
from ..invariants import QuotientPoint


class DescentFactor():
    r"""Irreducible factor P_i of the residual characteristic polynomial,
    with its multiplicity n_i."""

    def __init__(self, P, mult):

        if not isinstance(P, Poly):
            P = poly_from_coeffs(P)
        if P.LC() != 1:
            raise ValueError('Descent factors must be monic, got {}.'.format(
                P.as_expr()
            ))
        if int(mult) < 1:
            raise ValueError('Invalid multiplicity `mult`={}.'.format(mult))
        self.__P = P
        self.__mult = int(mult)

    @property
    def P(self):
        return self.__P

    @property
    def mult(self):
        return self.__mult

    @property
    def degree(self):
        return self.__P.degree()

    @property
    def alpha(self):
        r"""The class of x in F_i = Q[x]/(P_i)."""
        return QuotientRingElement.generator(self.__P)

    def __repr__(self):
        return 'DescentFactor({}, mult={})'.format(self.__P.as_expr(),
                                                   self.__mult)

    def to_json(self):
        return {'P': poly_to_json(self.__P), 'mult': self.__mult}

    @classmethod
    def from_json(cls, payload):
        return cls(poly_from_json(payload['P']), payload.get('mult', 1))


class DescentData():
    r"""Descent package (r, a0, {P_i, n_i}) of a quotient point.

    Parameters
    ----------
    a: QuotientPoint
        The point being described.
    r: int
        Stratum index.
    a0: QuotientPoint
        Regular semisimple point of size r.
    factors: list of DescentFactor
    """

    def __init__(self, a, r, a0, factors):

        self.__a = a
        self.__r = r
        self.__a0 = a0
        self.__factors = list(factors)

    @property
    def a(self):
        return self.__a

    @property
    def r(self):
        return self.__r

    @property
    def a0(self):
        return self.__a0

    @property
    def factors(self):
        return list(self.__factors)

    @property
    def k(self):
        return len(self.__factors)

    @property
    def alphas(self):
        return [f.alpha for f in self.__factors]

    def residual(self):
        out = Poly(1, x, domain=QQ)
        for f in self.__factors:
            out = out * f.P ** f.mult
        return out

    def is_regular_semisimple(self):
        return self.k == 0

    def is_central(self):
        return self.__r == 0 and self.k == 1 and self.__factors[0].degree == 1

    def to_json(self):
        return {'r': self.__r,
                'a0': self.__a0.to_json(),
                'factors': [f.to_json() for f in self.__factors]}


def stratify(a):
    r"""Split a quotient point into its regular semisimple part and the
    residual characteristic polynomial.

    Parameters
    ----------
    a: QuotientPoint

    Returns
    -------
    (r, a0, residual): (int, QuotientPoint, sympy.Poly)
    """
    if not isinstance(a, QuotientPoint):
        raise TypeError('Wrong point type: {}. Should be: QuotientPoint'
                        .format(type(a).__name__))
    n = a.n
    r = a.r
    moments = a.extended_moments(2 * n)
    Q0 = minimal_recurrence(moments, r)
    residual, remainder = a.charpoly().div(Q0)
    if not remainder.is_zero:
        raise ValueError(
            'inconsistent quotient point: the recurrence polynomial {} does '
            'not divide the characteristic polynomial {}.'.format(
                Q0.as_expr(), a.charpoly().as_expr()
            )
        )
    a0 = QuotientPoint.from_poly(Q0, moments[:r])
    return r, a0, residual


def _sort_key(factor):
    return (factor.degree, [format_rational(c) for c in poly_coeffs(factor.P)],
            factor.mult)


def descend(a, factorization=None):
    r"""Descent data of a quotient point.

    Parameters
    ----------
    a: QuotientPoint
    factorization: list, optional
        Certificate: list of (P_i, n_i) pairs or DescentFactors. If None,
        the residual polynomial is factored over Q.

    Returns
    -------
    DescentData
    """
    r, a0, residual = stratify(a)

    if factorization is None:
        _, pairs = residual.factor_list()
        factors = [DescentFactor(P.monic(), mult) for P, mult in pairs]
    else:
        factors = [f if isinstance(f, DescentFactor) else DescentFactor(*f)
                   for f in factorization]
        failures = []
        product = Poly(1, x, domain=QQ)
        for f in factors:
            product = product * f.P ** f.mult
            if f.degree < 1:
                failures.append('factor {} is constant'.format(f.P.as_expr()))
            elif not f.P.is_irreducible:
                failures.append('factor {} is reducible'.format(
                    f.P.as_expr()
                ))
        if product != residual:
            failures.append('product {} differs from the residual {}'.format(
                product.as_expr(), residual.as_expr()
            ))
        polys = [f.P for f in factors]
        if len(set(str(P.as_expr()) for P in polys)) != len(polys):
            failures.append('repeated factors')
        if failures:
            raise ValueError('Bad factorization certificate: {}.'.format(
                '; '.join(failures)
            ))

    Q0 = a0.charpoly()
    for f in factors:
        if gcd(Q0, f.P).degree() > 0:
            raise ValueError(
                'The factor {} is not coprime to the recurrence '
                'polynomial {}.'.format(f.P.as_expr(), Q0.as_expr())
            )
    factors = sorted(factors, key=_sort_key)
    return DescentData(a, r, a0, factors)
