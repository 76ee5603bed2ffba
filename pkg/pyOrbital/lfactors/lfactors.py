import math

from fractions import Fraction
from sympy import Poly

from ..padic import UnramifiedCharacter
from ..utils import as_fraction, UnsupportedConfigurationError
from ..linalg.matrix import x, poly_coeffs, poly_from_coeffs
from .laurent import LaurentRational


class LFactorSpec():
    r"""Description of L(c1 s + c0, chi) over an unramified extension of
    degree f of Q_p.

    The factor is (1 - chi(p)^f p^(-f c0) t^(f c1))^-1 with t = p^-s.

    Parameters
    ----------
    character: UnramifiedCharacter
    s_coefficient: int
        c1.
    s_offset: int
        c0.
    degree: int, optional
        Residue degree f of the local field.
        Default is 1.
    """

    def __init__(self, character, s_coefficient, s_offset, degree=1):

        s_offset = as_fraction(s_offset)
        if s_offset.denominator != 1:
            raise ValueError(
                'Non-integral `s_offset`={} would need a fractional power of '
                'p.'.format(s_offset)
            )
        if int(s_coefficient) != s_coefficient:
            raise ValueError('`s_coefficient` must be an integer.')
        self.__character = character
        self.__c1 = int(s_coefficient)
        self.__c0 = int(s_offset)
        self.__degree = int(degree)

    @property
    def character(self):
        return self.__character

    @property
    def s_coefficient(self):
        return self.__c1

    @property
    def s_offset(self):
        return self.__c0

    @property
    def degree(self):
        return self.__degree

    def dual(self):
        r"""Spec of L(1 - (c1 s + c0), chi^-1)."""
        return LFactorSpec(self.__character.inverse(), -self.__c1,
                           1 - self.__c0, self.__degree)

    def __repr__(self):
        return 'LFactorSpec({!r}, c1={}, c0={}, f={})'.format(
            self.__character, self.__c1, self.__c0, self.__degree
        )


def build_L(spec, base):
    r"""Rational function (1 - chi(p)^f p^(-f c0) t^(f c1))^-1."""
    f = spec.degree
    coeff = (spec.character.value_at_p ** f *
             Fraction(base.p) ** (-f * spec.s_offset))
    return 1 / (1 - LaurentRational.monomial(coeff, f * spec.s_coefficient))


def gamma_factor(chi, c1, c0, base, degree=1):
    r"""Unramified gamma factor L(1 - (c1 s + c0), chi^-1) / L(c1 s + c0, chi).

    The epsilon factor is 1 in the unramified configuration.
    """
    spec = LFactorSpec(chi, c1, c0, degree)
    return build_L(spec.dual(), base) / build_L(spec, base)


def central_L(n, sign, chi, base, degree=1):
    r"""L-factor of a central orbit of size n and type sign.

    Plus type: prod_{i=1..n} L(-is - i + 1, chi^-i);
    minus type: prod_{i=1..n} L(is - i + 1, chi^i).
    """
    out = LaurentRational(1)
    for i in range(1, n + 1):
        if sign > 0:
            spec = LFactorSpec(chi ** (-i), -i, 1 - i, degree)
        else:
            spec = LFactorSpec(chi ** i, i, 1 - i, degree)
        out = out * build_L(spec, base)
    return out


def central_gamma(n, sign, chi, base):
    r"""prod_i gamma(-is - i + 1, chi^-i) (plus) or its minus analogue."""
    out = LaurentRational(1)
    for i in range(1, n + 1):
        if sign > 0:
            out = out * gamma_factor(chi ** (-i), -i, 1 - i, base)
        else:
            out = out * gamma_factor(chi ** i, i, 1 - i, base)
    return out


def p_integral_model(P, p):
    r"""Monic polynomial with p-integral coefficients defining the same
    field as P (x -> x / p^k)."""
    coeffs = poly_coeffs(P)
    deg = len(coeffs) - 1
    k = 0
    while True:
        scaled = [c * Fraction(p) ** (k * (deg - i))
                  for i, c in enumerate(coeffs)]
        if all(c.denominator % p != 0 for c in scaled):
            return poly_from_coeffs(scaled)
        k += 1


def local_degrees(P, p):
    r"""Residue degrees of the local fields of Q[x]/(P) over Q_p.

    Raises
    ------
    UnsupportedConfigurationError
        When P is not squarefree modulo p (ramified or non-maximal order).
    """
    Pi = p_integral_model(P, p)
    den = 1
    for c in poly_coeffs(Pi):
        den = math.lcm(den, c.denominator)
    integer_coeffs = [int(c * den) for c in poly_coeffs(Pi)]
    reduced = Poly(list(reversed(integer_coeffs)), x, modulus=p)
    _, pairs = reduced.factor_list()
    if any(mult > 1 for _, mult in pairs) or \
            reduced.degree() != P.degree():
        raise UnsupportedConfigurationError(
            'ramified descent field unsupported: {} is not squarefree '
            'modulo {}.'.format(P.as_expr(), p)
        )
    return sorted(factor.degree() for factor, _ in pairs)


def L_for_orbit(descriptor, xi, base):
    r"""L-factor L_X(s, xi) of a regular orbit.

    Parameters
    ----------
    descriptor: TildeGlElement or (DescentData, epsilon)
        The orbit, or its descent data with a sign vector.
    xi: UnramifiedCharacter
    base: BaseField

    Returns
    -------
    LaurentRational
        Product over the central components; a regular semisimple orbit
        gives 1.
    """
    from ..descent import descend, classify_type
    from ..invariants import TildeGlElement, quotient_point

    if isinstance(descriptor, TildeGlElement):
        dd = descend(quotient_point(descriptor))
        epsilon = classify_type(descriptor, dd)
    else:
        dd, epsilon = descriptor
    if len(epsilon) != dd.k:
        raise ValueError('Expected {} signs, got {}.'.format(dd.k,
                                                             len(epsilon)))
    chi = xi * base.eta
    out = LaurentRational(1)
    for factor, sign in zip(dd.factors, epsilon):
        for f in local_degrees(factor.P, base.p):
            out = out * central_L(factor.mult, sign, chi, base, f)
    return out


def chi_of(xi, base):
    r"""The character xi.eta."""
    if not isinstance(xi, UnramifiedCharacter):
        xi = UnramifiedCharacter(xi, 'xi')
    return xi * base.eta
