import collections

from fractions import Fraction
from sympy import QQ, field

from ..utils import as_fraction, format_rational


T_FIELD, T = field("t", QQ)

HoloResult = collections.namedtuple('HoloResult', ['order', 'value'])


def _qq(c):
    c = as_fraction(c)
    return QQ(c.numerator, c.denominator)


def _terms(poly):
    r"""{exponent: Fraction} of a sympy PolyElement in t."""
    return {int(monom[0]) if monom else 0: as_fraction(coeff)
            for monom, coeff in poly.terms()}


def _from_terms(terms):
    out = T_FIELD(0)
    for e, c in terms.items():
        if c != 0:
            out = out + T ** int(e) * _qq(c)
    return out


def _eval_terms(terms, t0):
    return sum((c * t0 ** e for e, c in terms.items()), Fraction(0))


def _divide_linear(terms, t0):
    r"""Quotient of a polynomial (exponents >= 0) by (t - t0)."""
    top = max(terms)
    coeffs = [terms.get(e, Fraction(0)) for e in range(top, -1, -1)]
    out = []
    acc = Fraction(0)
    for c in coeffs[:-1]:
        acc = acc * t0 + c
        out.append(acc)
    degree = len(out) - 1
    return {degree - i: c for i, c in enumerate(out) if c != 0}


def _vanishing_order(terms, t0):
    order = 0
    while terms and _eval_terms(terms, t0) == 0:
        terms = _divide_linear(terms, t0)
        order += 1
    return order, terms


class LaurentRational():
    r"""Exact rational function of t = p^-s.

    Parameters
    ----------
    value: sympy FracElement of QQ(t), LaurentRational or rational
        The function. Rationals give constants.
    """

    def __init__(self, value=0):

        if isinstance(value, LaurentRational):
            value = value.frac
        elif not hasattr(value, 'numer'):
            value = T_FIELD(_qq(value))
        self.__frac = value

    @classmethod
    def monomial(cls, coeff, exponent):
        r"""coeff * t^exponent."""
        return cls(T ** int(exponent) * _qq(coeff))

    @classmethod
    def from_terms(cls, num, den=None):
        r"""Build from {exponent: coefficient} dictionaries."""
        value = _from_terms({int(e): as_fraction(c) for e, c in num.items()})
        if den is not None:
            value = value / _from_terms(
                {int(e): as_fraction(c) for e, c in den.items()}
            )
        return cls(value)

    @classmethod
    def t(cls):
        return cls(T)

    @property
    def frac(self):
        return self.__frac

    def _coerce(self, other):
        if isinstance(other, LaurentRational):
            return other
        return LaurentRational(other)

    def __add__(self, other):
        return LaurentRational(self.__frac + self._coerce(other).frac)

    __radd__ = __add__

    def __neg__(self):
        return LaurentRational(-self.__frac)

    def __sub__(self, other):
        return LaurentRational(self.__frac - self._coerce(other).frac)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        return LaurentRational(self.__frac * self._coerce(other).frac)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError('Division by the zero function.')
        return LaurentRational(self.__frac / other.frac)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, k):
        k = int(k)
        if k < 0:
            return LaurentRational(1) / (self ** (-k))
        return LaurentRational(self.__frac ** k)

    def is_zero(self):
        return not _terms(self.__frac.numer)

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return (self.__frac.numer * other.frac.denom ==
                other.frac.numer * self.__frac.denom)

    def __hash__(self):
        return hash(str(self.to_json()))

    def numerator_terms(self):
        return _terms(self.__frac.numer)

    def denominator_terms(self):
        return _terms(self.__frac.denom)

    def canonical(self):
        r"""(num, den) dictionaries of the canonical form.

        The power of t dividing the denominator is moved to the numerator
        and the constant term of the denominator is normalized to 1.
        """
        num = self.numerator_terms()
        den = self.denominator_terms()
        if not num:
            return {}, {0: Fraction(1)}
        shift = min(den)
        den = {e - shift: c for e, c in den.items()}
        num = {e - shift: c for e, c in num.items()}
        c0 = den[0]
        den = {e: c / c0 for e, c in den.items()}
        num = {e: c / c0 for e, c in num.items()}
        return num, den

    def is_laurent_polynomial(self):
        _, den = self.canonical()
        return den == {0: Fraction(1)}

    def substitute_inverse(self):
        r"""The function t -> R(1/t)."""
        num, den = self.canonical()
        return LaurentRational.from_terms({-e: c for e, c in num.items()},
                                          {-e: c for e, c in den.items()})

    def power_variable(self, f):
        r"""The function t -> R(t^f)."""
        f = int(f)
        num, den = self.canonical()
        return LaurentRational.from_terms({f * e: c for e, c in num.items()},
                                          {f * e: c for e, c in den.items()})

    def scale_variable(self, c):
        r"""The function t -> R(c t)."""
        c = as_fraction(c)
        num, den = self.canonical()
        return LaurentRational.from_terms(
            {e: v * c ** e for e, v in num.items()},
            {e: v * c ** e for e, v in den.items()}
        )

    def evaluate(self, t0):
        r"""Exact value at a nonzero rational t0."""
        t0 = as_fraction(t0)
        if t0 == 0:
            raise ValueError('Evaluation at t=0 is not supported for '
                             'Laurent functions.')
        num, den = self.canonical()
        d = _eval_terms(den, t0)
        if d == 0:
            raise ValueError('Pole at t={}.'.format(format_rational(t0)))
        return _eval_terms(num, t0) / d

    def order_at(self, t0):
        r"""Order of vanishing at t0 != 0 (negative for a pole)."""
        t0 = as_fraction(t0)
        num, den = self.canonical()
        if not num:
            raise ValueError('The zero function has no order.')
        shift_n = min(num)
        num = {e - shift_n: c for e, c in num.items()}
        zn, _ = _vanishing_order(num, t0)
        zd, _ = _vanishing_order(den, t0)
        return zn - zd

    def holo_at(self, s0, p):
        r"""Order and value at s = s0, i.e. at t = p^-s0.

        Parameters
        ----------
        s0: int or rational with integral value
        p: int

        Returns
        -------
        HoloResult(order, value)
            value is None unless order == 0. A zero function returns
            order None and value 0.
        """
        s0 = as_fraction(s0)
        if s0.denominator != 1:
            raise ValueError('Only integral `s0` give rational values of '
                             't = p^-s0, got {}.'.format(s0))
        t0 = Fraction(p) ** (-int(s0))
        if self.is_zero():
            return HoloResult(None, Fraction(0))
        order = self.order_at(t0)
        if order < 0:
            return HoloResult(order, None)
        if order > 0:
            return HoloResult(order, Fraction(0))
        return HoloResult(0, self.evaluate(t0))

    def __repr__(self):
        return 'LaurentRational({})'.format(self.__frac.as_expr())

    def to_json(self):
        num, den = self.canonical()
        return {
            'num': [[e, format_rational(num[e])] for e in sorted(num,
                                                                  reverse=True)],
            'den': [[e, format_rational(den[e])] for e in sorted(den,
                                                                  reverse=True)]
        }

    @classmethod
    def from_json(cls, payload):
        num = {int(e): as_fraction(c) for e, c in payload['num']}
        den = {int(e): as_fraction(c) for e, c in payload['den']}
        if not den:
            raise ValueError('Empty denominator in LaurentRational payload.')
        return cls.from_terms(num, den)
