import math

from fractions import Fraction
from sympy import isprime, multiplicity
from sympy.functions.combinatorial.numbers import legendre_symbol

from ..utils import as_fraction, format_rational
from ..utils import UnsupportedConfigurationError


ETALE_TYPES = ('split', 'inert')


class BaseField():
    r"""Exact model of the local field Q_p and of its quadratic etale
    algebra E.

    Parameters
    ----------
    p: int
        Odd prime.
    etale: str, optional
        'inert' (unramified quadratic extension) or 'split' (E = F x F).
        Default is 'inert'.

    Notes
    -----
    E is realized as F[j]/(j^2 - d). In the inert case d is the smallest
    positive quadratic non-residue modulo p, in the split case d = 1 and
    the components of a + bj are (a + b, a - b).
    """

    def __init__(self, p, etale='inert'):

        if isinstance(p, bool) or not isinstance(p, int):
            raise TypeError('Wrong prime type: {}. Should be: int'.format(
                type(p).__name__
            ))
        if not isprime(p):
            raise UnsupportedConfigurationError(
                'Invalid `p` ({}): it must be a prime number.'.format(p)
            )
        if p == 2:
            raise UnsupportedConfigurationError(
                'The prime `p`=2 is not supported. Please use an odd prime.'
            )
        if etale not in ETALE_TYPES:
            raise UnsupportedConfigurationError(
                'Unsupported etale type `{}`: only {} are supported '.format(
                    etale, ' and '.join(ETALE_TYPES)
                ) + '(ramified algebras are out of scope).'
            )

        self.__p = p
        self.__etale = etale
        if etale == 'inert':
            self.__d = next(
                a for a in range(2, p) if legendre_symbol(a, p) == -1
            )
        else:
            self.__d = 1

    @property
    def p(self):
        r"""The residue characteristic."""
        return self.__p

    @property
    def etale(self):
        r"""Type of the quadratic etale algebra ('split' or 'inert')."""
        return self.__etale

    @property
    def d(self):
        r"""The square class j^2 defining E."""
        return self.__d

    @property
    def inert(self):
        return self.__etale == 'inert'

    @property
    def eta(self):
        r"""The quadratic character of E/F."""
        return UnramifiedCharacter(-1 if self.inert else 1, label='eta')

    @property
    def j(self):
        r"""The generator of E with j^c = -j (a valid choice of tau)."""
        return EtaleScalar(0, 1, self.__d)

    def scalar(self, a, b=0):
        r"""The element a + bj of E."""
        return EtaleScalar(a, b, self.__d)

    def from_components(self, x1, x2):
        r"""Element of the split algebra with components (x1, x2)."""
        if self.inert:
            raise ValueError(
                'Components are only defined for the split etale algebra.'
            )
        x1, x2 = as_fraction(x1), as_fraction(x2)
        return EtaleScalar((x1 + x2) / 2, (x1 - x2) / 2, 1)

    def valuation(self, x):
        r"""p-adic valuation of a rational (``math.inf`` at zero)."""
        x = as_fraction(x)
        if x == 0:
            return math.inf
        return (
            int(multiplicity(self.__p, abs(x.numerator))) -
            int(multiplicity(self.__p, x.denominator))
        )

    def unit_part(self, x):
        r"""x divided by p^v(x)."""
        v = self.valuation(x)
        if v == math.inf:
            raise ValueError('The unit part of 0 is undefined.')
        return as_fraction(x) / Fraction(self.__p) ** v

    def is_integral(self, x):
        return self.valuation(x) >= 0

    def etale_valuation(self, z):
        r"""Largest m such that z lies in p^m O_E."""
        if not isinstance(z, EtaleScalar):
            return self.valuation(z)
        return min(self.valuation(z.a), self.valuation(z.b))

    def residue(self, x, m):
        r"""Class of the p-integral rational x modulo p^m, as an integer in
        [0, p^m)."""
        x = as_fraction(x)
        if self.valuation(x) < 0:
            raise ValueError(
                'Cannot reduce {} modulo p^{}: not integral.'.format(x, m)
            )
        modulus = self.__p ** m
        return (x.numerator * pow(x.denominator, -1, modulus)) % modulus

    def fractional_part(self, x):
        r"""The rational in [0, 1) with denominator a power of p that is
        congruent to x modulo O (used by the additive character)."""
        x = as_fraction(x)
        v = self.valuation(x)
        if v >= 0:
            return Fraction(0)
        scale = self.__p ** (-v)
        num = self.residue(x * scale, -v)
        return Fraction(num, scale)

    def __eq__(self, other):
        return (
            isinstance(other, BaseField) and
            other.p == self.__p and other.etale == self.__etale
        )

    def __hash__(self):
        return hash((self.__p, self.__etale))

    def __repr__(self):
        return 'BaseField(p={}, etale={!r})'.format(self.__p, self.__etale)

    def to_json(self):
        return {'p': self.__p, 'etale': self.__etale}

    @classmethod
    def from_json(cls, payload):
        return cls(int(payload['p']), payload.get('etale', 'inert'))


class UnramifiedCharacter():
    r"""Unramified character of F^x, determined by its value at p.

    Parameters
    ----------
    value_at_p: rational
        Nonzero value at the uniformizer.
    label: str, optional
        One of 'xi', 'eta', 'mu', 'derived'.
        Default is 'derived'.
    """

    labels = ('xi', 'eta', 'mu', 'derived')

    def __init__(self, value_at_p, label='derived'):

        value_at_p = as_fraction(value_at_p)
        if value_at_p == 0:
            raise ValueError('The value at p of a character must be nonzero.')
        if label not in self.labels:
            raise ValueError('Invalid character label `{}`. Should be in {}'
                             .format(label, self.labels))
        self.__value = value_at_p
        self.__label = label

    @property
    def value_at_p(self):
        r"""Value of the character at the uniformizer."""
        return self.__value

    @property
    def label(self):
        return self.__label

    def __call__(self, x, base):
        return char_eval(self, x, base)

    def __mul__(self, other):
        if not isinstance(other, UnramifiedCharacter):
            return NotImplemented
        return UnramifiedCharacter(self.__value * other.value_at_p)

    def __pow__(self, k):
        return UnramifiedCharacter(self.__value ** int(k))

    def inverse(self):
        return UnramifiedCharacter(1 / self.__value)

    def is_trivial(self):
        return self.__value == 1

    def __eq__(self, other):
        return (isinstance(other, UnramifiedCharacter) and
                other.value_at_p == self.__value)

    def __hash__(self):
        return hash(self.__value)

    def __repr__(self):
        return 'UnramifiedCharacter({}, label={!r})'.format(
            format_rational(self.__value), self.__label
        )

    def to_json(self):
        return {'value_at_p': format_rational(self.__value),
                'label': self.__label}

    @classmethod
    def from_json(cls, payload):
        if isinstance(payload, dict):
            return cls(payload['value_at_p'], payload.get('label', 'derived'))
        return cls(payload)


class EtaleScalar():
    r"""Element a + bj of E = F[j]/(j^2 - d).

    Arithmetic accepts rationals on either side. Conjugation sends j to
    -j; in the split algebra (d = 1) it swaps the two components.
    """

    __slots__ = ('_a', '_b', '_d')

    def __init__(self, a, b=0, d=1):
        self._a = as_fraction(a)
        self._b = as_fraction(b)
        self._d = int(d)

    @property
    def a(self):
        return self._a

    @property
    def b(self):
        return self._b

    @property
    def d(self):
        return self._d

    @property
    def components(self):
        r"""(a + b, a - b): the two coordinates of the split algebra."""
        if self._d != 1:
            raise ValueError(
                'Components are only defined for the split etale algebra.'
            )
        return (self._a + self._b, self._a - self._b)

    def _coerce(self, other):
        if isinstance(other, EtaleScalar):
            if other.d != self._d:
                raise ValueError(
                    'Cannot combine elements of different etale algebras '
                    '(d={} and d={}).'.format(self._d, other.d)
                )
            return other
        return EtaleScalar(as_fraction(other), 0, self._d)

    def __add__(self, other):
        other = self._coerce(other)
        return EtaleScalar(self._a + other.a, self._b + other.b, self._d)

    __radd__ = __add__

    def __neg__(self):
        return EtaleScalar(-self._a, -self._b, self._d)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        return EtaleScalar(
            self._a * other.a + self._d * self._b * other.b,
            self._a * other.b + self._b * other.a,
            self._d
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k):
        k = int(k)
        if k < 0:
            return self.inverse() ** (-k)
        out = EtaleScalar(1, 0, self._d)
        for _ in range(k):
            out = out * self
        return out

    def conj(self):
        return EtaleScalar(self._a, -self._b, self._d)

    def norm(self):
        r"""Nm(x) = x x^c, a rational."""
        return self._a * self._a - self._d * self._b * self._b

    def trace(self):
        return 2 * self._a

    def is_zero(self):
        return self._a == 0 and self._b == 0

    def is_rational(self):
        return self._b == 0

    def inverse(self):
        nm = self.norm()
        if nm == 0:
            if self._d == 1:
                x1, x2 = self.components
                which = 'first' if x1 == 0 else 'second'
                raise ValueError(
                    'Cannot invert {}: zero divisor, its {} component '
                    'vanishes.'.format(self, which)
                )
            raise ValueError('Cannot invert zero.')
        return EtaleScalar(self._a / nm, -self._b / nm, self._d)

    def __eq__(self, other):
        if isinstance(other, EtaleScalar):
            return (self._a, self._b, self._d) == (other.a, other.b, other.d)
        try:
            other = as_fraction(other)
        except TypeError:
            return NotImplemented
        return self._b == 0 and self._a == other

    def __hash__(self):
        if self._b == 0:
            return hash(self._a)
        return hash((self._a, self._b, self._d))

    def __repr__(self):
        return 'EtaleScalar({}, {}, d={})'.format(
            format_rational(self._a), format_rational(self._b), self._d
        )

    def to_json(self):
        if self._d == 1:
            return {'split': [format_rational(c) for c in self.components]}
        return {'inert': [format_rational(self._a), format_rational(self._b)],
                'd': self._d}

    @classmethod
    def from_json(cls, payload):
        if 'split' in payload:
            x1, x2 = (as_fraction(c) for c in payload['split'])
            return cls((x1 + x2) / 2, (x1 - x2) / 2, 1)
        a, b = payload['inert']
        return cls(a, b, int(payload['d']))


def valuation(x, base):
    r"""p-adic valuation v_p(x).

    Parameters
    ----------
    x: rational
    base: BaseField

    Returns
    -------
    v: int or math.inf
        ``math.inf`` is returned for x = 0.
    """
    return base.valuation(x)


def char_eval(chi, x, base):
    r"""Value chi(x) = chi(p)^v(x) of an unramified character."""
    x = as_fraction(x)
    if x == 0:
        raise ValueError('character undefined at zero')
    return chi.value_at_p ** base.valuation(x)


def etale_ops(a, b, op):
    r"""Ring operations of E.

    Parameters
    ----------
    a: EtaleScalar
    b: EtaleScalar or None
        Second operand (ignored by the unary operations).
    op: str
        One of 'add', 'mul', 'conj', 'norm', 'inv'.

    Returns
    -------
    EtaleScalar, or a rational for 'norm'.
    """
    if op == 'add':
        return a + b
    if op == 'mul':
        return a * b
    if op == 'conj':
        return a.conj()
    if op == 'norm':
        return a.norm()
    if op == 'inv':
        return a.inverse()
    raise ValueError(
        'Unknown operation `{}`. Should be one of add, mul, conj, norm, inv.'
        .format(op)
    )
