from fractions import Fraction

import math


def as_fraction(x):
    """Convert an exact scalar to a Fraction.

    Accepts integers, Fractions, strings such as ``"3/4"`` and the
    rational elements of sympy domains (anything exposing integer
    ``numerator``/``denominator`` attributes).
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError('Wrong scalar type: {}. Should be: rational'.format(
            type(x).__name__
        ))
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, float):
        raise TypeError(
            'Floating point input {} is not exact. '.format(x) +
            'Please pass a rational string or a Fraction.'
        )
    if hasattr(x, 'numerator') and hasattr(x, 'denominator'):
        num, den = x.numerator, x.denominator
        if callable(num):
            num, den = num(), den()
        return Fraction(int(num), int(den))
    if hasattr(x, 'p') and hasattr(x, 'q'):
        # sympy.Rational
        return Fraction(int(x.p), int(x.q))
    raise TypeError('Wrong scalar type: {}. Should be: rational'.format(
        type(x).__name__
    ))


def format_rational(x):
    r"""Canonical string encoding "num/den" of a rational (integers as "n")."""
    x = as_fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return '{}/{}'.format(x.numerator, x.denominator)


def parse_rational(s):
    return as_fraction(s)


def vmin(values):
    """Minimum of a list of valuations (``math.inf`` when empty)."""
    values = list(values)
    if not values:
        return math.inf
    return min(values)


def sign_string(signs):
    r"""Encode a tuple of +1/-1 as a string such as "+-"."""
    return ''.join('+' if s > 0 else '-' for s in signs)


def parse_signs(s):
    r"""Decode "+-" (or a list of '+'/'-') into a tuple of +1/-1."""
    out = []
    for c in s:
        if c in ('+', 1, '1'):
            out.append(1)
        elif c in ('-', -1, '-1'):
            out.append(-1)
        else:
            raise ValueError('Invalid sign {!r}. Should be `+` or `-`.'.format(c))
    return tuple(out)
