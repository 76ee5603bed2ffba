from fractions import Fraction

from ..utils import as_fraction
from .matrix import det, solve_linear, poly_from_coeffs


def hankel_matrix(moments, r):
    r"""The r x r Hankel matrix (m_{i+j})."""
    return [[moments[i + j] for j in range(r)] for i in range(r)]


def hankel_determinants(moments, max_order=None):
    r"""Hankel determinants d_1, d_2, ... of a moment sequence.

    Parameters
    ----------
    moments: list
        m_0, m_1, ...
    max_order: int, optional
        Largest order computed. Default: every order the sequence allows
        (order k needs m_0, ..., m_{2k-2}).

    Returns
    -------
    list
        [d_1, ..., d_K]
    """
    moments = [as_fraction(m) for m in moments]
    top = (len(moments) + 1) // 2
    if max_order is not None:
        top = min(top, max_order)
    return [det(hankel_matrix(moments, k)) for k in range(1, top + 1)]


def hankel_rank(moments):
    r"""Largest order with a nonzero Hankel determinant (0 if none)."""
    dets = hankel_determinants(moments)
    nonzero = [k + 1 for k, d in enumerate(dets) if d != 0]
    return nonzero[-1] if nonzero else 0


def minimal_recurrence(moments, r=None):
    r"""Monic characteristic polynomial of the minimal linear recurrence
    satisfied by a moment sequence (Hankel method).

    Parameters
    ----------
    moments: list
        At least 2r rationals.
    r: int, optional
        Order of the recurrence. If None, the Hankel rank of the sequence.

    Returns
    -------
    Q0: sympy.Poly
        The monic degree-r polynomial x^r + c_{r-1}x^{r-1} + ... + c_0 with
        m_{i+r} + c_{r-1}m_{i+r-1} + ... + c_0 m_i = 0.
    """
    moments = [as_fraction(m) for m in moments]
    if r is None:
        r = hankel_rank(moments)
    if r == 0:
        if any(m != 0 for m in moments):
            raise ValueError(
                'Inconsistent moment window: the Hankel form of order 1 is '
                'nonsingular but the requested order is 0.'
            )
        return poly_from_coeffs([1])
    if len(moments) < 2 * r:
        raise ValueError(
            'Moment window too short for the Hankel form of order {}: '
            '{} moments given, {} needed.'.format(r, len(moments), 2 * r)
        )
    H = hankel_matrix(moments, r)
    if det(H) == 0:
        raise ValueError(
            'The Hankel form of order {} is singular: no recurrence of '
            'that order is determined by the moments.'.format(r)
        )
    rhs = [-moments[i + r] for i in range(r)]
    c = solve_linear(H, rhs).solution
    # Check the recurrence on the whole window
    for i in range(len(moments) - r):
        value = moments[i + r] + sum(c[j] * moments[i + j] for j in range(r))
        if value != 0:
            raise ValueError(
                'Inconsistent moment window: the Hankel form of order {} '
                'is nonsingular (recurrence breaks at index {}).'.format(
                    r + 1, i + r
                )
            )
    return poly_from_coeffs(c + [1])


def berlekamp_massey(sequence):
    r"""Shortest linear recurrence of a sequence over Q.

    Parameters
    ----------
    sequence: list of rationals

    Returns
    -------
    (Q, L): (sympy.Poly, int)
        Q is the monic characteristic polynomial (degree L) of the
        shortest recurrence generating the sequence.
    """
    s = [as_fraction(e) for e in sequence]
    C = [Fraction(1)]
    B = [Fraction(1)]
    L = 0
    m = 1
    b = Fraction(1)
    for i in range(len(s)):
        d = s[i]
        for j in range(1, min(L, len(C) - 1) + 1):
            d += C[j] * s[i - j]
        if d == 0:
            m += 1
            continue
        coef = d / b
        T = list(C)
        if len(C) < len(B) + m:
            C = C + [Fraction(0)] * (len(B) + m - len(C))
        for j, bj in enumerate(B):
            C[j + m] -= coef * bj
        if 2 * L <= i:
            L = i + 1 - L
            B = T
            b = d
            m = 1
        else:
            m += 1
    C = C + [Fraction(0)] * (L + 1 - len(C))
    # x^L C(1/x) lists C in constant-last order
    return poly_from_coeffs(list(reversed(C[:L + 1]))), L
