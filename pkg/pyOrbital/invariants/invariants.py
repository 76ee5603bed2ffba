from fractions import Fraction

from ..utils import as_fraction, format_rational
from ..linalg.matrix import det, rank, matmul, generic_det, transpose
from ..linalg.matrix import krylov_columns, krylov_rows, charpoly
from ..linalg.matrix import poly_coeffs, poly_from_coeffs, identity
from ..linalg.recurrence import hankel_determinants
from .elements import TildeGlElement, GlNextElement, SElement


def _sign(sign):
    if sign in ('+', 1, '+1'):
        return 1
    if sign in ('-', -1, '-1'):
        return -1
    raise ValueError('Invalid `sign` {!r}. Should be `+` or `-`.'.format(sign))


def delta(X, sign='+'):
    r"""The relative invariants delta^+ and delta^-.

    Parameters
    ----------
    X: TildeGlElement, GlNextElement or SElement
    sign: str
        '+' for det(v, Av, ..., A^(n-1)v), '-' for the determinant of the
        rows u, uA, ..., uA^(n-1).

    Returns
    -------
    Fraction (EtaleScalar for an SElement)

    Notes
    -----
    For the right action X.g = (g^-1 A g, g^-1 v, u g) one has
    delta^+(X.g) = det(g)^-1 delta^+(X) and delta^-(X.g) = det(g) delta^-(X).
    """
    sign = _sign(sign)
    if isinstance(X, GlNextElement):
        X = X.split()[0]
    if isinstance(X, TildeGlElement):
        if X.n == 0:
            return Fraction(1)
        if sign > 0:
            return det(krylov_columns(X.A, X.v))
        return det(krylov_rows(X.u, X.A))
    if isinstance(X, SElement):
        A, b, c, _ = X.blocks()
        if X.n == 0:
            return Fraction(1)
        vectors = krylov_columns(A, b) if sign > 0 else krylov_rows(c, A)
        return generic_det(vectors)
    raise TypeError('Wrong element type: {}. Should be: {}'.format(
        type(X).__name__, 'TildeGlElement, GlNextElement or SElement'
    ))


def delta_from_corner(Y, sign='+'):
    r"""delta^+/- of an element of gl_{n+1} or S computed from the last
    basis vector: (-1)^n det(e, Ye, ..., Y^n e) and (-1)^n times the
    determinant of the rows e^t, e^t Y, ..., e^t Y^n."""
    sign = _sign(sign)
    if isinstance(Y, GlNextElement):
        M = Y.matrix
        zero, one = Fraction(0), Fraction(1)
    elif isinstance(Y, SElement):
        M = Y.x.rows
        zero, one = M[0][0] * 0, M[0][0] * 0 + 1
    else:
        raise TypeError('Wrong element type: {}. Should be: {}'.format(
            type(Y).__name__, 'GlNextElement or SElement'
        ))
    size = len(M)
    e = [zero] * (size - 1) + [one]
    if sign > 0:
        vectors = krylov_columns(M, e, size)
    else:
        vectors = krylov_rows(e, M, size)
    value = generic_det(vectors)
    return value if (size - 1) % 2 == 0 else -value


class QuotientPoint():
    r"""Point of the categorical quotient gl~_n // GL_n.

    Parameters
    ----------
    char_coeffs: list
        The n non-leading coefficients of the monic characteristic
        polynomial of A, constant term first.
    moments: list
        The n invariants u A^i v, i = 0, ..., n-1.
    d: rational, optional
        Corner coordinate for points of gl_{n+1} // GL_n.
    """

    def __init__(self, char_coeffs, moments, d=None):

        char_coeffs = [as_fraction(c) for c in char_coeffs]
        moments = [as_fraction(m) for m in moments]
        if len(char_coeffs) != len(moments):
            raise ValueError(
                'A quotient point needs n characteristic coefficients and '
                'n moments, got {} and {}.'.format(len(char_coeffs),
                                                  len(moments))
            )
        self.__char_coeffs = char_coeffs
        self.__moments = moments
        self.__d = None if d is None else as_fraction(d)

    @classmethod
    def from_poly(cls, P, moments, d=None):
        return cls(poly_coeffs(P)[:-1], moments, d)

    @property
    def n(self):
        return len(self.__moments)

    @property
    def char_coeffs(self):
        return list(self.__char_coeffs)

    @property
    def moments(self):
        return list(self.__moments)

    @property
    def d(self):
        return self.__d

    def charpoly(self):
        return poly_from_coeffs(self.__char_coeffs + [1])

    def extended_moments(self, k):
        r"""Moments m_0, ..., m_{k-1}, continued by the Cayley-Hamilton
        recurrence of the characteristic polynomial."""
        m = list(self.__moments)
        c = self.__char_coeffs
        n = self.n
        while len(m) < k:
            i = len(m) - n
            m.append(-sum((c[j] * m[i + j] for j in range(n)), Fraction(0)))
        return m[:k]

    @property
    def d_values(self):
        r"""Hankel determinants d_1, ..., d_n of the moment sequence."""
        return hankel_determinants(self.extended_moments(2 * self.n),
                                   self.n)

    @property
    def r(self):
        r"""Stratum index: largest r with d_r != 0 (0 if none)."""
        nonzero = [k + 1 for k, d in enumerate(self.d_values) if d != 0]
        return nonzero[-1] if nonzero else 0

    def is_regular_semisimple(self):
        return self.n == 0 or self.d_values[-1] != 0

    def is_central(self):
        r"""True when the point is the image of some (lam.id, 0, 0)."""
        if any(m != 0 for m in self.__moments):
            return False
        P = self.charpoly()
        if self.n == 0:
            return True
        lam = -self.__char_coeffs[-1] / self.n
        return P == poly_from_coeffs([-lam, 1]) ** self.n

    def __eq__(self, other):
        return (isinstance(other, QuotientPoint) and
                self.__char_coeffs == other.char_coeffs and
                self.__moments == other.moments and
                self.__d == other.d)

    def __hash__(self):
        return hash((tuple(self.__char_coeffs), tuple(self.__moments),
                     self.__d))

    def __repr__(self):
        return 'QuotientPoint(charpoly={}, moments={})'.format(
            self.charpoly().as_expr(),
            [format_rational(m) for m in self.__moments]
        )

    def to_json(self):
        payload = {
            'charpoly': [format_rational(c)
                         for c in self.__char_coeffs + [Fraction(1)]],
            'moments': [format_rational(m) for m in self.__moments]
        }
        if self.__d is not None:
            payload['d'] = format_rational(self.__d)
        return payload

    @classmethod
    def from_json(cls, payload):
        coeffs = [as_fraction(c) for c in payload['charpoly']]
        moments = payload['moments']
        if len(coeffs) == len(moments) + 1:
            if coeffs[-1] != 1:
                raise ValueError('The characteristic polynomial must be '
                                 'monic.')
            coeffs = coeffs[:-1]
        return cls(coeffs, moments, payload.get('d'))


def quotient_point(X):
    r"""Image of X in the categorical quotient.

    Parameters
    ----------
    X: TildeGlElement or GlNextElement

    Returns
    -------
    QuotientPoint
        Its ``d_values`` and ``r`` attributes carry the Hankel determinants
        and the stratum index.
    """
    d = None
    if isinstance(X, GlNextElement):
        X, d = X.split()
    if not isinstance(X, TildeGlElement):
        raise TypeError('Wrong element type: {}. Should be: {}'.format(
            type(X).__name__, 'TildeGlElement or GlNextElement'
        ))
    P = charpoly(X.A)
    return QuotientPoint.from_poly(P, X.moments(), d)


def stabilizer_dimension(X):
    r"""Dimension of {M : MA - AM = 0, Mv = 0, uM = 0}."""
    n = X.n
    if n == 0:
        return 0
    A, v, u = X.A, X.v, X.u
    columns = []
    for k in range(n):
        for l in range(n):
            E = [[Fraction(int(i == k and j == l)) for j in range(n)]
                 for i in range(n)]
            EA = matmul(E, A)
            AE = matmul(A, E)
            image = [EA[i][j] - AE[i][j] for i in range(n) for j in range(n)]
            image += [E[i][l] * v[l] for i in range(n)]
            image += [u[k] * E[k][j] for j in range(n)]
            columns.append(image)
    return n * n - rank(transpose(columns))


def is_regular(X):
    r"""Regularity test through the infinitesimal stabilizer."""
    if isinstance(X, GlNextElement):
        X = X.split()[0]
    return stabilizer_dimension(X) == 0


def central_element(n, lam):
    r"""The semisimple element (lam.id, 0, 0)."""
    lam = as_fraction(lam)
    A = [[lam * e for e in row] for row in identity(n)]
    return TildeGlElement(A, [0] * n, [0] * n)

