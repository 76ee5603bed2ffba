from fractions import Fraction

from ..padic import EtaleScalar
from ..utils import as_fraction, format_rational
from ..linalg.matrix import as_matrix, identity, zeros, transpose, matmul
from ..linalg.matrix import matvec, vecmat, dot, inverse, generic_det
from ..linalg.matrix import generic_inverse, matrix_to_json


class TildeGlElement():
    r"""Element X = (A, v, u) of gl_n x F^n x F_n.

    Parameters
    ----------
    A: list of rows
        n x n rational matrix.
    v: list
        Column vector of size n.
    u: list
        Row vector of size n.

    GL_n acts on the right by X.g = (g^-1 A g, g^-1 v, u g).
    """

    def __init__(self, A, v, u):

        A = as_matrix(A)
        n = len(A)
        if A and len(A[0]) != n:
            raise ValueError('`A` must be square, got {} x {}.'.format(
                n, len(A[0])
            ))
        v = [as_fraction(e) for e in v]
        u = [as_fraction(e) for e in u]
        if len(v) != n or len(u) != n:
            raise ValueError(
                'Inconsistent dimensions: A is {0}x{0}, v has {1} entries '
                'and u has {2}.'.format(n, len(v), len(u))
            )
        self.__A = A
        self.__v = v
        self.__u = u

    @property
    def n(self):
        return len(self.__A)

    @property
    def A(self):
        return [list(row) for row in self.__A]

    @property
    def v(self):
        return list(self.__v)

    @property
    def u(self):
        return list(self.__u)

    @classmethod
    def zero(cls, n):
        return cls(zeros(n, n), [0] * n, [0] * n)

    @classmethod
    def central(cls, n, lam, sign=1):
        r"""The regular representatives Z_lam^+ and Z_lam^- of the central
        fibre over (lam.id, 0, 0).

        Z^+ has lam on the diagonal, ones on the superdiagonal, v = e_n,
        u = 0; Z^- is its transpose image (ones below the diagonal,
        v = 0, u = e_n).
        """
        lam = as_fraction(lam)
        A = [[lam if i == j else Fraction(0) for j in range(n)]
             for i in range(n)]
        e_n = [Fraction(int(i == n - 1)) for i in range(n)]
        if sign > 0:
            for i in range(n - 1):
                A[i][i + 1] = Fraction(1)
            return cls(A, e_n, [0] * n)
        for i in range(n - 1):
            A[i + 1][i] = Fraction(1)
        return cls(A, [0] * n, e_n)

    def act(self, g):
        r"""Right action X.g = (g^-1 A g, g^-1 v, u g)."""
        g = as_matrix(g)
        ginv = inverse(g)
        return TildeGlElement(
            matmul(matmul(ginv, self.__A), g),
            matvec(ginv, self.__v),
            vecmat(self.__u, g)
        )

    def theta(self):
        r"""The involution (A, v, u) -> (A^t, u^t, v^t)."""
        return TildeGlElement(transpose(self.__A), self.__u, self.__v)

    def translate(self, lam):
        r"""X - (lam.id, 0, 0)."""
        lam = as_fraction(lam)
        A = self.A
        for i in range(self.n):
            A[i][i] -= lam
        return TildeGlElement(A, self.__v, self.__u)

    def moments(self, k=None):
        r"""The invariants u A^i v for i < k (k defaults to n)."""
        k = self.n if k is None else k
        out = []
        w = list(self.__v)
        for _ in range(k):
            out.append(dot(self.__u, w))
            w = matvec(self.__A, w)
        return out

    def pairing(self, other):
        r"""Invariant pairing Tr(A1 A2) + u1 v2 + u2 v1."""
        AB = matmul(self.__A, other.A)
        tr = sum((AB[i][i] for i in range(self.n)), Fraction(0))
        return tr + dot(self.__u, other.v) + dot(other.u, self.__v)

    def coordinates(self):
        r"""Flat coordinates: A row by row, then v, then u."""
        return [e for row in self.__A for e in row] + self.v + self.u

    @classmethod
    def from_coordinates(cls, n, coords):
        coords = list(coords)
        A = [coords[i * n:(i + 1) * n] for i in range(n)]
        return cls(A, coords[n * n:n * n + n], coords[n * n + n:])

    def __add__(self, other):
        return TildeGlElement.from_coordinates(
            self.n, [a + b for a, b in zip(self.coordinates(),
                                           other.coordinates())]
        )

    def __sub__(self, other):
        return TildeGlElement.from_coordinates(
            self.n, [a - b for a, b in zip(self.coordinates(),
                                           other.coordinates())]
        )

    def scale(self, c):
        c = as_fraction(c)
        return TildeGlElement.from_coordinates(
            self.n, [c * a for a in self.coordinates()]
        )

    def __eq__(self, other):
        return (isinstance(other, TildeGlElement) and
                self.coordinates() == other.coordinates() and
                self.n == other.n)

    def __hash__(self):
        return hash((self.n, tuple(self.coordinates())))

    def __repr__(self):
        return 'TildeGlElement(A={}, v={}, u={})'.format(
            matrix_to_json(self.__A),
            [format_rational(e) for e in self.__v],
            [format_rational(e) for e in self.__u]
        )

    def to_json(self):
        return {'n': self.n,
                'A': matrix_to_json(self.__A),
                'v': [format_rational(e) for e in self.__v],
                'u': [format_rational(e) for e in self.__u]}

    @classmethod
    def from_json(cls, payload):
        for key in ('A', 'v', 'u'):
            if key not in payload:
                raise KeyError('Missing field `{}` in element payload.'
                               .format(key))
        X = cls(payload['A'], payload['v'], payload['u'])
        if 'n' in payload and int(payload['n']) != X.n:
            raise ValueError('Field `n`={} does not match the matrix size {}.'
                             .format(payload['n'], X.n))
        return X


class GlNextElement():
    r"""Element of gl_{n+1}, block-decomposed as [[A, v], [u, d]]."""

    def __init__(self, M):

        M = as_matrix(M)
        if not M or len(M) != len(M[0]):
            raise ValueError('`M` must be a non-empty square matrix.')
        self.__M = M

    @property
    def n(self):
        return len(self.__M) - 1

    @property
    def matrix(self):
        return [list(row) for row in self.__M]

    @property
    def d(self):
        return self.__M[-1][-1]

    def split(self):
        r"""(X, d) with X = (A, v, u) in gl~_n."""
        n = self.n
        A = [row[:n] for row in self.__M[:n]]
        v = [row[n] for row in self.__M[:n]]
        u = self.__M[n][:n]
        return TildeGlElement(A, v, u), self.d

    @classmethod
    def join(cls, X, d=0):
        n = X.n
        A, v, u = X.A, X.v, X.u
        M = [A[i] + [v[i]] for i in range(n)]
        M.append(u + [as_fraction(d)])
        return cls(M)

    def act(self, g):
        r"""Action of GL_n embedded as diag(g, 1)."""
        X, d = self.split()
        return GlNextElement.join(X.act(g), d)

    def __eq__(self, other):
        return isinstance(other, GlNextElement) and self.__M == other.matrix

    def __hash__(self):
        return hash(tuple(tuple(row) for row in self.__M))

    def __repr__(self):
        return 'GlNextElement({})'.format(matrix_to_json(self.__M))

    def to_json(self):
        X, d = self.split()
        payload = X.to_json()
        payload['d'] = format_rational(d)
        return payload

    @classmethod
    def from_json(cls, payload):
        if 'M' in payload:
            return cls(payload['M'])
        return cls.join(TildeGlElement.from_json(payload),
                        payload.get('d', 0))


class EtaleMatrix():
    r"""Square matrix with entries in E (EtaleScalars of a fixed d)."""

    def __init__(self, rows, d):

        self.__d = int(d)
        self.__rows = [[e if isinstance(e, EtaleScalar)
                        else EtaleScalar(e, 0, self.__d) for e in row]
                       for row in rows]
        for row in self.__rows:
            for e in row:
                if e.d != self.__d:
                    raise ValueError('Mixed etale algebras in one matrix.')

    @classmethod
    def from_rational(cls, M, d):
        return cls([[EtaleScalar(e, 0, d) for e in row] for row in M], d)

    @classmethod
    def identity(cls, size, d):
        return cls.from_rational(identity(size), d)

    @property
    def rows(self):
        return [list(row) for row in self.__rows]

    @property
    def d(self):
        return self.__d

    @property
    def size(self):
        return len(self.__rows)

    def __add__(self, other):
        return EtaleMatrix([[a + b for a, b in zip(ra, rb)]
                            for ra, rb in zip(self.__rows, other.rows)],
                           self.__d)

    def __sub__(self, other):
        return EtaleMatrix([[a - b for a, b in zip(ra, rb)]
                            for ra, rb in zip(self.__rows, other.rows)],
                           self.__d)

    def __matmul__(self, other):
        return EtaleMatrix(matmul(self.__rows, other.rows), self.__d)

    def scale(self, c):
        return EtaleMatrix([[c * e for e in row] for row in self.__rows],
                           self.__d)

    def det(self):
        return generic_det(self.__rows)

    def inverse(self):
        D = self.det()
        if D.norm() == 0:
            raise ValueError('Matrix over E is not invertible '
                             '(determinant {}).'.format(D))
        return EtaleMatrix(generic_inverse(self.__rows), self.__d)

    def conj(self):
        return EtaleMatrix([[e.conj() for e in row] for row in self.__rows],
                           self.__d)

    def transpose(self):
        return EtaleMatrix(transpose(self.__rows), self.__d)

    def matvec(self, w):
        return matvec(self.__rows, w)

    def is_rational(self):
        return all(e.is_rational() for row in self.__rows for e in row)

    def rational_part(self):
        if not self.is_rational():
            raise ValueError('Matrix has non-rational entries.')
        return [[e.a for e in row] for row in self.__rows]

    def __eq__(self, other):
        return isinstance(other, EtaleMatrix) and self.__rows == other.rows

    def __hash__(self):
        return hash(tuple(tuple(row) for row in self.__rows))

    def __repr__(self):
        return 'EtaleMatrix({})'.format(self.__rows)

    def to_json(self):
        return [[e.to_json() for e in row] for row in self.__rows]


class SElement():
    r"""Element x of the symmetric space S = {x in GL_{n+1}(E): x x^c = 1}.

    Parameters
    ----------
    x: EtaleMatrix
    check: bool, optional
        If True, x x^c = 1 is verified.
        Default is True.
    """

    def __init__(self, x, check=True):

        if not isinstance(x, EtaleMatrix):
            raise TypeError('Wrong matrix type: {}. Should be: {}'.format(
                type(x).__name__, 'EtaleMatrix'
            ))
        if check:
            prod = x @ x.conj()
            if prod != EtaleMatrix.identity(x.size, x.d):
                raise ValueError('x x^c is not the identity: x is not in S.')
        self.__x = x

    @property
    def x(self):
        return self.__x

    @property
    def n(self):
        return self.__x.size - 1

    def blocks(self):
        r"""(A, b, c, d) with x = [[A, b], [c, d]]."""
        rows = self.__x.rows
        n = self.n
        A = [row[:n] for row in rows[:n]]
        b = [row[n] for row in rows[:n]]
        c = rows[n][:n]
        return A, b, c, rows[n][n]

    def act(self, g):
        r"""x.g = g^-1 x g for g in GL_n(F) embedded as diag(g, 1)."""
        n = self.n
        G = [list(row) + [Fraction(0)] for row in as_matrix(g)]
        G.append([Fraction(0)] * n + [Fraction(1)])
        G = EtaleMatrix.from_rational(G, self.__x.d)
        return SElement(G.inverse() @ self.__x @ G, check=False)

    def __eq__(self, other):
        return isinstance(other, SElement) and self.__x == other.x

    def __hash__(self):
        return hash(self.__x)

    def __repr__(self):
        return 'SElement({!r})'.format(self.__x)

    def to_json(self):
        return {'S': self.__x.to_json(), 'd': self.__x.d}

    @classmethod
    def from_json(cls, payload):
        rows = [[EtaleScalar.from_json(e) for e in row] for row in payload['S']]
        return cls(EtaleMatrix(rows, int(payload['d'])))
