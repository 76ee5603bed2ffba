import collections

from fractions import Fraction
from sympy import Poly, QQ, Rational, Symbol
from sympy.polys.matrices import DomainMatrix

from ..utils import as_fraction, format_rational


x = Symbol('x')

LinearSolution = collections.namedtuple(
    'LinearSolution', ['solution', 'rank', 'basis']
)


def _qq(f):
    f = as_fraction(f)
    return QQ(f.numerator, f.denominator)


def _sym(f):
    f = as_fraction(f)
    return Rational(f.numerator, f.denominator)


def to_domain_matrix(rows, ncols=None):
    r"""DomainMatrix over QQ from a list of rows of rationals."""
    nrows = len(rows)
    if ncols is None:
        ncols = len(rows[0]) if nrows else 0
    return DomainMatrix(
        [[_qq(e) for e in row] for row in rows], (nrows, ncols), QQ
    )


def from_domain_matrix(dm):
    return [[as_fraction(e) for e in row] for row in dm.to_list()]


def as_matrix(rows):
    r"""Validate and convert a list of rows into Fractions."""
    rows = [[as_fraction(e) for e in row] for row in rows]
    if rows and len(set(len(row) for row in rows)) != 1:
        raise ValueError('Matrix rows have inconsistent lengths: {}.'.format(
            [len(row) for row in rows]
        ))
    return rows


def identity(n, one=Fraction(1), zero=Fraction(0)):
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def zeros(nrows, ncols):
    return [[Fraction(0)] * ncols for _ in range(nrows)]


def transpose(A):
    if not A:
        return []
    return [list(col) for col in zip(*A)]


def matmul(A, B):
    r"""Product of two matrices given as lists of rows.

    Works for any entry ring supporting + and * (rationals or
    EtaleScalars).
    """
    if not A or not B:
        return [[] for _ in A]
    ncols = len(B[0])
    inner = len(B)
    out = []
    for row in A:
        if len(row) != inner:
            raise ValueError('Incompatible shapes for a product.')
        out.append([
            sum((row[k] * B[k][j] for k in range(1, inner)), row[0] * B[0][j])
            for j in range(ncols)
        ])
    return out


def matvec(A, v):
    return [sum((row[k] * v[k] for k in range(1, len(v))), row[0] * v[0])
            if v else Fraction(0) for row in A]


def vecmat(u, A):
    if not A:
        return []
    return [sum((u[k] * A[k][j] for k in range(1, len(u))), u[0] * A[0][j])
            for j in range(len(A[0]))]


def dot(u, v):
    out = Fraction(0)
    for a, b in zip(u, v):
        out = b * a + out
    return out


def add(A, B):
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def scale(c, A):
    return [[c * a for a in row] for row in A]


def mat_power(A, k):
    out = identity(len(A))
    for _ in range(k):
        out = matmul(out, A)
    return out


def krylov_columns(A, v, k=None):
    r"""The vectors v, Av, ..., A^(k-1)v (k defaults to n)."""
    k = len(v) if k is None else k
    out = []
    w = list(v)
    for _ in range(k):
        out.append(w)
        w = matvec(A, w)
    return out


def krylov_rows(u, A, k=None):
    r"""The row vectors u, uA, ..., uA^(k-1)."""
    k = len(u) if k is None else k
    out = []
    w = list(u)
    for _ in range(k):
        out.append(w)
        w = vecmat(w, A)
    return out


def det(A):
    r"""Exact determinant of a square rational matrix."""
    A = as_matrix(A)
    if not A:
        return Fraction(1)
    if len(A) != len(A[0]):
        raise ValueError('Determinant of a non-square matrix.')
    return as_fraction(to_domain_matrix(A).det())


def generic_det(A):
    r"""Determinant by cofactor expansion over any commutative ring.

    Used for the small matrices over E; sizes stay below 4.
    """
    n = len(A)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return A[0][0]
    if n == 2:
        return A[0][0] * A[1][1] - A[0][1] * A[1][0]
    out = None
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in A[1:]]
        term = A[0][j] * generic_det(minor)
        if j % 2:
            term = -term
        out = term if out is None else out + term
    return out


def generic_inverse(A):
    r"""Inverse by the adjugate formula over any commutative ring whose
    elements implement ``inverse()`` (or rationals)."""
    n = len(A)
    D = generic_det(A)
    if D == 0:
        raise ValueError('Matrix is singular.')
    Dinv = D.inverse() if hasattr(D, 'inverse') else 1 / D
    out = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [row[:i] + row[i + 1:] for k, row in enumerate(A) if k != j]
            c = generic_det(minor)
            if (i + j) % 2:
                c = -c
            out[i][j] = c * Dinv
    return out


def inverse(A):
    A = as_matrix(A)
    if det(A) == 0:
        raise ValueError('Matrix is singular: it has no inverse.')
    return from_domain_matrix(to_domain_matrix(A).inv())


def rank(A):
    A = as_matrix(A)
    if not A or not A[0]:
        return 0
    return to_domain_matrix(A).rank()


def nullspace(A, ncols=None):
    r"""Basis (list of vectors) of {x : Ax = 0}."""
    A = as_matrix(A)
    ncols = len(A[0]) if A else (ncols or 0)
    if not A:
        return [[Fraction(int(i == j)) for j in range(ncols)]
                for i in range(ncols)]
    _, pivots = to_domain_matrix(A).rref()
    if len(pivots) == ncols:
        return []
    return from_domain_matrix(to_domain_matrix(A).nullspace())


def solve_linear(A, b):
    r"""Solve Ax = b exactly.

    Parameters
    ----------
    A: list of rows
    b: list

    Returns
    -------
    LinearSolution
        ``solution`` is None when the system is inconsistent; ``rank`` is
        the rank of A and ``basis`` spans the solutions of Ax = 0.
    """
    A = as_matrix(A)
    b = [as_fraction(e) for e in b]
    nrows = len(A)
    if nrows != len(b):
        raise ValueError('Incompatible shapes: {} rows and {} values.'.format(
            nrows, len(b)
        ))
    ncols = len(A[0]) if A else 0
    if ncols == 0:
        consistent = all(e == 0 for e in b)
        return LinearSolution([] if consistent else None, 0, [])

    augmented = [row + [e] for row, e in zip(A, b)]
    reduced, pivots = to_domain_matrix(augmented).rref()
    reduced = from_domain_matrix(reduced)
    pivots = list(pivots)
    basis = nullspace(A)
    rk = len([c for c in pivots if c < ncols])
    if ncols in pivots:
        return LinearSolution(None, rk, basis)

    solution = [Fraction(0)] * ncols
    for row, col in enumerate(pivots):
        solution[col] = reduced[row][ncols]
    return LinearSolution(solution, rk, basis)


def charpoly(A):
    r"""Monic characteristic polynomial det(x - A) as a sympy Poly in x."""
    A = as_matrix(A)
    if not A:
        return Poly(1, x, domain=QQ)
    coeffs = to_domain_matrix(A).charpoly()
    return poly_from_coeffs([as_fraction(c) for c in reversed(coeffs)])


def poly_from_coeffs(coeffs):
    r"""Poly in x from coefficients listed constant term first."""
    coeffs = [_sym(c) for c in coeffs]
    if not coeffs:
        return Poly(0, x, domain=QQ)
    return Poly(list(reversed(coeffs)), x, domain=QQ)


def poly_coeffs(P):
    r"""Coefficients of P, constant term first, as Fractions."""
    return [as_fraction(c) for c in reversed(P.all_coeffs())]


def poly_eval(P, value):
    r"""Exact evaluation of P at a rational."""
    out = Fraction(0)
    for c in P.all_coeffs():
        out = out * as_fraction(value) + as_fraction(c)
    return out


def poly_eval_matrix(P, A):
    r"""P(A) for a square rational matrix A (Horner scheme)."""
    n = len(A)
    out = zeros(n, n)
    for c in P.all_coeffs():
        out = add(matmul(out, A), scale(as_fraction(c), identity(n)))
    return out


def poly_to_json(P):
    return [format_rational(c) for c in poly_coeffs(P)]


def poly_from_json(payload):
    return poly_from_coeffs([as_fraction(c) for c in payload])


def companion(P):
    r"""Companion matrix of the monic P with ones on the subdiagonal:
    (e_1, Ce_1, ..., C^(r-1)e_1) is the identity matrix."""
    c = poly_coeffs(P.monic())
    r = len(c) - 1
    C = zeros(r, r)
    for i in range(1, r):
        C[i][i - 1] = Fraction(1)
    for i in range(r):
        C[i][r - 1] = -c[i]
    return C


def matrix_to_json(A):
    return [[format_rational(e) for e in row] for row in A]


def matrix_from_json(payload):
    return as_matrix(payload)
