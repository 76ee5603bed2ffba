import itertools

from fractions import Fraction
from joblib import Parallel, delayed

from ..utils import sign_string
from ..linalg.matrix import companion, zeros
from ..linalg.matrix import krylov_columns, krylov_rows, solve_linear
from ..linalg.matrix import nullspace, rank, det, poly_eval_matrix
from ..linalg.quotient_ring import QuotientRingElement, trace_dual_basis
from ..invariants import TildeGlElement, quotient_point, is_regular
from .descent import descend


class OrbitRep():
    r"""Regular orbit representative of type epsilon.

    Attributes
    ----------
    epsilon: tuple of +1/-1
    X: TildeGlElement
    provenance: dict
        The slice element (X0 and the central blocks) it was built from.
    """

    def __init__(self, epsilon, X, provenance):
        self.__epsilon = tuple(epsilon)
        self.__X = X
        self.__provenance = provenance

    @property
    def epsilon(self):
        return self.__epsilon

    @property
    def X(self):
        return self.__X

    @property
    def provenance(self):
        return self.__provenance

    def __repr__(self):
        return 'OrbitRep({!r}, {!r})'.format(sign_string(self.__epsilon),
                                             self.__X)

    def to_json(self):
        return {'epsilon': sign_string(self.__epsilon),
                'X': self.__X.to_json()}


def realize_rs(a0):
    r"""Explicit X0 = (C, e_1, u0) with q(X0) = a0.

    C is the companion matrix of the characteristic polynomial of a0, so
    the Krylov matrix of (C, e_1) is the identity and u0 solves the r
    moment equations u0 C^i e_1 = m_i.
    """
    r = a0.n
    if r == 0:
        return TildeGlElement([], [], [])
    C = companion(a0.charpoly())
    e1 = [Fraction(int(i == 0)) for i in range(r)]
    K = krylov_columns(C, e1)
    u0 = solve_linear(K, a0.moments).solution
    return TildeGlElement(C, e1, u0)


def _coordinates(z, basis, kind):
    if kind == 'power':
        return z.coeffs()
    # trace-dual basis: coordinate k is Tr(z alpha^k)
    alpha = QuotientRingElement.generator(z.modulus)
    return [(z * alpha ** k).trace() for k in range(z.degree)]


def _basis(P, kind):
    alpha = QuotientRingElement.generator(P)
    if kind == 'power':
        return [alpha ** k for k in range(P.degree())]
    if kind == 'dual':
        return trace_dual_basis(P)
    raise ValueError('Unknown basis kind `{}`. Should be power or dual.'
                     .format(kind))


def restrict_scalars(A, v, u, P, kind='power'):
    r"""Q-realization of an element of gl~_m(F_P).

    F_P-vectors are written in a Q-basis of F_P; a covector u becomes the
    Q-linear form w -> Tr(u w).

    Parameters
    ----------
    A: list of rows of QuotientRingElement
    v, u: lists of QuotientRingElement
    P: sympy.Poly
    kind: str
        'power' or 'dual' basis.

    Returns
    -------
    TildeGlElement of size m deg(P)
    """
    basis = _basis(P, kind)
    f = len(basis)
    m = len(v)
    size = m * f
    AQ = zeros(size, size)
    for i in range(m):
        for j in range(m):
            for k, b in enumerate(basis):
                col = _coordinates(A[i][j] * b, basis, kind)
                for l in range(f):
                    AQ[i * f + l][j * f + k] = col[l]
    vQ = [c for z in v for c in _coordinates(z, basis, kind)]
    uQ = [(z * b).trace() for z in u for b in basis]
    return TildeGlElement(AQ, vQ, uQ)


def central_block(factor, sign, kind='power'):
    r"""Q-realization of Z^+/-_alpha in gl~_{n_i}(F_i)."""
    P = factor.P
    m = factor.mult
    alpha = factor.alpha
    zero = QuotientRingElement(P, 0)
    one = QuotientRingElement(P, 1)
    A = [[alpha if i == j else zero for j in range(m)] for i in range(m)]
    e_m = [one if i == m - 1 else zero for i in range(m)]
    if sign > 0:
        for i in range(m - 1):
            A[i][i + 1] = one
        v, u = e_m, [zero] * m
    else:
        for i in range(m - 1):
            A[i + 1][i] = one
        v, u = [zero] * m, e_m
    return restrict_scalars(A, v, u, P, kind)


def direct_sum(blocks):
    r"""Block-diagonal sum of elements of gl~."""
    size = sum(B.n for B in blocks)
    A = zeros(size, size)
    v, u = [], []
    offset = 0
    for B in blocks:
        BA = B.A
        for i in range(B.n):
            for j in range(B.n):
                A[offset + i][offset + j] = BA[i][j]
        v += B.v
        u += B.u
        offset += B.n
    return TildeGlElement(A, v, u)


def iota(X0, Xc):
    r"""Embedding of the slice: (X0, Xc) -> X in gl~_{r+m}.

    X = ([[A0, v' uc], [vc u', Ac]], (v0, 0), (u0, 0)) where u', v' are
    the dual Krylov vectors u' A0^i v0 = delta_{i,r-1} and
    u0 A0^i v' = delta_{i,r-1}.
    """
    r, m = X0.n, Xc.n
    if r == 0:
        return Xc
    rhs = [Fraction(int(i == r - 1)) for i in range(r)]
    u_prime = solve_linear(krylov_columns(X0.A, X0.v), rhs).solution
    v_prime = solve_linear(krylov_rows(X0.u, X0.A), rhs).solution
    if u_prime is None or v_prime is None:
        raise ValueError('X0 is not regular semisimple: the dual Krylov '
                         'vectors do not exist.')
    A0, Ac = X0.A, Xc.A
    A = zeros(r + m, r + m)
    for i in range(r):
        for j in range(r):
            A[i][j] = A0[i][j]
        for j in range(m):
            A[i][r + j] = v_prime[i] * Xc.u[j]
    for i in range(m):
        for j in range(r):
            A[r + i][j] = Xc.v[i] * u_prime[j]
        for j in range(m):
            A[r + i][r + j] = Ac[i][j]
    return TildeGlElement(A, X0.v + [Fraction(0)] * m,
                          X0.u + [Fraction(0)] * m)


def assemble(dd, epsilon, kind='power', X0=None):
    r"""Representative iota(X0, Z^eps_1_alpha_1, ..., Z^eps_k_alpha_k)."""
    if len(epsilon) != dd.k:
        raise ValueError('Expected {} signs, got {}.'.format(dd.k,
                                                             len(epsilon)))
    X0 = realize_rs(dd.a0) if X0 is None else X0
    blocks = [central_block(f, s, kind) for f, s in zip(dd.factors, epsilon)]
    Xc = direct_sum(blocks) if blocks else TildeGlElement([], [], [])
    return OrbitRep(epsilon, iota(X0, Xc), {'X0': X0, 'blocks': blocks,
                                            'basis': kind})


def orbit_representatives(a, dd=None, kind='power', n_jobs=1, prefer=None,
                          verbose=0):
    r"""Complete list of regular orbits in the fibre over a.

    Parameters
    ----------
    a: QuotientPoint
    dd: DescentData, optional
        If None, computed with descend(a).
    kind: str, optional
        Q-basis used for the extension fields ('power' or 'dual').
        Default is 'power'.
    n_jobs: int, optional
        Number of CPU to use for parallel computing.
        Default is 1.
    prefer: str, optional
        Soft hint to choose the default backend.
        Supported option:'processes', 'threads'.
        Cf. https://joblib.readthedocs.io/en/latest/generated/joblib.Parallel.html
        Default is None.
    verbose: int, optional
        Display a progress meter if set to a value > 0.
        Default is 0.

    Returns
    -------
    list of OrbitRep
        One representative per sign vector, 2^k in total.
    """
    dd = descend(a) if dd is None else dd
    X0 = realize_rs(dd.a0)
    signs = list(itertools.product((1, -1), repeat=dd.k))
    reps = Parallel(n_jobs=n_jobs, prefer=prefer, verbose=verbose)(
        delayed(assemble)(dd, eps, kind, X0) for eps in signs
    )
    for rep in reps:
        if quotient_point(rep.X) != a:
            raise ValueError('Assembled representative {} does not map to '
                             '{}.'.format(rep, a))
    return reps


def _krylov_space(X):
    return krylov_columns(X.A, X.v)


def _intersection_dim(U, W):
    if not U or not W:
        return 0
    return rank(U) + rank(W) - rank(U + W)


def classify_type(X, dd=None):
    r"""Sign vector of a regular element.

    epsilon_i is '+' exactly when the Krylov space of (A, v) contains the
    whole P_i-primary subspace ker P_i(A)^(n_i).

    Parameters
    ----------
    X: TildeGlElement
        Regular element.
    dd: DescentData, optional
        Descent data of q(X) (computed if None).

    Returns
    -------
    tuple of +1/-1
    """
    if not is_regular(X):
        raise ValueError('classify_type needs a regular element; {} has a '
                         'nontrivial stabilizer.'.format(X))
    a = quotient_point(X)
    dd = descend(a) if dd is None else dd
    K = _krylov_space(X)
    out = []
    for f in dd.factors:
        primary = poly_eval_matrix(f.P ** f.mult, X.A)
        W = nullspace(primary)
        inter = _intersection_dim(K, W)
        out.append(1 if inter == f.mult * f.degree else -1)
    return tuple(out)


def orbit_witness(X_rep, X):
    r"""Element g of GL_n(Q) with X = X_rep.g, or None.

    Solves the linear system A_rep g = g A, g v = v_rep, u_rep g = u.
    """
    n = X.n
    if X_rep.n != n:
        raise ValueError('Elements of different sizes.')
    if n == 0:
        return []
    A_rep, A = X_rep.A, X.A
    rows, rhs = [], []

    def unknown(k, l):
        return k * n + l

    for i in range(n):
        for j in range(n):
            row = [Fraction(0)] * (n * n)
            for k in range(n):
                row[unknown(k, j)] += A_rep[i][k]
                row[unknown(i, k)] -= A[k][j]
            rows.append(row)
            rhs.append(Fraction(0))
    for i in range(n):
        row = [Fraction(0)] * (n * n)
        for k in range(n):
            row[unknown(i, k)] += X.v[k]
        rows.append(row)
        rhs.append(X_rep.v[i])
    for j in range(n):
        row = [Fraction(0)] * (n * n)
        for k in range(n):
            row[unknown(k, j)] += X_rep.u[k]
        rows.append(row)
        rhs.append(X.u[j])
    sol = solve_linear(rows, rhs)
    if sol.solution is None:
        return None
    g = [sol.solution[i * n:(i + 1) * n] for i in range(n)]
    if sol.basis or det(g) == 0:
        return None
    return g


def locate(X, dd=None, kind='power'):
    r"""(OrbitRep, g) with X = rep.X . g for a regular X."""
    dd = descend(quotient_point(X)) if dd is None else dd
    eps = classify_type(X, dd)
    rep = assemble(dd, eps, kind)
    g = orbit_witness(rep.X, X)
    if g is None:
        raise ValueError('No witness found between {} and the representative '
                         'of type {}.'.format(X, sign_string(eps)))
    return rep, g
