import collections
import itertools

from fractions import Fraction

from ..invariants import TildeGlElement
from ..utils import DeskScaleError
from .cosets import element_coordinates


#: Largest |GL_n(Z/p^J)| enumerated by the K-averages.
MAX_GROUP_ORDER = 50000


def group_order(n, p, J):
    r"""Order of GL_n(Z/p^J)."""
    if J == 0:
        return 1
    order = 1
    for i in range(n):
        order *= p ** n - p ** i
    return order * p ** (n * n * (J - 1))


def gl_residues(n, p, J):
    r"""Integral lifts of the elements of GL_n(Z/p^J).

    Parameters
    ----------
    n: int
        1 or 2.
    p: int
    J: int
        Congruence depth. J = 0 yields the identity only.

    Returns
    -------
    list of n x n integer matrices
    """
    if J == 0:
        return [[[int(i == j) for j in range(n)] for i in range(n)]]
    q = p ** J
    if group_order(n, p, J) > MAX_GROUP_ORDER:
        raise DeskScaleError(
            'desk-scale limit: |GL_{}(Z/{}^{})| = {} exceeds {}.'.format(
                n, p, J, group_order(n, p, J), MAX_GROUP_ORDER
            )
        )
    if n == 1:
        return [[[a]] for a in range(1, q) if a % p]
    if n == 2:
        return [[[a, b], [c, d]]
                for a, b, c, d in itertools.product(range(q), repeat=4)
                if (a * d - b * c) % p]
    raise DeskScaleError('desk-scale limit: K-averages are computed for '
                         'n <= 2, got n={}.'.format(n))


def coset_key(coords, depth, base):
    r"""Class of a point modulo the box prod p^depth[i] O."""
    p = Fraction(base.p)
    return tuple(base.fractional_part(c / p ** m)
                 for c, m in zip(coords, depth))


class KAverage():
    r"""The K-average Phi(Y) = int_K phi(Y.k) dk of a coset function on
    gl~_n, with vol(K) = 1.

    Parameters
    ----------
    phi: LatticeCosetFunction
        Phase-free function on gl~_n, n <= 2. At n = 2 every term must
        have a uniform depth, so that its box is K-stable.
    depth: int, optional
        Minimal congruence depth of the finite quotient of K.
        Default is 0.

    Notes
    -----
    For a K-stable box L and a center c in p^-M Lambda_0, the class of
    c.k modulo L only depends on k modulo p^(M + m). The average is
    tabulated once as a multiset of such classes.
    """

    def __init__(self, phi, depth=0):

        if phi.ambient != 'gl~':
            raise ValueError('K-averages are taken on gl~_n, got the '
                             'ambient {}.'.format(phi.ambient))
        if not phi.is_phase_free():
            raise ValueError('K-averages need a phase-free function.')
        n = phi.n
        if n > 2:
            raise DeskScaleError('desk-scale limit: orbital integrals are '
                                 'computed for n <= 2, got n={}.'.format(n))
        if n == 2 and not phi.is_uniform():
            raise DeskScaleError(
                'desk-scale limit: at n=2 every coset needs a uniform depth.'
            )
        self.__base = phi.base
        self.__n = n
        p = phi.base.p
        M = phi.support_bound()
        self.__support_bound = M
        by_depth = collections.defaultdict(list)
        for t in phi.terms:
            by_depth[t.depth].append(t)
        self.__tables = {}
        self.__depth = {}
        for box, terms in by_depth.items():
            J = max(M + max(box, default=0), int(depth), 0)
            residues = gl_residues(n, p, J)
            weight = Fraction(1, len(residues))
            table = collections.Counter()
            for t in terms:
                C = TildeGlElement.from_coordinates(n, t.center)
                for k in residues:
                    key = coset_key(C.act(k).coordinates(), box,
                                    self.__base)
                    table[key] += t.weight * weight
            self.__tables[box] = table
            self.__depth[box] = J

    @property
    def support_bound(self):
        r"""M such that the support lies in p^-M Lambda_0."""
        return self.__support_bound

    @property
    def depths(self):
        r"""Congruence depth used for every box shape."""
        return dict(self.__depth)

    def __call__(self, Y):
        coords = element_coordinates(Y)
        out = Fraction(0)
        for box, table in self.__tables.items():
            out += table.get(coset_key(coords, box, self.__base), 0)
        return out
