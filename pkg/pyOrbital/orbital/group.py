import collections
import itertools
import warnings

from fractions import Fraction

from ..descent import descend, locate
from ..invariants import EtaleMatrix, SElement, CayleyParams, GlNextElement
from ..invariants import cayley_to_group, cayley_to_lie, quotient_point
from ..lfactors import LaurentRational, L_for_orbit, chi_of
from ..linalg.matrix import det
from ..padic import EtaleScalar, UnramifiedCharacter
from ..utils import as_fraction, DeskScaleError
from ..utils import UnsupportedConfigurationError
from .cosets import LatticeCosetFunction, CosetTerm
from .general import orbital_general


def nu(g):
    r"""nu(g) = g (g^c)^-1, from GL_{n+1}(E) onto S."""
    if not isinstance(g, EtaleMatrix):
        raise TypeError('Wrong matrix type: {}. Should be: {}'.format(
            type(g).__name__, 'EtaleMatrix'
        ))
    return SElement(g @ g.conj().inverse())


def _omegas(base):
    d = base.d
    for a in range(0, base.p):
        for b in range(0, base.p):
            if (a, b) != (0, 0):
                yield EtaleScalar(a, b, d)


def is_integral_S(x, base):
    r"""True when every entry of x lies in O_E."""
    return all(base.etale_valuation(e) >= 0 for row in x.x.rows for e in row)


def nu_witness(x, base):
    r"""y in GL_{n+1}(O_E) with nu(y) = x, for x in S(O).

    y = omega + x omega^c satisfies x y^c = y; omega runs through the
    residues of O_E until det(y) is a unit.

    Raises
    ------
    ValueError
        If x is not integral or no residue gives a unit determinant.
    """
    if not is_integral_S(x, base):
        raise ValueError('{} is not in S(O).'.format(x))
    size = x.n + 1
    one = EtaleMatrix.identity(size, base.d)
    for omega in _omegas(base):
        y = one.scale(omega) + x.x.scale(omega.conj())
        if base.valuation(y.det().norm()) == 0:
            return y
    raise ValueError('No witness y in GL(O_E) with nu(y) = {}.'.format(x))


def alpha(gamma):
    r"""alpha(g_n, g_{n+1}) = nu(g_n^-1 g_{n+1}), with g_n embedded as
    diag(g_n, 1)."""
    g1, g2 = gamma
    d = g2.d
    size = g2.size
    rows = [[EtaleScalar(int(i == j), 0, d) for j in range(size)]
            for i in range(size)]
    for i, row in enumerate(g1.rows):
        for j, e in enumerate(row):
            rows[i][j] = e
    return nu(EtaleMatrix(rows, d).inverse() @ g2)


def mu_ratio(gamma, mu, base):
    r"""mu(det g_1 / det g_2) = mu(gamma_1^-1 gamma_2)^-1, mu unramified."""
    if mu is None:
        return Fraction(1)
    if not isinstance(mu, UnramifiedCharacter):
        mu = UnramifiedCharacter(mu, 'mu')
    g1, g2 = gamma
    z = g1.det() / g2.det()
    v = base.valuation(z.norm())
    if v % 2:
        raise UnsupportedConfigurationError(
            'mu is evaluated on E^x through v_E; the ratio of determinants '
            'has odd norm valuation {}.'.format(v)
        )
    return mu.value_at_p ** (v // 2)


GroupCosetTerm = collections.namedtuple('GroupCosetTerm',
                                        ['weight', 'center', 'depth'])
GroupCosetTerm.__doc__ = r"""weight . 1_{(c_1, c_2) K'(p^depth)}, depth 0 or 1.

At depth 0 the center is ignored and the term is weight . 1_{G'(O)}."""


def unit_residues(base):
    r"""Representatives a + bj, 0 <= a, b < p, of (O_E / p)^x."""
    return [omega for omega in _omegas(base)
            if base.valuation(omega.norm()) == 0]


def _congruent(z, w, base):
    return base.etale_valuation(z - w) >= 1


def _is_integral_unit(g, base):
    return all(base.etale_valuation(e) >= 0 for row in g.rows for e in row) \
        and base.valuation(g.det().norm()) == 0


def _diag(h, d):
    return EtaleMatrix([[h, 0], [0, 1]], d)


class GroupCosetFunction():
    r"""Bi-K'(p)-invariant function on G'(O) = GL_1(O_E) x GL_2(O_E).

    Parameters
    ----------
    base: BaseField
    terms: list of GroupCosetTerm, optional
        Default is the zero function.
    """

    def __init__(self, base, terms=None):

        self.__base = base
        self.__terms = [self._check_term(t) for t in (terms or [])]

    def _check_term(self, term):
        if not isinstance(term, GroupCosetTerm):
            term = GroupCosetTerm(*term)
        depth = int(term.depth)
        if depth not in (0, 1):
            raise DeskScaleError(
                'group-side desk-scale limit: cosets of depth <= 1 only, '
                'got depth {}.'.format(depth)
            )
        if depth == 0:
            return GroupCosetTerm(as_fraction(term.weight), None, 0)
        c1, c2 = term.center
        if isinstance(c1, EtaleMatrix):
            c1 = c1.rows[0][0]
        if not isinstance(c1, EtaleScalar):
            c1 = self.__base.scalar(c1)
        if self.__base.valuation(c1.norm()) != 0 or \
                not _is_integral_unit(c2, self.__base) or c2.size != 2:
            raise ValueError('The center of a coset must lie in G\'(O), got '
                             '({}, {}).'.format(c1, c2))
        return GroupCosetTerm(as_fraction(term.weight), (c1, c2), 1)

    @classmethod
    def unit(cls, base, weight=1):
        r"""weight . 1_{G'(O)}."""
        return cls(base, [GroupCosetTerm(weight, None, 0)])

    @classmethod
    def coset(cls, base, gamma, weight=1):
        r"""weight . 1_{gamma K'(p)} for gamma in G'(O)."""
        return cls(base, [GroupCosetTerm(weight, tuple(gamma), 1)])

    @property
    def base(self):
        return self.__base

    @property
    def terms(self):
        return list(self.__terms)

    def __add__(self, other):
        return GroupCosetFunction(self.__base, self.__terms + other.terms)

    def scale(self, c):
        c = as_fraction(c)
        return GroupCosetFunction(
            self.__base, [t._replace(weight=c * t.weight)
                          for t in self.__terms]
        )

    def __call__(self, gamma):
        g1, g2 = gamma
        base = self.__base
        if not (_is_integral_unit(g1, base) and _is_integral_unit(g2, base)):
            return Fraction(0)
        h = g1.rows[0][0]
        out = Fraction(0)
        for t in self.__terms:
            if t.depth == 0:
                out += t.weight
                continue
            c1, c2 = t.center
            if _congruent(h, c1, base) and all(
                    _congruent(a, b, base)
                    for ra, rb in zip(g2.rows, c2.rows)
                    for a, b in zip(ra, rb)):
                out += t.weight
        return out

    def __repr__(self):
        return 'GroupCosetFunction({} terms, {})'.format(
            len(self.__terms), self.__base
        )


def _rational_unit_mod_p(g, base):
    r"""True when g is congruent modulo p to an element of GL_2(O)."""
    if any(base.valuation(e.b) < 1 for row in g.rows for e in row):
        return False
    return base.valuation(det([[e.a for e in row] for row in g.rows])) == 0


def f_S(f, x):
    r"""f^S_s(x) at n = 1.

    The support of f forces h_1 into O_E^x and h_2 into GL_2(O), where xi,
    |.|^s and mu are trivial, so f^S does not depend on s. The integral
    runs over the residues h_1 of (O_E / p)^x (each of volume 1 / (q_E - 1))
    and, for a coset term, over the single class of K(p) in GL_2(O) that
    h_2 = y^-1 diag(h_1, 1) c_2 may define (volume 1 / |GL_2(F_p)|), where
    y in GL_2(O_E) satisfies nu(y) = x.

    Parameters
    ----------
    f: GroupCosetFunction
    x: SElement

    Returns
    -------
    Fraction
    """
    base = f.base
    if x.n != 1:
        raise DeskScaleError('group-side desk-scale limit: only n = 1 is '
                             'supported, got n={}.'.format(x.n))
    if not is_integral_S(x, base):
        return Fraction(0)
    p = base.p
    y_inv = nu_witness(x, base).inverse()
    units = unit_residues(base)
    order = (p ** 2 - 1) * (p ** 2 - p)
    total = Fraction(0)
    for h in units:
        for t in f.terms:
            if t.depth == 0:
                total += t.weight
                continue
            c1, c2 = t.center
            if not _congruent(h * c1, base.scalar(1), base):
                continue
            if _rational_unit_mod_p(y_inv @ _diag(h, base.d) @ c2, base):
                total += t.weight / order
    return total / len(units)


def in_unramified_chart(x, Y, params):
    r"""True when x - sigma and 1 - tau^-1 Y have unit determinants."""
    base = params.base
    size = Y.n + 1
    one = EtaleMatrix.identity(size, base.d)
    sigma = one.scale(params.sigma)
    tY = EtaleMatrix.from_rational(Y.matrix, base.d).scale(
        params.tau.inverse()
    )
    return base.valuation((x.x - sigma).det().norm()) == 0 and \
        base.valuation((one - tY).det().norm()) == 0


def f_gl(f, params, d):
    r"""The fibre over d of f^gl = f^S o c_sigma, as a function on gl~_1.

    On gl_2(O) with 1 - tau^-1 Y invertible modulo p, c_sigma commutes
    with the reduction modulo p, so f^gl is constant on the classes of
    p gl_2(O). On the other classes x - sigma = -2 sigma (1 - tau^-1 Y)^-1
    is not integral and f^S vanishes. Off gl_2(O) only points with
    det(x - sigma) a non-unit survive. They lie on no orbit group_pullback
    accepts, and the fibre drops them.

    Parameters
    ----------
    f: GroupCosetFunction
    params: CayleyParams
    d: rational
        Corner entry of the fibre.

    Returns
    -------
    LatticeCosetFunction
    """
    base = params.base
    d = as_fraction(d)
    if base.valuation(d) < 0:
        return LatticeCosetFunction('gl~', 1, base)
    weights = collections.OrderedDict()
    for A, v, u in itertools.product(range(base.p), repeat=3):
        Y = GlNextElement([[A, v], [u, d]])
        try:
            x = cayley_to_group(Y, params)
        except ValueError:
            # outside the Cayley chart
            weights[(A, v, u)] = Fraction(0)
            continue
        if not in_unramified_chart(x, Y, params):
            weights[(A, v, u)] = Fraction(0)
            continue
        weights[(A, v, u)] = f_S(f, x)
    values = set(weights.values())
    if len(values) == 1:
        return LatticeCosetFunction.unit_lattice(1, base).scale(values.pop())
    terms = [CosetTerm(w, c, 1, None) for c, w in weights.items() if w != 0]
    return LatticeCosetFunction('gl~', 1, base, terms)


def group_pullback(f, gamma, params, xi, mu=None):
    r"""L-factor L_gamma and orbital integral I^sigma_gamma(f) at n = 1.

    f^S is integrated exactly over the unit groups (f_S), transported to
    gl_2 by the Cayley transform c_sigma (f_gl) and integrated over the
    orbit of c_sigma^-1(alpha(gamma)) by orbital_general.

    Parameters
    ----------
    f: GroupCosetFunction
        Function on G'(O), e.g. GroupCosetFunction.unit(base).
    gamma: (EtaleMatrix, EtaleMatrix)
        (g_1, g_2) in GL_1(E) x GL_2(E).
    params: CayleyParams
    xi: UnramifiedCharacter or rational
    mu: UnramifiedCharacter or rational, optional
        Character of E^x (only its value at p is used).
        Default is None (trivial).

    Returns
    -------
    (L_gamma, I): (LaurentRational, LaurentRational)

    Raises
    ------
    DeskScaleError
        For n >= 2.
    ValueError
        When gamma or the Cayley chart leaves the unramified situation.
    """
    if not isinstance(f, GroupCosetFunction):
        raise TypeError('Wrong function type: {}. Should be: {}'.format(
            type(f).__name__, 'GroupCosetFunction'
        ))
    g1, g2 = gamma
    n = g1.size
    if n != 1 or g2.size != 2:
        raise DeskScaleError('group-side desk-scale limit: only n = 1 is '
                             'supported, got n={}.'.format(n))
    base = params.base
    if not params.is_integral_unit():
        raise ValueError('2 tau sigma must be a unit of O_E.')
    if any(base.etale_valuation(e) < 0 for g in gamma
           for row in g.rows for e in row):
        raise ValueError('`gamma` must lie in G\'(O).')
    x = alpha(gamma)
    Y = cayley_to_lie(x, params)
    if not in_unramified_chart(x, Y, params):
        raise ValueError('The Cayley chart is not unramified along the orbit '
                         'of {}.'.format(x))
    X, d = Y.split()
    if not isinstance(xi, UnramifiedCharacter):
        xi = UnramifiedCharacter(xi, 'xi')
    dd = descend(quotient_point(X))
    rep, _ = locate(X, dd)
    L = L_for_orbit((dd, rep.epsilon), xi, base)
    phi = f_gl(f, params, d)
    if phi.is_zero():
        return L, LaurentRational(0)
    value = orbital_general(X, phi, xi, check=False).value
    return L, value * mu_ratio(gamma, mu, base)


def group_direct_rs(f, gamma, xi, mu=None):
    r"""The absolutely convergent H_1 x H_2 integral of f at a regular
    semisimple gamma, n = 1.

    After the integration over H_1 and GL_2(F) the integral runs over
    t in F^x along the orbit x.t of x = alpha(gamma), with b -> b / t and
    c -> c t. Only the shells -v(c) <= v(t) <= v(b) meet S(O); each is
    averaged over the residues of O^x.
    """
    base = f.base
    x = alpha(gamma)
    if x.n != 1:
        raise DeskScaleError('group-side desk-scale limit: only n = 1 is '
                             'supported, got n={}.'.format(x.n))
    _, b, c, _ = x.blocks()
    if b[0].norm() == 0 or c[0].norm() == 0:
        raise ValueError('{} is not regular semisimple.'.format(x))
    p = base.p
    w = chi_of(xi, base).value_at_p
    lo, hi = -base.etale_valuation(c[0]), base.etale_valuation(b[0])
    terms = {}
    for k in range(lo, hi + 1):
        shell = sum((f_S(f, x.act([[Fraction(p) ** k * e]]))
                     for e in range(1, p)), Fraction(0)) / (p - 1)
        if shell != 0:
            terms[k] = shell * w ** k
    value = LaurentRational.from_terms(terms or {0: 0})
    return value * mu_ratio(gamma, mu, base)


def sigma_independence(gamma, sigmas, xi, base, tau=None, mu=None, f=None):
    r"""Compare I^sigma_gamma across several norm-one sigma.

    Nothing is asserted: a UserWarning is raised when the values differ.

    Parameters
    ----------
    f: GroupCosetFunction, optional
        Default is 1_{G'(O)}.

    Returns
    -------
    dict
        sigma -> I^sigma_gamma, or the error message when sigma is not
        admissible for gamma.
    """
    f = GroupCosetFunction.unit(base) if f is None else f
    values = {}
    for sigma in sigmas:
        try:
            params = CayleyParams(base, tau, sigma)
            values[sigma] = group_pullback(f, gamma, params, xi, mu)[1]
        except ValueError as e:
            values[sigma] = str(e)
    computed = [v for v in values.values() if isinstance(v, LaurentRational)]
    if any(v != computed[0] for v in computed[1:]):
        warnings.warn('I^sigma_gamma depends on sigma for {}.'.format(gamma),
                      UserWarning)
    return values


def group_element_from_lie(Y, params):
    r"""gamma = (1, y) with alpha(gamma) = c_sigma(Y) and y in GL_2(O_E)."""
    x = cayley_to_group(Y, params)
    y = nu_witness(x, params.base)
    g1 = EtaleMatrix.identity(1, params.base.d)
    return g1, y
