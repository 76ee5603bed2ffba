import collections
import functools

from fractions import Fraction
from sympy.functions.combinatorial.numbers import legendre_symbol
from sympy.ntheory import sqrt_mod

from ..invariants import EtaleMatrix, QuotientPoint, TildeGlElement
from ..invariants import quotient_point
from ..orbital import LatticeCosetFunction, CosetTerm, orbital_rs
from ..orbital import self_dual_scale
from ..padic import BaseField, EtaleScalar
from ..utils import as_fraction, format_rational, DeskScaleError
from .hermitian import HermitianClass, matching_disc


#: Largest number of residue pairs (x, y) mod p^J enumerated on a sphere.
MAX_SPHERE_CLASSES = 5 ** 8


class UTildeElement():
    r"""Element X^V = (A, v) of u^V x V.

    Parameters
    ----------
    A: EtaleMatrix or list of rows
        Self-adjoint for the Hermitian form h(x, y) = sum_i h_i x_i^c y_i.
    v: list
        Vector of V (EtaleScalars or rationals).
    gram: list of rationals
        Diagonal Gram matrix (h_1, ..., h_n).
    base: BaseField

    Raises
    ------
    ValueError
        If A is not self-adjoint.
    """

    def __init__(self, A, v, gram, base):

        if not isinstance(base, BaseField):
            raise TypeError('Wrong base type: {}. Should be: BaseField'
                            .format(type(base).__name__))
        d = base.d
        if not isinstance(A, EtaleMatrix):
            A = EtaleMatrix(A, d)
        gram = [as_fraction(h) for h in gram]
        v = [e if isinstance(e, EtaleScalar) else EtaleScalar(e, 0, d)
             for e in v]
        n = A.size
        if len(v) != n or len(gram) != n:
            raise ValueError(
                'Inconsistent dimensions: A is {0}x{0}, v has {1} entries '
                'and the Gram matrix {2}.'.format(n, len(v), len(gram))
            )
        if any(h == 0 for h in gram):
            raise ValueError('The Gram matrix must be nondegenerate.')
        rows = A.rows
        for i in range(n):
            for j in range(n):
                if rows[j][i].conj() * gram[j] != rows[i][j] * gram[i]:
                    raise ValueError('`A` is not self-adjoint for the Gram '
                                     'matrix {}.'.format(gram))
        self.__A = A
        self.__v = v
        self.__gram = gram
        self.__base = base

    @classmethod
    def central(cls, n, lam, gram, base):
        r"""The semisimple element Z_lam = (lam.id, 0)."""
        lam = as_fraction(lam)
        A = [[lam if i == j else 0 for j in range(n)] for i in range(n)]
        return cls(A, [0] * n, gram, base)

    @property
    def n(self):
        return self.__A.size

    @property
    def A(self):
        return self.__A

    @property
    def v(self):
        return list(self.__v)

    @property
    def gram(self):
        return list(self.__gram)

    @property
    def base(self):
        return self.__base

    @property
    def h0(self):
        r"""Gram entry of a Hermitian line."""
        if self.n != 1:
            raise ValueError('h0 is only defined for n=1.')
        return self.__gram[0]

    def hermitian(self, x, y):
        r"""h(x, y) = sum_i h_i x_i^c y_i."""
        return sum((h * a.conj() * b for h, a, b in zip(self.__gram, x, y)),
                   EtaleScalar(0, 0, self.__base.d))

    def moments(self):
        r"""The invariants h(v, A^i v), i < n (rational)."""
        out = []
        w = list(self.__v)
        for _ in range(self.n):
            m = self.hermitian(self.__v, w)
            if not m.is_rational():
                raise ValueError('Non-rational moment {}.'.format(m))
            out.append(m.a)
            w = self.__A.matvec(w)
        return out

    def char_coeffs(self):
        r"""Characteristic polynomial of A, constant term first, from the
        Newton identities on Tr(A^k)."""
        n = self.n
        power = EtaleMatrix.identity(n, self.__base.d)
        traces = []
        for _ in range(n):
            power = power @ self.__A
            tr = sum((power.rows[i][i] for i in range(n)),
                     EtaleScalar(0, 0, self.__base.d))
            if not tr.is_rational():
                raise ValueError('Non-rational trace {}.'.format(tr))
            traces.append(tr.a)
        e = [Fraction(1)]
        for k in range(1, n + 1):
            e.append(sum(((-1) ** (i - 1) * e[k - i] * traces[i - 1]
                          for i in range(1, k + 1)), Fraction(0)) / k)
        return [(-1) ** (n - j) * e[n - j] for j in range(n)]

    def quotient_point(self):
        return QuotientPoint(self.char_coeffs(), self.moments())

    def is_regular_semisimple(self):
        return self.quotient_point().is_regular_semisimple()

    def coordinates(self):
        r"""Flat u~ coordinates (a, x, y) with w = x + yj (n = 1)."""
        if self.n != 1:
            raise ValueError('Flat coordinates are only modelled for n=1.')
        w = self.__v[0]
        return [self.__A.rows[0][0].a, w.a, w.b]

    def __eq__(self, other):
        return (isinstance(other, UTildeElement) and
                self.__A == other.A and self.__v == other.v and
                self.__gram == other.gram and self.__base == other.base)

    def __hash__(self):
        return hash((self.__A, tuple(self.__v), tuple(self.__gram)))

    def __repr__(self):
        return 'UTildeElement(A={}, v={}, gram={})'.format(
            self.__A.to_json(), [e.to_json() for e in self.__v],
            [format_rational(h) for h in self.__gram]
        )

    def to_json(self):
        return {'A': self.__A.to_json(),
                'v': [e.to_json() for e in self.__v],
                'gram': [format_rational(h) for h in self.__gram],
                'base': self.__base.to_json()}

    @classmethod
    def from_json(cls, payload, base=None):
        base = BaseField.from_json(payload['base']) if base is None else base
        A = [[EtaleScalar.from_json(e) for e in row] for row in payload['A']]
        v = [EtaleScalar.from_json(e) for e in payload['v']]
        return cls(A, v, payload['gram'], base)


def unitary_indicator(base, disc_class=0, depth=0, center=None, weight=1):
    r"""weight . 1_{center + p^depth (O x O_E)} on u~ of the Hermitian line
    of class disc_class (Gram entry p^disc_class)."""
    return LatticeCosetFunction.indicator(
        'u~', 1, base, depth, center, weight, h0=base.p ** disc_class
    )


def unitary_zero(base, disc_class=0):
    r"""The zero function on u~ of the Hermitian line of class disc_class."""
    return LatticeCosetFunction('u~', 1, base, [], h0=base.p ** disc_class)


def _approximate_norm(u0, base, precision):
    # Hensel: x^2 = u0 + d y^2 modulo p^precision with y a fixed residue
    p, d = base.p, base.d
    modulus = p ** precision
    for y in range(p):
        c = base.residue(u0 + d * y * y, precision)
        if c % p and legendre_symbol(c % p, p) == 1:
            x = sqrt_mod(c, modulus)
            return EtaleScalar(x, y, d)
    raise ValueError('No approximate norm preimage of {}.'.format(u0))


def match_element(X, base, precision=6):
    r"""Matching orbit on the unitary side of a regular semisimple X, n = 1.

    Parameters
    ----------
    X: TildeGlElement
        Regular semisimple, n = 1.
    base: BaseField
    precision: int, optional
        Inert case: Nm w agrees with its target to p-adic precision
        v(uv) + precision (a rational norm preimage need not exist).
        Default is 6.

    Returns
    -------
    (HermitianClass, UTildeElement)
    """
    if X.n != 1:
        raise DeskScaleError('desk-scale limit: matching is explicit for n=1, '
                             'got n={}.'.format(X.n))
    bit = matching_disc(X, base)
    m = X.u[0] * X.v[0]
    a = X.A[0][0]
    V = HermitianClass(1, bit, split=not base.inert)
    h0 = Fraction(base.p) ** bit
    if not base.inert:
        return V, UTildeElement([[a]], [base.from_components(1, m)], [h0],
                                base)
    N0 = m / h0
    e = base.valuation(N0) // 2
    u0 = N0 / Fraction(base.p) ** (2 * e)
    w = _approximate_norm(u0, base, int(precision)) * \
        Fraction(base.p) ** e
    return V, UTildeElement([[a]], [w], [h0], base)


@functools.lru_cache(maxsize=None)
def norm_classes(p, d, J):
    r"""Pairs (x, y) mod p^J grouped by the residue of x^2 - d y^2."""
    modulus = p ** J
    if modulus * modulus > MAX_SPHERE_CLASSES:
        raise DeskScaleError(
            'desk-scale limit: the sphere sum modulo {}^{} needs {} classes.'
            .format(p, J, modulus * modulus)
        )
    out = collections.defaultdict(list)
    for x in range(modulus):
        for y in range(modulus):
            out[(x * x - d * y * y) % modulus].append((x, y))
    return {k: tuple(v) for k, v in out.items()}


UnitaryOrbital = collections.namedtuple(
    'UnitaryOrbital', ['value', 'raw', 'volume', 'depth']
)
UnitaryOrbital.__doc__ = r"""Orbital integral on u~ at n = 1.

value = raw / volume; raw is the congruence sum p^-J sum phi over the
residues of the sphere modulo p^J and volume its number of classes times
p^-J."""


def _orbit_invariants(XV):
    if isinstance(XV, UTildeElement):
        if XV.n != 1:
            raise DeskScaleError('desk-scale limit: unitary orbital integrals '
                                 'are computed for n=1, got n={}.'
                                 .format(XV.n))
        return XV.coordinates()[0], XV.moments()[0], XV.h0
    if isinstance(XV, TildeGlElement):
        if XV.n != 1:
            raise DeskScaleError('desk-scale limit: unitary orbital integrals '
                                 'are computed for n=1, got n={}.'
                                 .format(XV.n))
        return XV.A[0][0], XV.u[0] * XV.v[0], None
    a, m = XV
    return as_fraction(a), as_fraction(m), None


def _xy_depth(phiV):
    r"""Congruence depth in (x, y) beyond which phi^V is constant, phases
    included."""
    _, weights = phiV.pairing_layout()
    depth = 0
    for t in phiV.terms:
        depth = max(depth, t.depth[1], t.depth[2])
        if t.phase is None:
            continue
        for i in (1, 2):
            if t.phase[i] != 0:
                depth = max(depth,
                            -phiV.base.valuation(weights[i] * t.phase[i]))
    return depth


def _sphere(phiV, a, N0, base, J):
    p = base.p
    e = base.valuation(N0) // 2
    u0 = N0 / Fraction(p) ** (2 * e)
    scale = Fraction(p) ** e
    classes = norm_classes(p, base.d, J).get(base.residue(u0, J), ())
    total = sum((phiV((a, x * scale, y * scale)) for x, y in classes),
                Fraction(0))
    step = Fraction(1, p ** J)
    return UnitaryOrbital(total / len(classes), total * step,
                          len(classes) * step, J)


def _split_transport(phiV):
    r"""phi on gl~_1 with phi(a, x + y, x - y) = phi^V(a, x, y)."""
    terms = []
    for t in phiV.terms:
        if t.phase is not None:
            raise ValueError('The split transport needs a phase-free '
                             'function.')
        if t.depth[1] != t.depth[2]:
            raise ValueError('The split transport needs equal depths on x '
                             'and y, got {}.'.format(t.depth))
        ca, cx, cy = t.center
        terms.append(CosetTerm(t.weight, (ca, cx + cy, cx - cy), t.depth,
                               None))
    return LatticeCosetFunction('gl~', 1, phiV.base, terms)


def unitary_orbital_n1(XV, phiV, details=False):
    r"""Orbital integral J_{X^V}(phi^V) over the norm-one torus, n = 1.

    The orbit of (a, w) is {(a, hw) : Nm h = 1}. In the inert case it is
    the sphere Nm w' = Nm w, an E^1-torsor of total mass 1; its residues
    modulo p^J are exactly the solutions of the norm congruence, each
    with the same mass, so the integral is an exact average. The sum is
    computed at the first three admissible depths and must not move. In
    the split case E^1 = F^x and the integral is the closed-orbit
    integral of the transported function on gl~_1 at trivial character.

    Parameters
    ----------
    XV: UTildeElement, TildeGlElement or (a, m)
        The orbit, named by an element of u~, by the rs element of gl~_1
        it matches (invariants (a, uv)) or by its invariants (a, h(w, w)).
    phiV: LatticeCosetFunction
        Function on u~ whose Gram entry fixes V.
    details: bool, optional
        If True, return the UnitaryOrbital record with the raw congruence
        sum and the sphere volume.
        Default is False.

    Returns
    -------
    Fraction or UnitaryOrbital
        On a central orbit (m = 0) the value is phi^V(a, 0).
    """
    if not isinstance(phiV, LatticeCosetFunction) or phiV.ambient != 'u~':
        raise TypeError('Wrong function type: {}. Should be: {}'.format(
            type(phiV).__name__, 'LatticeCosetFunction on u~'
        ))
    base = phiV.base
    a, m, h0 = _orbit_invariants(XV)
    if h0 is not None and h0 != phiV.h0:
        raise ValueError('Element on the line of Gram entry {} for a '
                         'function on the line of Gram entry {}.'.format(
                             format_rational(h0), format_rational(phiV.h0)))
    N0 = m / phiV.h0

    def done(value, raw=None, volume=Fraction(1), depth=0):
        raw = value if raw is None else raw
        out = UnitaryOrbital(value, raw, volume, depth)
        return out if details else out.value

    if N0 == 0:
        return done(phiV((a, 0, 0)))
    if not base.inert:
        phi = _split_transport(phiV)
        X = TildeGlElement([[a]], [1], [N0])
        return done(orbital_rs(X, phi, 1).evaluate(1))
    v = base.valuation(N0)
    if v % 2:
        return done(Fraction(0))
    J0 = max(1, _xy_depth(phiV) - v // 2)
    runs = [_sphere(phiV, a, N0, base, J) for J in range(J0, J0 + 3)]
    if any(r.value != runs[0].value for r in runs[1:]):
        raise ValueError(
            'The congruence sums at depths {} do not stabilize: {}.'.format(
                list(range(J0, J0 + 3)),
                [format_rational(r.value) for r in runs]
            )
        )
    out = runs[0]
    return out if details else out.value


def transfer_factor(X, base, sign='+'):
    r"""omega^+/-(X) = eta(delta^+/-(X)) at n = 1, where delta^+ = v and
    delta^- = u."""
    if X.n != 1:
        raise DeskScaleError('desk-scale limit: transfer factors are '
                             'evaluated for n=1 here, got n={}.'.format(X.n))
    value = X.v[0] if sign in ('+', 1) else X.u[0]
    if value == 0:
        raise ValueError('omega is undefined: delta({}) = 0.'.format(X))
    return base.eta(value, base)


def measure_ratio(base, d0, j):
    r"""Volumes of the matched congruence sets uv = d0 and h(w, w) = d0
    modulo p^j, each divided by the image volume p^-j times the orbital
    volume of the fibre.

    The ratio of the two constants is L(1, eta) / zeta(1): (p - 1)/(p + 1)
    for inert E and 1 for split E.

    Parameters
    ----------
    base: BaseField
    d0: rational
        Nonzero p-integral invariant.
    j: int
        Congruence depth, j > v(d0).

    Returns
    -------
    dict
        Keys 'gl', 'u', 'ratio' and 'expected'.
    """
    d0 = as_fraction(d0)
    p = base.p
    v = base.valuation(d0)
    if d0 == 0 or v < 0 or v >= j:
        raise ValueError('`d0` must be integral, nonzero and of valuation '
                         'below `j`, got d0={} and j={}.'.format(
                             format_rational(d0), j))
    modulus = p ** j
    target = base.residue(d0, j)
    step = Fraction(1, modulus)

    gl_count = sum(1 for v_ in range(modulus) for u_ in range(modulus)
                   if (u_ * v_ - target) % modulus == 0)
    lattice = LatticeCosetFunction.unit_lattice(1, base)
    trivial = base.eta.value_at_p
    I = orbital_rs(TildeGlElement([[0]], [1], [d0]), lattice,
                   trivial).evaluate(1)
    gl_const = gl_count * step * step / (step * I)

    bit = v % 2 if base.inert else 0
    phiV = unitary_indicator(base, bit)
    h0 = phiV.h0
    u_count = sum(len(pairs) for r, pairs in norm_classes(p, base.d,
                                                          j).items()
                  if (h0 * r - target) % modulus == 0)
    Ju = unitary_orbital_n1((0, d0), phiV)
    u_const = u_count * step * step * \
        Fraction(p) ** (-self_dual_scale(phiV)) / (step * Ju)

    expected = Fraction(p - 1, p + 1) if base.inert else Fraction(1)
    return {'gl': gl_const, 'u': u_const, 'ratio': gl_const / u_const,
            'expected': expected}
