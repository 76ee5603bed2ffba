import collections

from fractions import Fraction

from ..padic import BaseField
from ..utils import as_fraction, format_rational


AMBIENTS = ('gl~', 'gl_next', 'F^n', 'u~')

CosetTerm = collections.namedtuple(
    'CosetTerm', ['weight', 'center', 'depth', 'phase']
)
CosetTerm.__doc__ = r"""weight . psi(<phase, .>) . 1_{center + box(depth)}.

The box is the product of the p^depth[i] O over the coordinates; phase is
None for a phase-free term."""


def ambient_dimension(ambient, n):
    if ambient == 'gl~':
        return n * n + 2 * n
    if ambient == 'gl_next':
        return (n + 1) * (n + 1)
    if ambient == 'F^n':
        return n
    if ambient == 'u~':
        if n != 1:
            raise ValueError('The u~ ambient is only modelled for n=1.')
        return 3
    raise ValueError('Unknown ambient `{}`. Should be one of {}.'.format(
        ambient, ', '.join(AMBIENTS)
    ))


def element_coordinates(X):
    r"""Flat rational coordinates of an element (or of a coordinate list)."""
    if hasattr(X, 'coordinates'):
        return [as_fraction(e) for e in X.coordinates()]
    if hasattr(X, 'matrix'):
        return [as_fraction(e) for row in X.matrix for e in row]
    return [as_fraction(e) for e in X]


class LatticeCosetFunction():
    r"""Finite combination of (phase-decorated) indicators of boxes.

    Parameters
    ----------
    ambient: str
        One of 'gl~' (gl~_n), 'gl_next' (gl_{n+1}), 'F^n' and 'u~' (the
        unitary space of size 1).
    n: int
        Size parameter of the ambient space.
    base: BaseField
    terms: list of CosetTerm, optional
        Default is the zero function.
    h0: rational, optional
        Gram entry of the Hermitian line (u~ only).
        Default is 1.

    Notes
    -----
    Coordinates follow the flat layouts of the elements: A row by row,
    then v, then u for gl~_n; rows for gl_{n+1}; (a, x, y) for u~ where
    w = x + yj.
    """

    def __init__(self, ambient, n, base, terms=None, h0=1):

        if not isinstance(base, BaseField):
            raise TypeError('Wrong base type: {}. Should be: BaseField'
                            .format(type(base).__name__))
        self.__ambient = ambient
        self.__n = int(n)
        self.__dim = ambient_dimension(ambient, self.__n)
        self.__base = base
        self.__h0 = as_fraction(h0)
        if self.__h0 == 0:
            raise ValueError('The Gram entry `h0` must be nonzero.')
        self.__terms = [self._check_term(t) for t in (terms or [])]

    def _check_term(self, term):
        if not isinstance(term, CosetTerm):
            term = CosetTerm(*term)
        depth = term.depth
        if isinstance(depth, int):
            depth = (depth,) * self.__dim
        center = term.center
        if center is None:
            center = (Fraction(0),) * self.__dim
        center = tuple(element_coordinates(center))
        depth = tuple(int(m) for m in depth)
        phase = term.phase
        if phase is not None:
            phase = tuple(element_coordinates(phase))
            if all(a == 0 for a in phase):
                phase = None
        for name, vec in (('center', center), ('depth', depth),
                          ('phase', phase or center)):
            if len(vec) != self.__dim:
                raise ValueError(
                    'Term `{}` has {} coordinates, the ambient {} of size {} '
                    'has {}.'.format(name, len(vec), self.__ambient, self.__n,
                                     self.__dim)
                )
        return CosetTerm(as_fraction(term.weight), center, depth, phase)

    @classmethod
    def indicator(cls, ambient, n, base, depth=0, center=None, weight=1,
                  h0=1):
        r"""weight . 1_{center + p^depth Lambda_0}."""
        return cls(ambient, n, base,
                   [CosetTerm(weight, center, depth, None)], h0)

    @classmethod
    def unit_lattice(cls, n, base):
        r"""The indicator of the standard lattice of gl~_n."""
        return cls.indicator('gl~', n, base)

    @property
    def ambient(self):
        return self.__ambient

    @property
    def n(self):
        return self.__n

    @property
    def dim(self):
        return self.__dim

    @property
    def base(self):
        return self.__base

    @property
    def h0(self):
        return self.__h0

    @property
    def terms(self):
        return list(self.__terms)

    def _like(self, terms):
        return LatticeCosetFunction(self.__ambient, self.__n, self.__base,
                                    terms, self.__h0)

    def _check_compatible(self, other):
        if not isinstance(other, LatticeCosetFunction):
            raise TypeError('Wrong function type: {}. Should be: {}'.format(
                type(other).__name__, 'LatticeCosetFunction'
            ))
        if (other.ambient, other.n, other.base, other.h0) != \
                (self.__ambient, self.__n, self.__base, self.__h0):
            raise ValueError('Cannot combine functions on different ambient '
                             'spaces.')

    def __add__(self, other):
        self._check_compatible(other)
        return self._like(self.__terms + other.terms).canonicalize()

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = as_fraction(c)
        return self._like([t._replace(weight=c * t.weight)
                           for t in self.__terms])

    def __mul__(self, c):
        return self.scale(c)

    __rmul__ = __mul__

    # Structure of the ambient pairing

    def pairing_layout(self):
        r"""(perm, weights) with <X, Y> = sum_i w_i X_i Y_perm(i)."""
        n, dim = self.__n, self.__dim
        if self.__ambient == 'gl~':
            perm = [j * n + i for i in range(n) for j in range(n)]
            perm += [n * n + n + i for i in range(n)]
            perm += [n * n + i for i in range(n)]
            return perm, [Fraction(1)] * dim
        if self.__ambient == 'gl_next':
            m = n + 1
            return ([j * m + i for i in range(m) for j in range(m)],
                    [Fraction(1)] * dim)
        if self.__ambient == 'F^n':
            return list(range(dim)), [Fraction(1)] * dim
        d = self.__base.d
        return [0, 1, 2], [Fraction(1), 2 * self.__h0, -2 * d * self.__h0]

    def pair(self, X, Y):
        perm, weights = self.pairing_layout()
        return sum((w * X[i] * Y[perm[i]] for i, w in enumerate(weights)),
                   Fraction(0))

    # Evaluation

    def _in_box(self, coords, center, depth):
        val = self.__base.valuation
        return all(val(x - c) >= m for x, c, m in zip(coords, center, depth))

    def evaluate(self, X):
        r"""Exact value at a point.

        Raises
        ------
        ValueError
            If a phase takes a non-rational value at X.
        """
        coords = element_coordinates(X)
        if len(coords) != self.__dim:
            raise ValueError('Point with {} coordinates for an ambient of '
                             'dimension {}.'.format(len(coords), self.__dim))
        out = Fraction(0)
        for t in self.__terms:
            if not self._in_box(coords, t.center, t.depth):
                continue
            if t.phase is not None:
                phase_value = self.pair(t.phase, coords)
                if not self.__base.is_integral(phase_value):
                    raise ValueError(
                        'Non-rational additive phase: psi({}) at {}.'.format(
                            format_rational(phase_value), coords
                        )
                    )
            out += t.weight
        return out

    __call__ = evaluate

    # Structural operations

    def canonicalize(self):
        r"""Merge identical cosets and drop vanishing terms.

        Centers are replaced by their canonical representatives modulo
        the box.
        """
        p = self.__base.p
        merged = collections.OrderedDict()
        for t in self.__terms:
            center = tuple(
                Fraction(p) ** m * self.__base.fractional_part(
                    c / Fraction(p) ** m
                )
                for c, m in zip(t.center, t.depth)
            )
            key = (center, t.depth, t.phase)
            merged[key] = merged.get(key, Fraction(0)) + t.weight
        terms = [CosetTerm(w, c, m, a) for (c, m, a), w in merged.items()
                 if w != 0]
        terms.sort(key=lambda t: (t.depth, t.center, t.phase or ()))
        return self._like(terms)

    def is_zero(self):
        return not self.canonicalize().terms

    def is_phase_free(self):
        return all(t.phase is None for t in self.__terms)

    def is_uniform(self):
        r"""True when every term is a translate of some p^m Lambda_0."""
        return all(len(set(t.depth)) <= 1 for t in self.__terms)

    def support_bound(self):
        r"""Smallest M >= 0 with support contained in p^-M Lambda_0."""
        M = 0
        for t in self.__terms:
            for c, m in zip(t.center, t.depth):
                v = self.__base.valuation(c)
                M = max(M, -min(v, m))
        return M

    def max_depth(self):
        return max((max(t.depth) for t in self.__terms), default=0)

    def _permute(self, perm):
        out = []
        for t in self.__terms:
            out.append(CosetTerm(
                t.weight,
                tuple(t.center[perm[i]] for i in range(self.__dim)),
                tuple(t.depth[perm[i]] for i in range(self.__dim)),
                None if t.phase is None else
                tuple(t.phase[perm[i]] for i in range(self.__dim))
            ))
        return self._like(out)

    def pullback_theta(self):
        r"""phi o theta with theta(A, v, u) = (A^t, u^t, v^t)."""
        if self.__ambient != 'gl~':
            raise ValueError('theta is only defined on gl~_n.')
        perm, _ = self.pairing_layout()
        return self._permute(perm)

    def translate(self, lam):
        r"""X -> phi(X + (lam.id, 0, 0)) on gl~_n."""
        if self.__ambient != 'gl~':
            raise ValueError('Central translation is only defined on gl~_n.')
        lam = as_fraction(lam)
        n = self.__n
        diagonal = [i * n + i for i in range(n)]
        out = []
        for t in self.__terms:
            center = list(t.center)
            for i in diagonal:
                center[i] -= lam
            if t.phase is not None:
                shift = lam * sum((t.phase[i] for i in diagonal),
                                  Fraction(0))
                if not self.__base.is_integral(shift):
                    raise ValueError(
                        'Non-rational additive phase: translating by {} '
                        'multiplies a term by psi({}).'.format(
                            format_rational(lam), format_rational(shift)
                        )
                    )
            out.append(t._replace(center=tuple(center)))
        return self._like(out)

    def __eq__(self, other):
        if not isinstance(other, LatticeCosetFunction):
            return NotImplemented
        try:
            diff = self - other
        except ValueError:
            return False
        return diff.is_zero()

    def __hash__(self):
        return hash(str(self.to_json()))

    def __repr__(self):
        return 'LatticeCosetFunction({}, n={}, {} terms)'.format(
            self.__ambient, self.__n, len(self.__terms)
        )

    def to_json(self):
        payload = {
            'ambient': self.__ambient,
            'n': self.__n,
            'base': self.__base.to_json(),
            'terms': [{
                'weight': format_rational(t.weight),
                'center': [format_rational(c) for c in t.center],
                'depth': list(t.depth),
                'phase': None if t.phase is None else
                [format_rational(a) for a in t.phase]
            } for t in self.__terms]
        }
        if self.__ambient == 'u~':
            payload['h0'] = format_rational(self.__h0)
        return payload

    @classmethod
    def from_json(cls, payload, base=None):
        for key in ('ambient', 'n', 'terms'):
            if key not in payload:
                raise KeyError('Missing field `{}` in function payload.'
                               .format(key))
        if base is None:
            base = BaseField.from_json(payload['base'])
        terms = []
        for t in payload['terms']:
            terms.append(CosetTerm(
                t.get('weight', 1), t.get('center'), t.get('depth', 0),
                t.get('phase')
            ))
        return cls(payload['ambient'], payload['n'], base, terms,
                   payload.get('h0', 1))
