import collections
import itertools

import pandas as pd

from ..descent import descend
from ..descent.orbits import realize_rs
from ..invariants import quotient_point
from ..lfactors import local_degrees


class HermitianClass():
    r"""Isometry class of a Hermitian space over E_w = E (x) F_w.

    Parameters
    ----------
    dim: int
    disc_class: int
        0 when the discriminant is a norm from E_w, 1 otherwise.
    degree: int, optional
        Residue degree f of the unramified field F_w over Q_p.
        Default is 1.
    field: str, optional
        Descriptor of F_w (the defining polynomial of the global factor).
        Default is 'Q'.
    split: bool, optional
        True when E_w = F_w x F_w (only the class 0 exists).
        Default is False.
    """

    def __init__(self, dim, disc_class=0, degree=1, field='Q', split=False):

        if int(dim) < 0:
            raise ValueError('`dim` must be nonnegative.')
        if disc_class not in (0, 1):
            raise ValueError('`disc_class` must be 0 or 1, got {}.'
                             .format(disc_class))
        if split and disc_class:
            raise ValueError('A split Hermitian space has norm discriminant.')
        self.__dim = int(dim)
        self.__disc_class = int(disc_class)
        self.__degree = int(degree)
        self.__field = field
        self.__split = bool(split)

    @property
    def dim(self):
        return self.__dim

    @property
    def disc_class(self):
        return self.__disc_class

    @property
    def degree(self):
        return self.__degree

    @property
    def field(self):
        return self.__field

    @property
    def split(self):
        return self.__split

    def eta_disc(self):
        r"""eta'(disc) with eta' = eta o Nm_{F_w/F}."""
        return -1 if self.__disc_class else 1

    def base_disc_class(self):
        r"""Norm class over F of the discriminant of the restriction of
        scalars: Nm_{F_w/F}(p) = p^f."""
        return (self.__disc_class * self.__degree) % 2

    def gram(self, p):
        r"""Diagonal Gram representative diag(1, ..., 1, p^disc_class)."""
        if self.__dim == 0:
            return []
        return [1] * (self.__dim - 1) + [p ** self.__disc_class]

    def __eq__(self, other):
        return isinstance(other, HermitianClass) and \
            self.to_json() == other.to_json()

    def __hash__(self):
        return hash(tuple(sorted(self.to_json().items())))

    def __repr__(self):
        return 'HermitianClass(dim={}, disc={}, f={}, field={})'.format(
            self.__dim, 'non-norm' if self.__disc_class else 'norm',
            self.__degree, self.__field
        )

    def to_json(self):
        return {'dim': self.__dim, 'disc_class': self.__disc_class,
                'degree': self.__degree, 'field': self.__field,
                'split': self.__split}


def hermitian_classes(base, dim, degree=1, field='Q'):
    r"""Isometry classes of Hermitian spaces of dimension dim.

    E (x) F_w splits when E is split or when E is inert and f is even;
    then there is a single class. Otherwise the two classes are told apart
    by the parity of v(disc).
    """
    split = (not base.inert) or degree % 2 == 0
    if split:
        return [HermitianClass(dim, 0, degree, field, split=True)]
    return [HermitianClass(dim, b, degree, field) for b in (0, 1)]


def matching_disc(X, base):
    r"""Norm class of d_n(X): the discriminant class of the unique V whose
    rs orbit matches X.

    Returns
    -------
    int
        0 (norm) or 1 (non-norm).
    """
    a = quotient_point(X)
    if not a.is_regular_semisimple():
        raise ValueError('matching_disc needs a regular semisimple element; '
                         'd_n({}) = 0.'.format(X))
    if not base.inert or X.n == 0:
        return 0
    return base.valuation(a.d_values[-1]) % 2


SemisimpleOrbitTag = collections.namedtuple(
    'SemisimpleOrbitTag', ['h_flat', 'assembled_V']
)
SemisimpleOrbitTag.__doc__ = r"""Tuple (h_0, h_1, ...) of Hermitian classes
along the descent slice, with the class of their orthogonal sum.

h_0 is the class matched by the rs part; each later entry is a tuple of
classes, one per local component of the factor."""


def _factor_classes(factor, base):
    name = str(factor.P.as_expr())
    per_component = [hermitian_classes(base, factor.mult, f, name)
                     for f in local_degrees(factor.P, base.p)]
    return [tuple(c) for c in itertools.product(*per_component)]


def semisimple_orbits(a, base, dd=None):
    r"""Semisimple orbits in the fibres of the unitary sides over a.

    Parameters
    ----------
    a: QuotientPoint
    base: BaseField
    dd: DescentData, optional

    Returns
    -------
    list of (HermitianClass, SemisimpleOrbitTag)
        One entry per tuple (h_i) with h_0 fixed by the rs part.
    """
    dd = descend(a) if dd is None else dd
    n = a.n
    h0_bit = matching_disc(realize_rs(dd.a0), base) if dd.r > 0 else 0
    h0 = HermitianClass(dd.r, h0_bit, split=not base.inert)
    choices = [_factor_classes(f, base) for f in dd.factors]
    out = []
    for tup in itertools.product(*choices):
        bit = h0_bit
        for classes in tup:
            for c in classes:
                bit += c.base_disc_class()
        V = HermitianClass(n, bit % 2 if base.inert else 0,
                           split=not base.inert)
        out.append((V, SemisimpleOrbitTag((h0,) + tuple(tup), V)))
    return out


def orbit_ledger(orbits):
    r"""pandas DataFrame with one row per semisimple orbit."""
    rows = []
    for V, tag in orbits:
        rows.append({
            'V_disc': 'non-norm' if V.disc_class else 'norm',
            'h0_disc': tag.h_flat[0].disc_class,
            'components': ';'.join(
                ','.join(str(c.disc_class) for c in classes)
                for classes in tag.h_flat[1:]
            )
        })
    return pd.DataFrame(rows, columns=['V_disc', 'h0_disc', 'components'])
