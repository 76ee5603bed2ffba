from fractions import Fraction

import pandas as pd

from ..descent import descend, locate, iota
from ..descent.orbits import direct_sum, restrict_scalars
from ..invariants import delta, quotient_point
from ..linalg.matrix import det
from ..linalg.quotient_ring import QuotientRingElement
from ..orbital import mu_ratio
from ..utils import format_rational, sign_string
from ..utils import UnsupportedConfigurationError
from .hermitian import semisimple_orbits


#: Valuation of the last moment of the rs samples near a central factor.
SAMPLE_DEPTH = 8

EPSILON_KEYS = ('shift', 'half', 'eta_minus_one')


def hermitian_constants(V, eps=None):
    r"""(c_V^+, c_V^-) of a Hermitian space V over F_w.

    c_V^+ = prod_i eps(1 - i)^-1 . eta'(disc)^(n + 1) . eps(1/2)^(n(n+1)/2)
    . eta'(-1)^(n(n-1)/2) and c_V^- = c_V^+ eta'(disc), with
    eta' = eta o Nm_{F_w/F}.

    Parameters
    ----------
    V: HermitianClass
    eps: dict, optional
        Epsilon data 'shift' (the product of the eps(1 - i, eta'^i)),
        'half' (eps(1/2, eta')) and 'eta_minus_one' (eta'(-1)). None in
        the unramified configuration, where all three are 1.
        Default is None.

    Returns
    -------
    (c_plus, c_minus): (Fraction, Fraction)
    """
    n = V.dim
    disc = Fraction(V.eta_disc())
    if eps is None:
        shift = half = sign = Fraction(1)
    else:
        missing = [k for k in EPSILON_KEYS if k not in eps]
        if missing:
            raise UnsupportedConfigurationError(
                'Missing epsilon inputs {} for {}.'.format(missing, V)
            )
        shift, half, sign = (Fraction(eps[k]) for k in EPSILON_KEYS)
    c_plus = disc ** (n + 1) * half ** (n * (n + 1) // 2) * \
        sign ** (n * (n - 1) // 2) / shift
    return c_plus, c_plus * disc


def _rs_sample(factor, p, kind):
    r"""Regular semisimple element of gl~_m(F_i) near Z_alpha whose
    delta^+ and delta^- over F_i are units."""
    P, m, alpha = factor.P, factor.mult, factor.alpha
    zero = QuotientRingElement(P, 0)
    one = QuotientRingElement(P, 1)
    A = [[alpha if i == j else (one if j == i + 1 else zero)
          for j in range(m)] for i in range(m)]
    v = [one if i == m - 1 else zero for i in range(m)]
    u = [one * Fraction(p) ** SAMPLE_DEPTH if i == 0 else zero
         for i in range(m)]
    return restrict_scalars(A, v, u, P, kind)


def slice_signs(dd, X0, base, kind='power'):
    r"""The signs c^+ and c^- of the descent slice.

    They satisfy omega^+/-(iota(Y)) = c^+/- omega^+/-(Y) for Y regular
    semisimple near the slice point. The sample Y = (X0, Y_1, ..., Y_k)
    has omega^+/-(Y_i) = 1, so c^+/- = eta(delta^+/-(iota(Y)) delta^+/-(X0)).

    Returns
    -------
    (c_plus, c_minus): (Fraction, Fraction)
    """
    if dd.k == 0:
        return Fraction(1), Fraction(1)
    blocks = [_rs_sample(f, base.p, kind) for f in dd.factors]
    X = iota(X0, direct_sum(blocks))
    out = []
    for sign in ('+', '-'):
        value = delta(X, sign)
        if value == 0:
            raise ValueError('The slice sample {} is not regular '
                             'semisimple.'.format(X))
        out.append(base.eta(value, base) * base.eta(delta(X0, sign), base))
    return tuple(out)


class TransferConstants():
    r"""Constants of the singular transfer at a regular element X.

    Attributes
    ----------
    c_plus, c_minus: Fraction
        The signs of the descent slice.
    c_X: Fraction
        c^+ eta(g) omega^+(X0) for X = iota(X0, ...).g.
    components: list of dict
        One entry per semisimple orbit (V, o) over q(X), with the
        constant c_o^eps, c_{X,o} and, for a group element, c_{gamma,O}.
    """

    def __init__(self, c_plus, c_minus, c_X, epsilon, components):
        self.__c_plus = c_plus
        self.__c_minus = c_minus
        self.__c_X = c_X
        self.__epsilon = tuple(epsilon)
        self.__components = components

    @property
    def c_plus(self):
        return self.__c_plus

    @property
    def c_minus(self):
        return self.__c_minus

    @property
    def c_X(self):
        return self.__c_X

    @property
    def epsilon(self):
        return self.__epsilon

    @property
    def components(self):
        return list(self.__components)

    def c_X_o(self, V, tag=None):
        r"""c_{X,o} of the orbit tagged `tag` on V (the unique orbit on V
        when tag is None)."""
        found = [c for c in self.__components if c['V'] == V and
                 (tag is None or c['tag'] == tag)]
        if len(found) != 1:
            raise ValueError('{} orbits on {} match {}.'.format(
                len(found), V, tag))
        return found[0]['c_X_o']

    def ledger(self):
        r"""pandas DataFrame with one row per semisimple orbit."""
        rows = []
        for c in self.__components:
            rows.append({
                'V_disc': c['V'].disc_class,
                'components': ';'.join(
                    ','.join(str(h.disc_class) for h in classes)
                    for classes in c['tag'].h_flat[1:]
                ),
                'c_o': format_rational(c['c_o']),
                'c_X_o': format_rational(c['c_X_o']),
                'c_gamma_O': None if c.get('c_gamma_O') is None else
                format_rational(c['c_gamma_O'])
            })
        return pd.DataFrame(rows, columns=['V_disc', 'components', 'c_o',
                                           'c_X_o', 'c_gamma_O'])

    def to_json(self):
        return {
            'c_plus': format_rational(self.__c_plus),
            'c_minus': format_rational(self.__c_minus),
            'c_X': format_rational(self.__c_X),
            'epsilon': sign_string(self.__epsilon),
            'orbits': self.ledger().to_dict(orient='records')
        }


def transfer_constants(X, base, unramified=True, eps=None, gamma=None,
                       mu=None, kind='power'):
    r"""c_X, c_{X,o} (and c_{gamma,O}) at a regular element X.

    Parameters
    ----------
    X: TildeGlElement
        Regular element of gl~_n.
    base: BaseField
    unramified: bool, optional
        If True, every epsilon factor is 1 and `eps` must not be given.
        Default is True.
    eps: dict, optional
        Epsilon data of hermitian_constants, required when `unramified`
        is False.
        Default is None.
    gamma: (EtaleMatrix, EtaleMatrix), optional
        Group element with c_sigma^-1(alpha(gamma)) = X; adds the constants
        c_{gamma,O} = c_{X,o} mu(gamma_1^-1 gamma_2)^-1 (n = 1).
        Default is None.
    mu: UnramifiedCharacter or rational, optional
        Default is None (trivial).
    kind: str, optional
        Basis of the descent fields ('power' or 'dual').
        Default is 'power'.

    Returns
    -------
    TransferConstants
    """
    if unramified and eps is not None:
        raise ValueError('The unramified mode sets every epsilon factor to '
                         '1; drop `eps` or pass unramified=False.')
    if not unramified and eps is None:
        raise UnsupportedConfigurationError(
            'Missing epsilon inputs: the ramified mode needs explicit '
            '`eps` scalars.'
        )
    a = quotient_point(X)
    dd = descend(a)
    rep, g = locate(X, dd, kind)
    X0 = rep.provenance['X0']
    c_plus, c_minus = slice_signs(dd, X0, base, kind)
    c_X = c_plus * base.eta(det(g), base) * base.eta(delta(X0, '+'), base)
    mu_value = None if gamma is None else mu_ratio(gamma, mu, base)

    components = []
    for V, tag in semisimple_orbits(a, base, dd):
        c_o = Fraction(1)
        for classes, sign in zip(tag.h_flat[1:], rep.epsilon):
            for h in classes:
                c_o *= hermitian_constants(h, eps)[0 if sign > 0 else 1]
        entry = {'V': V, 'tag': tag, 'c_o': c_o, 'c_X_o': c_X * c_o}
        if mu_value is not None:
            entry['c_gamma_O'] = c_X * c_o * mu_value
        components.append(entry)
    return TransferConstants(c_plus, c_minus, c_X, rep.epsilon, components)
