
from ..padic import EtaleScalar
from ..utils import as_fraction
from .elements import TildeGlElement, GlNextElement, SElement, EtaleMatrix
from .invariants import delta


class CayleyParams():
    r"""Parameters (tau, sigma) of the Cayley transform.

    Parameters
    ----------
    base: BaseField
    tau: EtaleScalar, optional
        Purely imaginary (tau^c = -tau) and invertible.
        Default is j.
    sigma: EtaleScalar, optional
        Of norm one (sigma sigma^c = 1).
        Default is 1.
    """

    def __init__(self, base, tau=None, sigma=None):

        tau = base.j if tau is None else tau
        sigma = base.scalar(1) if sigma is None else sigma
        if not isinstance(tau, EtaleScalar):
            tau = base.scalar(tau)
        if not isinstance(sigma, EtaleScalar):
            sigma = base.scalar(sigma)
        if tau.d != base.d or sigma.d != base.d:
            raise ValueError('`tau` and `sigma` must lie in the etale '
                             'algebra of {}.'.format(base))
        if tau.conj() != -tau:
            raise ValueError('`tau` must satisfy tau^c = -tau, got {}.'
                             .format(tau))
        if tau.norm() == 0:
            raise ValueError('`tau` must be invertible, got {}.'.format(tau))
        if sigma.norm() != 1:
            raise ValueError('`sigma` must have norm one, got norm {}.'
                             .format(sigma.norm()))
        self.__base = base
        self.__tau = tau
        self.__sigma = sigma

    @property
    def base(self):
        return self.__base

    @property
    def tau(self):
        return self.__tau

    @property
    def sigma(self):
        return self.__sigma

    def is_integral_unit(self):
        r"""True when 2 tau sigma is a unit of O_E."""
        value = 2 * self.__tau * self.__sigma
        return self.__base.valuation(value.norm()) == 0

    def to_json(self):
        return {'tau': self.__tau.to_json(), 'sigma': self.__sigma.to_json()}

    @classmethod
    def from_json(cls, base, payload):
        payload = payload or {}
        tau = payload.get('tau')
        sigma = payload.get('sigma')
        return cls(
            base,
            None if tau is None else EtaleScalar.from_json(tau),
            None if sigma is None else EtaleScalar.from_json(sigma)
        )


def _as_gl_next(Y):
    if isinstance(Y, TildeGlElement):
        return GlNextElement.join(Y, 0)
    if isinstance(Y, GlNextElement):
        return Y
    raise TypeError('Wrong element type: {}. Should be: {}'.format(
        type(Y).__name__, 'GlNextElement or TildeGlElement'
    ))


def cayley_to_group(Y, params):
    r"""x = -sigma (1 + tau^-1 Y)(1 - tau^-1 Y)^-1 in S."""
    Y = _as_gl_next(Y)
    d = params.base.d
    one = EtaleMatrix.identity(Y.n + 1, d)
    tY = EtaleMatrix.from_rational(Y.matrix, d).scale(params.tau.inverse())
    M = one - tY
    if M.det().norm() == 0:
        raise ValueError('outside Cayley chart: 1 - tau^-1 Y is singular.')
    x = ((one + tY) @ M.inverse()).scale(-params.sigma)
    return SElement(x)


def cayley_to_lie(x, params):
    r"""Y = tau (x - sigma)^-1 (x + sigma) in gl_{n+1}."""
    if not isinstance(x, SElement):
        raise TypeError('Wrong element type: {}. Should be: SElement'.format(
            type(x).__name__
        ))
    d = params.base.d
    sig = EtaleMatrix.identity(x.n + 1, d).scale(params.sigma)
    M = x.x - sig
    if M.det().norm() == 0:
        raise ValueError('outside Cayley chart: x - sigma is singular.')
    Y = (M.inverse() @ (x.x + sig)).scale(params.tau)
    if not Y.is_rational():
        raise ValueError('The Cayley preimage is not F-rational: {} is not '
                         'in S.'.format(x))
    return GlNextElement(Y.rational_part())


def cayley(Y, params, direction='to_group'):
    r"""Cayley transform in either direction.

    Parameters
    ----------
    Y: GlNextElement, TildeGlElement or SElement
    params: CayleyParams
    direction: str
        'to_group' (gl_{n+1} -> S) or 'to_lie' (S -> gl_{n+1}).
    """
    if direction == 'to_group':
        return cayley_to_group(Y, params)
    if direction == 'to_lie':
        return cayley_to_lie(Y, params)
    raise ValueError('Invalid `direction` {!r}. Should be to_group or '
                     'to_lie.'.format(direction))


def cayley_identity(Y, params, sign='+'):
    r"""Both sides of the determinant identity of the Cayley map.

    Returns
    -------
    (lhs, rhs): (EtaleScalar, EtaleScalar)
        lhs = Delta^+/-(c(Y)) and
        rhs = (-2 sigma tau^-1)^(n(n+1)/2) det(1 - tau^-1 Y)^-n delta^+/-(Y).
    """
    Y = _as_gl_next(Y)
    n = Y.n
    d = params.base.d
    x = cayley_to_group(Y, params)
    lhs = delta(x, sign)
    one = EtaleMatrix.identity(n + 1, d)
    tY = EtaleMatrix.from_rational(Y.matrix, d).scale(params.tau.inverse())
    D = (one - tY).det()
    factor = (-2 * params.sigma * params.tau.inverse()) ** (n * (n + 1) // 2)
    rhs = factor * D ** (-n) * as_fraction(delta(Y, sign))
    if not isinstance(lhs, EtaleScalar):
        lhs = params.base.scalar(lhs)
    if not isinstance(rhs, EtaleScalar):
        rhs = params.base.scalar(rhs)
    return lhs, rhs
