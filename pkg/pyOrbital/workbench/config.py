import json
import os

from ..invariants import CayleyParams
from ..padic import BaseField, UnramifiedCharacter
from ..utils import format_rational, UnsupportedConfigurationError


#: Environment variable overriding the directory of verification reports.
RESULTS_ENV = 'PYORBITAL_RESULTS_DIR'

DEFAULT_RESULTS_DIR = 'results'


def results_dir():
    r"""Directory where verification reports are persisted."""
    return os.environ.get(RESULTS_ENV, DEFAULT_RESULTS_DIR)


class WorkbenchConfig():
    r"""Configuration of a workbench session.

    Parameters
    ----------
    base: BaseField, optional
        Default is BaseField(5, 'inert').
    xi: UnramifiedCharacter or rational, optional
        Default is the trivial character.
    mu: UnramifiedCharacter or rational, optional
        Character of E^x (value at p). Default is the trivial character.
    cayley: CayleyParams or dict, optional
        Default is tau = j, sigma = 1.
    window: int, optional
        Number of oracle layers on each side.
        Default is 6.
    depth: int, optional
        Congruence depth of the oracle K-average.
        Default is 1.
    seed: int, optional
        Seed of the randomized suites.
        Default is 1.
    n_jobs: int, optional
        Number of CPU to use for parallel computing.
        Default is 1.

    Raises
    ------
    UnsupportedConfigurationError
        For p = 2, a ramified algebra or mu(p)^2 != eta(p)^2.
    ValueError
        For invalid Cayley parameters or oracle settings.
    """

    def __init__(self, base=None, xi=1, mu=1, cayley=None, window=6, depth=1,
                 seed=1, n_jobs=1):

        base = BaseField(5, 'inert') if base is None else base
        if not isinstance(base, BaseField):
            raise TypeError('Wrong base type: {}. Should be: BaseField'
                            .format(type(base).__name__))
        if not isinstance(xi, UnramifiedCharacter):
            xi = UnramifiedCharacter(xi, 'xi')
        if not isinstance(mu, UnramifiedCharacter):
            mu = UnramifiedCharacter(mu, 'mu')
        if mu.value_at_p ** 2 != base.eta.value_at_p ** 2:
            raise UnsupportedConfigurationError(
                'mu restricted to F^x must agree with eta at p^2: '
                'mu(p)^2 = {}.'.format(format_rational(mu.value_at_p ** 2))
            )
        if not isinstance(cayley, CayleyParams):
            cayley = CayleyParams.from_json(base, cayley)
        if int(window) < 2:
            raise ValueError('The oracle `window` must be at least 2, got {}.'
                             .format(window))
        if int(depth) < 0:
            raise ValueError('The oracle `depth` must be nonnegative, got {}.'
                             .format(depth))
        self.__base = base
        self.__xi = xi
        self.__mu = mu
        self.__cayley = cayley
        self.__window = int(window)
        self.__depth = int(depth)
        self.__seed = int(seed)
        self.__n_jobs = int(n_jobs)

    @property
    def base(self):
        return self.__base

    @property
    def xi(self):
        return self.__xi

    @property
    def mu(self):
        return self.__mu

    @property
    def cayley(self):
        return self.__cayley

    @property
    def window(self):
        return self.__window

    @property
    def depth(self):
        return self.__depth

    @property
    def seed(self):
        return self.__seed

    @property
    def n_jobs(self):
        return self.__n_jobs

    def replace(self, **kwargs):
        r"""Copy with some fields replaced."""
        fields = {'base': self.__base, 'xi': self.__xi, 'mu': self.__mu,
                  'cayley': self.__cayley, 'window': self.__window,
                  'depth': self.__depth, 'seed': self.__seed,
                  'n_jobs': self.__n_jobs}
        if 'base' in kwargs and 'cayley' not in kwargs:
            fields['cayley'] = None
        fields.update(kwargs)
        return WorkbenchConfig(**fields)

    def to_json(self):
        return {
            'base': self.__base.to_json(),
            'characters': {'xi': format_rational(self.__xi.value_at_p),
                           'mu': format_rational(self.__mu.value_at_p)},
            'cayley': self.__cayley.to_json(),
            'oracle': {'window': self.__window, 'depth': self.__depth},
            'seed': self.__seed,
            'n_jobs': self.__n_jobs
        }

    @classmethod
    def from_json(cls, payload):
        r"""Build a configuration from its JSON form (missing keys take
        their defaults)."""
        payload = payload or {}
        base = BaseField.from_json(payload.get('base', {'p': 5}))
        characters = payload.get('characters', {})
        oracle = payload.get('oracle', {})
        return cls(
            base,
            characters.get('xi', 1) or 1,
            characters.get('mu', 1) or 1,
            CayleyParams.from_json(base, payload.get('cayley')),
            oracle.get('window', 6),
            oracle.get('depth', 1),
            payload.get('seed', 1),
            payload.get('n_jobs', 1)
        )

    @classmethod
    def from_file(cls, fname):
        with open(fname, 'r') as fp:
            return cls.from_json(json.load(fp))
