import itertools
import time

import numpy as np

from fractions import Fraction
from joblib import Parallel, delayed

from ..descent import descend, orbit_representatives, classify_type
from ..invariants import TildeGlElement, GlNextElement, CayleyParams
from ..invariants import EtaleMatrix
from ..invariants import delta, quotient_point, is_regular
from ..invariants import cayley_to_group, cayley_to_lie, cayley_identity
from ..lfactors import LaurentRational, L_for_orbit, gamma_factor, chi_of
from ..lfactors import local_degrees
from ..linalg import det, minimal_recurrence, berlekamp_massey
from ..orbital import LatticeCosetFunction, CosetTerm, fourier
from ..orbital import orbital_central, orbital_via_gamma, orbital_rs
from ..orbital import oracle_integrate, twist_factor, orbital_general
from ..orbital import group_pullback, group_direct_rs, sigma_independence
from ..orbital import group_element_from_lie, GroupCosetFunction
from ..padic import BaseField, UnramifiedCharacter
from ..unitary import unitary_indicator, unitary_zero, semisimple_orbits
from ..unitary import verify_matching, flip_pair, fourier_pair
from ..unitary import singular_transfer_check, measure_ratio
from ..utils import error_code, sign_string
from .config import WorkbenchConfig
from .report import VerificationReport


SUITES = ('unramified', 'rs', 'oracle', 'orbits', 'cayley', 'stability',
          'transfer-n1', 'group-n1', 'properties')

#: Number of seeds of the property suite.
PROPERTY_SEEDS = 5


# Seeded inputs

def _draw(rng, low, high):
    return int(rng.integers(low, high))


def random_function(rng, n, base, n_terms=2, max_depth=1):
    r"""Phase-free LatticeCosetFunction on gl~_n with integral centers.

    At n = 1 every coordinate gets its own depth (box cosets); at n = 2
    the terms are translates of p^m Lambda_0.
    """
    p = base.p
    dim = n * n + 2 * n
    terms = []
    for _ in range(n_terms):
        weight = _draw(rng, 1, 4) * (1 if rng.random() < 0.5 else -1)
        center = [_draw(rng, 0, p) for _ in range(dim)]
        if n == 1:
            depth = tuple(_draw(rng, 0, max_depth + 1) for _ in range(dim))
        else:
            depth = _draw(rng, 0, max_depth + 1)
        terms.append(CosetTerm(weight, center, depth, None))
    return LatticeCosetFunction('gl~', n, base, terms).canonicalize()


def random_matrix(rng, n, low=-3, high=4):
    return [[Fraction(_draw(rng, low, high)) for _ in range(n)]
            for _ in range(n)]


def random_invertible(rng, n, p):
    r"""Integer matrix of nonzero determinant, rescaled by a power of p."""
    while True:
        g = random_matrix(rng, n, -2, 3)
        if det(g) != 0:
            break
    e = _draw(rng, -1, 2)
    g[0] = [Fraction(p) ** e * c for c in g[0]]
    return g


def random_rs_unit(rng, n, base):
    r"""Integral regular semisimple element of gl~_n with unit d_n."""
    p = base.p
    while True:
        X = TildeGlElement(
            random_matrix(rng, n, 0, p),
            [Fraction(_draw(rng, 0, p)) for _ in range(n)],
            [Fraction(_draw(rng, 0, p)) for _ in range(n)]
        )
        d_n = quotient_point(X).d_values[-1]
        if d_n != 0 and base.valuation(d_n) == 0:
            return X


def random_rs(rng, n):
    r"""Integer regular semisimple element of gl~_n."""
    while True:
        X = TildeGlElement(
            random_matrix(rng, n),
            [Fraction(_draw(rng, -3, 4)) for _ in range(n)],
            [Fraction(_draw(rng, -3, 4)) for _ in range(n)]
        )
        if quotient_point(X).is_regular_semisimple():
            return X


def orbit_points(rng):
    r"""Six quotient points with 0, 1, 1, 1, 2 and 3 central factors, one
    of them an irreducible quadratic."""
    c = Fraction(_draw(rng, -2, 3))

    def diag(values):
        n = len(values)
        return [[values[i] if i == j else Fraction(0) for j in range(n)]
                for i in range(n)]

    zero2 = [Fraction(0)] * 2
    zero3 = [Fraction(0)] * 3
    last = [Fraction(0), Fraction(0), Fraction(1)]
    elements = [
        TildeGlElement(diag([c, c + 1]), [1, 1], [1, 1]),
        TildeGlElement([[c]], [0], [0]),
        TildeGlElement(diag([c, c]), zero2, zero2),
        TildeGlElement([[0, 2 - c * c], [1, 2 * c]], zero2, zero2),
        TildeGlElement(diag([c, c + 1, c + 2]), last, last),
        TildeGlElement(diag([c, c + 1, c + 2]), zero3, zero3),
    ]
    return [quotient_point(X) for X in elements]


def chart_points(rng, params, count):
    r"""Random points of gl_{n+1}, n in {1, 2}, inside the Cayley chart."""
    out = []
    for n in (1, 2):
        found = 0
        while found < count:
            Y = GlNextElement(random_matrix(rng, n + 1, -2, 3))
            try:
                cayley_to_group(Y, params)
            except ValueError:
                continue
            out.append(Y)
            found += 1
    return out


def unit_translate(phi, g):
    r"""X -> phi(X.g) on gl~_1 for a unit g: (a, v, u) -> (a, g v, u / g)
    on the centers."""
    g = Fraction(g)
    terms = [t._replace(center=(t.center[0], g * t.center[1],
                                t.center[2] / g))
             for t in phi.terms]
    return LatticeCosetFunction('gl~', 1, phi.base, terms).canonicalize()


def negate(phi):
    r"""X -> phi(-X)."""
    terms = [t._replace(center=tuple(-c for c in t.center))
             for t in phi.terms]
    return LatticeCosetFunction(phi.ambient, phi.n, phi.base, terms,
                                phi.h0).canonicalize()


def matched_pairs(base):
    r"""Matched pairs (phi, {disc class: phi^V}) at n = 1."""
    unit = LatticeCosetFunction.unit_lattice(1, base)
    if not base.inert:
        return {'unit': (unit, {0: unitary_indicator(base, 0)})}
    shifted = LatticeCosetFunction('gl~', 1, base,
                                   [CosetTerm(1, None, (0, 0, 1), None)])
    return {
        'unit': (unit, {0: unitary_indicator(base, 0),
                        1: unitary_zero(base, 1)}),
        'shifted': (shifted, {0: unitary_zero(base, 0),
                              1: unitary_indicator(base, 1)}),
    }


# Checks: pure functions returning (outputs, passed)

def _central_grid_check(p, etale, n, lam, sign):
    base = BaseField(p, etale)
    phi = LatticeCosetFunction.unit_lattice(n, base)
    xi = UnramifiedCharacter(1, 'xi')
    I = orbital_central((sign, lam), phi, xi)
    dd = descend(quotient_point(TildeGlElement.central(n, lam, sign)))
    L = L_for_orbit((dd, (sign,)), xi, base)
    return {'I': I, 'L': L}, I == L


def _rs_unit_check(X, base, xi):
    I = orbital_rs(X, LatticeCosetFunction.unit_lattice(X.n, base), xi)
    return {'I': I}, I == LaurentRational(1)


def _route_check(phi, lam, sign, xi, window, depth):
    X = (sign, lam)
    tate = orbital_central(X, phi, xi)
    gamma = orbital_via_gamma(X, phi, xi)
    oracle = oracle_integrate(X, phi, xi, window, depth)
    return ({'tate': tate, 'gamma': gamma, 'oracle': oracle},
            tate == gamma and gamma == oracle)


def _orbit_check(a):
    dd = descend(a)
    reps = orbit_representatives(a, dd)
    plus = sum(1 for r in reps if delta(r.X, '+') != 0)
    minus = sum(1 for r in reps if delta(r.X, '-') != 0)
    classified = all(classify_type(r.X, dd) == r.epsilon for r in reps)
    regular = all(is_regular(r.X) for r in reps)
    outputs = {'k': dd.k, 'count': len(reps),
               'types': [sign_string(r.epsilon) for r in reps],
               'plus': plus, 'minus': minus,
               'classified': classified, 'regular': regular}
    passed = (len(reps) == 2 ** dd.k and plus == 1 and minus == 1 and
              classified and regular)
    return outputs, passed


def _cayley_check(Y, params):
    x = cayley_to_group(Y, params)
    back = cayley_to_lie(x, params)
    outputs = {'x': x, 'round_trip': back == Y}
    passed = back == Y
    for sign in ('+', '-'):
        lhs, rhs = cayley_identity(Y, params, sign)
        outputs['Delta' + sign] = [lhs, rhs]
        passed = passed and lhs == rhs
    return outputs, passed


def _stability_check(phi, g, xi, rs_samples):
    unstable = phi - unit_translate(phi, g)
    rs = [orbital_rs(X, unstable, xi) for X in rs_samples]
    plus = orbital_central((1, 0), unstable, xi)
    minus = orbital_central((-1, 0), unstable, xi)
    outputs = {'plus': plus, 'minus': minus, 'rs': rs}
    return outputs, (all(R.is_zero() for R in rs) and plus.is_zero() and
                     minus.is_zero())


def _matching_check(phi, phiV, depth, sign):
    report = verify_matching(phi, phiV, depth, sign)
    return {'matched': report.matched, 'checked': report.checked,
            'first_failure': report.first_failure}, report.matched


def _fourier_matching_check(phi, phiV, depth):
    fphi, fphiV = fourier_pair(phi, phiV)
    return _matching_check(fphi, fphiV, depth, '+')


def _transfer_check(phi, phiV, X, depth, mode='lie_n_any_central'):
    result = singular_transfer_check(phi, phiV, X, mode, depth)
    return result, result['verdict'] == 'equal'


def _measure_check(base, d0, j):
    result = measure_ratio(base, d0, j)
    return result, result['ratio'] == result['expected']


def _group_check(Y, params, xi, mu):
    gamma = group_element_from_lie(Y, params)
    f = GroupCosetFunction.unit(params.base)
    L, I = group_pullback(f, gamma, params, xi, mu)
    return {'gamma': list(gamma), 'L': L, 'I': I}, I == L


def _group_direct_check(Y, params, xi, depth=0):
    gamma = group_element_from_lie(Y, params)
    if depth:
        f = GroupCosetFunction.coset(params.base, gamma)
    else:
        f = GroupCosetFunction.unit(params.base)
    _, I = group_pullback(f, gamma, params, xi)
    direct = group_direct_rs(f, gamma, xi)
    return {'I': I, 'direct': direct}, I == direct


def _sigma_report(Y, params, xi, sigmas):
    gamma = group_element_from_lie(Y, params)
    values = sigma_independence(gamma, sigmas, xi, params.base,
                                params.tau)
    return {'values': {str(s): v for s, v in values.items()}}, True


def _group_twist_check(Y, params, xi, y):
    base = params.base
    gamma = group_element_from_lie(Y, params)
    g1, g2 = gamma
    f = GroupCosetFunction.coset(base, gamma)
    moved = (g1, g2 @ EtaleMatrix.from_rational(y, base.d))
    lhs = group_direct_rs(f, moved, xi, base.eta)
    rhs = group_direct_rs(f, gamma, xi, base.eta) * base.eta(det(y), base)
    return {'lhs': lhs, 'rhs': rhs}, lhs == rhs


def _support_check(X, phi, k, xi):
    r"""phi times the indicator of A in A_X + p^k O has the same I_X."""
    base = phi.base
    a = X.A[0][0]
    terms = []
    for t in phi.terms:
        if base.valuation(a - t.center[0]) < min(k, t.depth[0]):
            continue
        c0, m0 = (a, k) if k >= t.depth[0] else (t.center[0], t.depth[0])
        terms.append(CosetTerm(t.weight, (c0,) + tuple(t.center[1:]),
                               (m0,) + tuple(t.depth[1:]), None))
    rhs = orbital_general(X, phi, xi, check=False).value
    if not terms:
        return {'lhs': 0, 'rhs': rhs}, rhs == 0
    window = LatticeCosetFunction('gl~', 1, base, terms)
    lhs = orbital_general(X, window, xi, check=False).value
    return {'lhs': lhs, 'rhs': rhs}, lhs == rhs


def _equivariance_check(X, g):
    Xg = X.act(g)
    dg = det(g)
    plus = delta(Xg, '+') == delta(X, '+') / dg
    minus = delta(Xg, '-') == delta(X, '-') * dg
    same_point = quotient_point(Xg) == quotient_point(X)
    return ({'delta+': plus, 'delta-': minus, 'quotient': same_point},
            plus and minus and same_point)


def _twist_check(X, g, base, xi):
    phi = LatticeCosetFunction.unit_lattice(X.n, base)
    lhs = orbital_rs(X.act(g), phi, xi)
    rhs = orbital_rs(X, phi, xi) * twist_factor(g, chi_of(xi, base), base)
    return {'lhs': lhs, 'rhs': rhs}, lhs == rhs


def _gamma_identity_check(value, c1, c0, base):
    chi = UnramifiedCharacter(value)
    product = gamma_factor(chi, c1, c0, base) * \
        gamma_factor(chi.inverse(), -c1, 1 - c0, base)
    return {'product': product}, product == LaurentRational(1)


def _fourier_involution_check(phi):
    twice = fourier(fourier(phi))
    return {'FF': twice}, twice == negate(phi)


def _recurrence_check(X):
    a = quotient_point(X)
    moments = a.extended_moments(2 * a.n)
    hankel = minimal_recurrence(moments, a.r)
    bm, order = berlekamp_massey(moments)
    passed = hankel == bm and order == a.r and hankel == a.charpoly()
    return {'order': order, 'hankel': str(hankel.as_expr()),
            'berlekamp_massey': str(bm.as_expr())}, passed


def _semisimple_count_check(a, base):
    dd = descend(a)
    count = len(semisimple_orbits(a, base, dd))
    expected = 1
    for factor in dd.factors:
        for f in local_degrees(factor.P, base.p):
            expected *= 2 if (base.inert and f % 2) else 1
    return {'count': count, 'expected': expected}, count == expected


# Suites: lists of (name, check, args, inputs)

def _suite_unramified(config, rng):
    out = []
    for p, n, etale in itertools.product((3, 5), (1, 2), ('inert', 'split')):
        for lam, sign in itertools.product((0, 1, p), (1, -1)):
            name = 'central-p{}-n{}-{}-lam{}{}'.format(
                p, n, etale, lam, sign_string([sign]))
            args = (p, etale, n, Fraction(lam), sign)
            out.append((name, _central_grid_check, args,
                        {'p': p, 'n': n, 'etale': etale, 'lam': lam,
                         'sign': sign}))
    return out


def _suite_rs(config, rng):
    base = config.base
    out = []
    for i in range(10):
        X = random_rs_unit(rng, 1 if i < 5 else 2, base)
        out.append(('rs-unit-{}'.format(i), _rs_unit_check,
                    (X, base, config.xi), X))
    return out


def _suite_oracle(config, rng):
    base = config.base
    out = []
    for i in range(13):
        n = 1 if i < 10 else 2
        phi = random_function(rng, n, base, n_terms=2 if n == 1 else 1)
        lam = Fraction(_draw(rng, 0, 2))
        sign = 1 if rng.random() < 0.5 else -1
        out.append(('routes-n{}-{}'.format(n, i), _route_check,
                    (phi, lam, sign, config.xi, config.window, config.depth),
                    {'phi': phi, 'lam': lam, 'sign': sign}))
    return out


def _suite_orbits(config, rng):
    return [('orbits-{}'.format(i), _orbit_check, (a,), a)
            for i, a in enumerate(orbit_points(rng))]


def _suite_cayley(config, rng):
    out = []
    for etale in ('inert', 'split'):
        base = BaseField(config.base.p, etale)
        params = config.cayley if base == config.base else \
            CayleyParams(base)
        for i, Y in enumerate(chart_points(rng, params, 5)):
            out.append(('cayley-{}-{}'.format(etale, i), _cayley_check,
                        (Y, params), {'Y': Y, 'params': params}))
    return out


def _suite_stability(config, rng):
    base = config.base
    p = base.p
    samples = [TildeGlElement([[0]], [1], [p]),
               TildeGlElement([[1]], [p], [1])]
    out = []
    for i in range(5):
        n_terms = 1 + i % 2
        terms = []
        for _ in range(n_terms):
            center = [_draw(rng, 0, p) for _ in range(3)]
            depth = (_draw(rng, 0, 2), 1, 1)
            terms.append(CosetTerm(_draw(rng, 1, 4), center, depth, None))
        phi = LatticeCosetFunction('gl~', 1, base, terms)
        g = _draw(rng, 2, p)
        out.append(('unstable-{}'.format(i), _stability_check,
                    (phi, g, config.xi, samples), {'phi': phi, 'g': g}))
    return out


def _suite_transfer(config, rng):
    base = config.base
    p = base.p
    depth = 3
    out = []
    for label, (phi, phiV) in matched_pairs(base).items():
        inputs = {'phi': phi, 'phiV': phiV}
        out.append(('matching-{}'.format(label), _matching_check,
                    (phi, phiV, depth, '+'), inputs))
        out.append(('matching-{}-flip'.format(label), _matching_check,
                    (phi, flip_pair(phiV, base), depth, '-'), inputs))
        out.append(('matching-{}-fourier'.format(label),
                    _fourier_matching_check, (phi, phiV, depth), inputs))
        points = [(0, 1), (0, -1)] + ([(1, 1)] if label == 'unit' else [])
        for lam, sign in points:
            X = TildeGlElement.central(1, Fraction(lam), sign)
            out.append(('transfer-{}-Z{}{}'.format(label, lam,
                                                    sign_string([sign])),
                        _transfer_check, (phi, phiV, X, depth),
                        dict(inputs, X=X)))
    phi, phiV = matched_pairs(base)['unit']
    X = TildeGlElement([[1]], [1], [p])
    out.append(('transfer-unit-rs', _transfer_check,
                (phi, phiV, X, depth, 'full_n1'),
                {'phi': phi, 'phiV': phiV, 'X': X}))
    for e in range(3):
        d0 = Fraction(p) ** e
        out.append(('measure-v{}'.format(e), _measure_check,
                    (base, d0, e + 1), {'d0': d0, 'j': e + 1}))
    return out


def _suite_group(config, rng):
    base = config.base
    params = config.cayley
    out = []
    candidates = []
    for lam, sign, d in itertools.product((0, 1), (1, -1), (0, 1)):
        X = TildeGlElement.central(1, Fraction(lam), sign)
        candidates.append(('central-lam{}{}-d{}'.format(
            lam, sign_string([sign]), d), GlNextElement.join(X, d)))
    candidates.append(('rs', GlNextElement.join(
        TildeGlElement([[0]], [1], [1]), 0)))
    for label, Y in candidates:
        try:
            gamma = group_element_from_lie(Y, params)
            group_pullback(GroupCosetFunction.unit(base), gamma, params,
                           config.xi, config.mu)
        except ValueError:
            # outside the unramified chart for these parameters
            continue
        out.append(('pullback-{}'.format(label), _group_check,
                    (Y, params, config.xi, config.mu), Y))
    rs = candidates[-1][1]
    if not any(name == 'pullback-rs' for name, _, _, _ in out):
        return out
    if config.mu.is_trivial():
        out.append(('direct-rs', _group_direct_check,
                    (rs, params, config.xi), rs))
        out.append(('direct-rs-coset', _group_direct_check,
                    (rs, params, config.xi, 1), rs))
    sigmas = [base.scalar(1), base.scalar(-1)]
    twists = (('unit', [[2, 0], [1, 1]]),
              ('uniformizer', [[base.p, 0], [0, 1]]))
    for label, y in twists:
        out.append(('twist-eta-{}'.format(label), _group_twist_check,
                    (rs, params, config.xi, y), {'Y': rs, 'y': y}))
    out.append(('sigma-independence', _sigma_report,
                (rs, params, config.xi, sigmas), rs))
    return out


def _suite_properties(config, rng):
    base = config.base
    p = base.p
    out = []
    for seed in range(config.seed, config.seed + PROPERTY_SEEDS):
        r = np.random.default_rng(seed)
        for n in (1, 2):
            X = random_rs(r, n)
            g = random_invertible(r, n, p)
            out.append(('equivariance-n{}-s{}'.format(n, seed),
                        _equivariance_check, (X, g), {'X': X, 'g': g}))
        X = random_rs(r, 1)
        g = [[Fraction(p) ** _draw(r, -2, 3) * _draw(r, 1, p)]]
        out.append(('twist-n1-s{}'.format(seed), _twist_check,
                    (X, g, base, config.xi), {'X': X, 'g': g}))
        value = [Fraction(2), Fraction(1, 3), Fraction(-1), Fraction(p)][
            _draw(r, 0, 4)]
        c1 = [1, 2, -1][_draw(r, 0, 3)]
        c0 = _draw(r, 0, 2)
        out.append(('gamma-identity-s{}'.format(seed), _gamma_identity_check,
                    (value, c1, c0, base),
                    {'value': value, 'c1': c1, 'c0': c0}))
        phi = random_function(r, 1, base)
        phiV = unitary_indicator(base, _draw(r, 0, 2) if base.inert else 0,
                                 _draw(r, 0, 2),
                                 [_draw(r, 0, p) for _ in range(3)])
        out.append(('fourier-involution-s{}'.format(seed),
                    _fourier_involution_check, (phi,), phi))
        out.append(('fourier-involution-u-s{}'.format(seed),
                    _fourier_involution_check, (phiV,), phiV))
        X = random_rs(r, 1 + _draw(r, 1, 3))
        out.append(('recurrence-s{}'.format(seed), _recurrence_check, (X,),
                    X))
        for i, a in enumerate(orbit_points(r)):
            out.append(('semisimple-count-{}-s{}'.format(i, seed),
                        _semisimple_count_check, (a, base), a))
        X = random_rs(r, 1)
        phi = random_function(r, 1, base)
        k = _draw(r, 1, 3)
        out.append(('support-n1-s{}'.format(seed), _support_check,
                    (X, phi, k, config.xi),
                    {'X': X, 'phi': phi, 'k': k}))
    return out


_SUITES = {
    'unramified': _suite_unramified,
    'rs': _suite_rs,
    'oracle': _suite_oracle,
    'orbits': _suite_orbits,
    'cayley': _suite_cayley,
    'stability': _suite_stability,
    'transfer-n1': _suite_transfer,
    'group-n1': _suite_group,
    'properties': _suite_properties,
}


def _run(check, args):
    start = time.perf_counter()
    try:
        outputs, passed = check(*args)
    except ValueError as e:
        outputs, passed = {'error': error_code(e), 'message': str(e)}, False
    return outputs, bool(passed), time.perf_counter() - start


def collect(suite, config, seed):
    r"""Checks of a suite as (name, check, args, inputs) tuples."""
    if suite == 'all':
        out = []
        for name in SUITES:
            out += [('{}/{}'.format(name, c[0]),) + tuple(c[1:])
                    for c in collect(name, config, seed)]
        return out
    if suite not in _SUITES:
        raise ValueError('Unknown suite `{}`. Should be one of {} or all.'
                         .format(suite, ', '.join(SUITES)))
    rng = np.random.default_rng(seed)
    return _SUITES[suite](config, rng)


def verify(suite='all', config=None, seed=None, n_jobs=None, prefer=None,
           verbose=0):
    r"""Run a verification suite.

    Parameters
    ----------
    suite: str, optional
        One of SUITES, or 'all'.
        Default is 'all'.
    config: WorkbenchConfig, optional
        Default is WorkbenchConfig().
    seed: int, optional
        Overrides the seed of the configuration.
        Default is None.
    n_jobs: int, optional
        Number of CPU to use for parallel computing. If None, the value of
        the configuration.
        Default is None.
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
    VerificationReport
        Checks appear in the order they were collected, whatever the
        number of jobs.
    """
    config = WorkbenchConfig() if config is None else config
    if seed is not None:
        config = config.replace(seed=seed)
    n_jobs = config.n_jobs if n_jobs is None else n_jobs
    checks = collect(suite, config, config.seed)
    if verbose:
        print('Suite {}: {} checks.'.format(suite, len(checks)))
    results = Parallel(n_jobs=n_jobs, prefer=prefer, verbose=verbose)(
        delayed(_run)(check, args) for _, check, args, _ in checks
    )
    report = VerificationReport(suite, config.seed, config.to_json())
    for (name, _, _, inputs), (outputs, passed, runtime) in zip(checks,
                                                                 results):
        report.add_check(name, inputs, outputs, passed, runtime)
        if verbose and not passed:
            print('FAILED: {}'.format(name))
    return report
