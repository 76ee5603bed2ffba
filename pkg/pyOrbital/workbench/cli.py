import argparse
import json
import sys

from ..descent import DescentFactor, stratify, descend
from ..descent import orbit_representatives, classify_type
from ..invariants import TildeGlElement, GlNextElement, SElement
from ..invariants import delta, quotient_point, is_regular
from ..invariants import cayley, cayley_identity
from ..lfactors import LFactorSpec, build_L, gamma_factor, central_L
from ..lfactors import L_for_orbit, chi_of
from ..linalg.matrix import poly_coeffs
from ..orbital import fourier, orbital_central, orbital_via_gamma
from ..orbital import orbital_general, oracle_integrate
from ..padic import UnramifiedCharacter
from ..unitary import match_element, semisimple_orbits, orbit_ledger
from ..unitary import transfer_constants, singular_transfer_check
from ..unitary import verify_matching
from ..utils import as_fraction, parse_signs, sign_string
from ..utils import error_code
from .config import WorkbenchConfig
from .serialize import canonical_json, to_payload
from .serialize import parse_element, parse_central, parse_function
from .serialize import parse_unitary_family, parse_point, parse_gamma
from .verify import SUITES, verify


ROUTES = ('tate', 'gamma', 'oracle', 'descent')

VERBS = ('invariants', 'quotient', 'stratify', 'descend', 'orbits',
         'classify', 'cayley', 'lfactor', 'integrate', 'integrate-oracle',
         'fourier', 'match', 'orbits-unitary', 'constants', 'transfer-check',
         'verify')


def _required(payload, key):
    if key not in payload:
        raise KeyError('Missing field `{}` in the payload.'.format(key))
    return payload[key]


def _gl_element(payload):
    X = parse_element(_required(payload, 'element'))
    if isinstance(X, GlNextElement):
        X = X.split()[0]
    if not isinstance(X, TildeGlElement):
        raise TypeError('Wrong element type: {}. Should be: {}'.format(
            type(X).__name__, 'TildeGlElement'
        ))
    return X


def _point(payload):
    return parse_point(_required(payload, 'point'))


def _invariants(payload, config, route):
    X = parse_element(_required(payload, 'element'), config.base)
    out = {'delta+': delta(X, '+'), 'delta-': delta(X, '-')}
    if isinstance(X, SElement):
        return out
    a = quotient_point(X)
    out.update({'quotient': a, 'd_values': a.d_values, 'r': a.r})
    if isinstance(X, TildeGlElement):
        out['regular'] = is_regular(X)
    return out


def _quotient(payload, config, route):
    a = parse_point(_required(payload, 'element'))
    return {'quotient': a, 'd_values': a.d_values, 'r': a.r,
            'regular_semisimple': a.is_regular_semisimple(),
            'central': a.is_central()}


def _stratify(payload, config, route):
    r, a0, residual = stratify(_point(payload))
    return {'r': r, 'a0': a0, 'residual': poly_coeffs(residual)}


def _descend(payload, config, route):
    factorization = payload.get('factorization')
    if factorization is not None:
        factorization = [DescentFactor.from_json(f) for f in factorization]
    return descend(_point(payload), factorization)


def _orbits(payload, config, route):
    a = _point(payload)
    reps = orbit_representatives(a, n_jobs=config.n_jobs,
                                 kind=payload.get('kind', 'power'))
    return {'count': len(reps), 'representatives': reps}


def _classify(payload, config, route):
    return {'epsilon': sign_string(classify_type(_gl_element(payload)))}


def _cayley(payload, config, route):
    Y = parse_element(_required(payload, 'element'), config.base)
    direction = payload.get('direction', 'to_group')
    out = {'image': cayley(Y, config.cayley, direction)}
    if direction == 'to_group':
        for sign in ('+', '-'):
            lhs, rhs = cayley_identity(Y, config.cayley, sign)
            out['identity' + sign] = {'lhs': lhs, 'rhs': rhs,
                                      'equal': lhs == rhs}
    return out


def _xi(payload, config):
    if 'xi' in payload:
        return UnramifiedCharacter(payload['xi'], 'xi')
    return config.xi


def _lfactor(payload, config, route):
    base = config.base
    xi = _xi(payload, config)
    if 'spec' in payload:
        spec = payload['spec']
        chi = UnramifiedCharacter(_required(spec, 'chi'))
        args = (_required(spec, 'c1'), _required(spec, 'c0'))
        degree = spec.get('degree', 1)
        if payload.get('gamma', False):
            return gamma_factor(chi, args[0], args[1], base, degree)
        return build_L(LFactorSpec(chi, args[0], args[1], degree), base)
    if 'element' in payload:
        return L_for_orbit(_gl_element(payload), xi, base)
    sign = parse_signs(payload.get('sign', '+'))[0]
    return central_L(int(_required(payload, 'n')), sign, chi_of(xi, base),
                     base, payload.get('degree', 1))


def _integrand(payload, config):
    phi = parse_function(_required(payload, 'function'), config.base)
    if 'element' in payload:
        X = _gl_element(payload)
    else:
        X = parse_central(_required(payload, 'central'))
    return X, phi, _xi(payload, config)


def _oracle(X, phi, xi, payload, config):
    return oracle_integrate(X, phi, xi,
                            payload.get('window', config.window),
                            payload.get('depth', config.depth),
                            n_jobs=config.n_jobs)


def _integrate(payload, config, route):
    route = route or payload.get('route', 'descent')
    if route not in ROUTES:
        raise ValueError('Unknown route `{}`. Should be one of {}.'.format(
            route, ', '.join(ROUTES)))
    X, phi, xi = _integrand(payload, config)
    if route == 'tate':
        return {'route': route, 'I': orbital_central(X, phi, xi)}
    if route == 'gamma':
        return {'route': route, 'I': orbital_via_gamma(X, phi, xi)}
    if route == 'oracle':
        return {'route': route, 'I': _oracle(X, phi, xi, payload, config)}
    if not isinstance(X, TildeGlElement):
        X = TildeGlElement.central(phi.n, X[1], X[0])
    result = orbital_general(X, phi, xi)
    holo = result.normalized.holo_at(0, config.base.p)
    return {'route': route, 'I': result.value, 'L': result.L,
            'normalized': result.normalized,
            'at_zero': {'order': holo.order, 'value': holo.value}}


def _integrate_oracle(payload, config, route):
    X, phi, xi = _integrand(payload, config)
    return {'route': 'oracle', 'I': _oracle(X, phi, xi, payload, config)}


def _fourier(payload, config, route):
    return fourier(parse_function(_required(payload, 'function'),
                                  config.base))


def _match(payload, config, route):
    base = config.base
    if 'function' in payload:
        phi = parse_function(payload['function'], base)
        phiV = parse_unitary_family(_required(payload, 'unitary'), base)
        report = verify_matching(phi, phiV, payload.get('depth', 3),
                                 payload.get('sign', '+'))
        return {'matched': report.matched, 'checked': report.checked,
                'first_failure': report.first_failure}
    V, XV = match_element(_gl_element(payload), base,
                          payload.get('precision', 6))
    return {'V': V, 'XV': XV}


def _orbits_unitary(payload, config, route):
    orbits = semisimple_orbits(_point(payload), config.base)
    return {'count': len(orbits), 'orbits': orbit_ledger(orbits)}


def _constants(payload, config, route):
    base = config.base
    eps = payload.get('eps')
    if eps is not None:
        eps = {k: as_fraction(v) for k, v in eps.items()}
    gamma = payload.get('gamma')
    if gamma is not None:
        gamma = parse_gamma(gamma, base)
    return transfer_constants(_gl_element(payload), base, eps is None, eps,
                              gamma, config.mu)


def _transfer_check(payload, config, route):
    base = config.base
    phi = parse_function(_required(payload, 'function'), base)
    phiV = parse_unitary_family(_required(payload, 'unitary'), base)
    return singular_transfer_check(
        phi, phiV, _gl_element(payload),
        payload.get('mode', 'lie_n_any_central'), payload.get('depth', 3)
    )


_HANDLERS = {
    'invariants': _invariants,
    'quotient': _quotient,
    'stratify': _stratify,
    'descend': _descend,
    'orbits': _orbits,
    'classify': _classify,
    'cayley': _cayley,
    'lfactor': _lfactor,
    'integrate': _integrate,
    'integrate-oracle': _integrate_oracle,
    'fourier': _fourier,
    'match': _match,
    'orbits-unitary': _orbits_unitary,
    'constants': _constants,
    'transfer-check': _transfer_check,
}


def run(verb, payload=None, config=None, route=None):
    r"""Run one workbench verb.

    Parameters
    ----------
    verb: str
        One of VERBS except 'verify'.
    payload: dict, optional
        JSON payload of the verb.
    config: WorkbenchConfig, optional
        Default is WorkbenchConfig().
    route: str, optional
        Route of the integrate verb ('tate', 'gamma', 'oracle' or
        'descent').

    Returns
    -------
    JSON-serializable result.
    """
    if verb not in _HANDLERS:
        raise ValueError('Unknown verb `{}`. Should be one of {}.'.format(
            verb, ', '.join(VERBS)))
    config = WorkbenchConfig() if config is None else config
    payload = {} if payload is None else payload
    if not isinstance(payload, dict):
        raise TypeError('Wrong payload type: {}. Should be: dict'.format(
            type(payload).__name__))
    return to_payload(_HANDLERS[verb](payload, config, route))


def _parse_args(argv=None):
    parser = argparse.ArgumentParser(
        prog='pyorbital',
        description='Exact local orbital integrals and singular transfer '
                    'checks.'
    )
    parser.add_argument('verb', choices=VERBS)
    parser.add_argument(
        'payload', nargs='?', default=None,
        help='JSON payload, @FILE to read it from a file, or - for stdin. '
             'For verify: the suite ({} or all).'.format(', '.join(SUITES))
    )
    parser.add_argument('--config', dest='config_path', default=None,
                        help='Path to a JSON configuration file.')
    parser.add_argument('--seed', type=int, default=None,
                        help='Seed of the randomized checks.')
    parser.add_argument('--route', choices=ROUTES, default=None,
                        help='Route of the integrate verb.')
    parser.add_argument('--out', dest='out_path', default=None,
                        help='Write the JSON result to this path.')
    parser.add_argument('--ledger', choices=('csv', 'ods'), default=None,
                        help='verify: export the ledger as a spreadsheet.')
    parser.add_argument('-v', '--verbose', action='count', default=0)
    return parser.parse_args(argv)


def _read_payload(text):
    if text is None:
        return {}
    if text == '-':
        return json.load(sys.stdin)
    if text.startswith('@'):
        with open(text[1:], 'r', encoding='utf-8') as fp:
            return json.load(fp)
    return json.loads(text)


def _emit(result, out_path):
    text = canonical_json(result)
    if out_path is None:
        print(text)
    else:
        with open(out_path, 'w', encoding='utf-8') as fp:
            fp.write(text + '\n')


def main(argv=None):
    args = _parse_args(argv)
    try:
        config = WorkbenchConfig() if args.config_path is None else \
            WorkbenchConfig.from_file(args.config_path)
        if args.seed is not None:
            config = config.replace(seed=args.seed)
        if args.verb == 'verify':
            suite = args.payload or 'all'
            report = verify(suite, config, verbose=args.verbose)
            fname = report.save(ledger=args.ledger)
            if args.verbose:
                print(report.summary())
                print('Report saved to {}.'.format(fname))
            _emit(report.to_json(), args.out_path)
            return 0 if report.passed else 1
        payload = _read_payload(args.payload)
        result = run(args.verb, payload, config, args.route)
    except json.JSONDecodeError as e:
        _emit({'error': {'code': 'schema', 'message': str(e)}},
              args.out_path)
        return 2
    except (ValueError, KeyError, TypeError) as e:
        message = e.args[0] if isinstance(e, KeyError) and e.args else str(e)
        _emit({'error': {'code': error_code(e), 'message': message}},
              args.out_path)
        return 2
    _emit(result, args.out_path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
