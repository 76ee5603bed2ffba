import collections
import warnings

from fractions import Fraction
from sympy.functions.combinatorial.numbers import legendre_symbol

from ..descent import descend
from ..invariants import TildeGlElement, quotient_point
from ..orbital import LatticeCosetFunction, fourier, orbital_rs
from ..orbital import orbital_general
from ..utils import format_rational, DeskScaleError
from .constants import transfer_constants
from .hermitian import matching_disc
from .matching import unitary_orbital_n1, transfer_factor


MODES = ('lie_n_any_central', 'full_n1')


def _nonresidue(p):
    return next(a for a in range(2, p) if legendre_symbol(a, p) == -1)


def rs_grid(base, depth=3):
    r"""Covering grid of regular semisimple orbits of gl~_1.

    X = (a, p^i, kappa p^k) with a in {0, 1, 1/p}, -1 <= i, k <= depth and
    kappa in {1, a non-residue}: every valuation pattern of (a, v, u) and
    both unit classes of uv up to the given depth.
    """
    p = base.p
    kappas = (1, _nonresidue(p))
    out = []
    for a in (Fraction(0), Fraction(1), Fraction(1, p)):
        for i in range(-1, depth + 1):
            for k in range(-1, depth + 1):
                for kappa in kappas:
                    out.append(TildeGlElement(
                        [[a]], [Fraction(p) ** i],
                        [kappa * Fraction(p) ** k]
                    ))
    return out


MatchReport = collections.namedtuple(
    'MatchReport', ['matched', 'checked', 'first_failure', 'rows']
)
MatchReport.__doc__ = r"""Outcome of an exhaustive rs comparison.

rows holds one dict per grid element (X, V, omega.I, J); first_failure is
the first row where the two sides differ, or None."""


def _check_family(phi, phiV):
    base = phi.base
    if phi.ambient != 'gl~' or phi.n != 1:
        raise DeskScaleError('desk-scale limit: matching is verified for '
                             'functions on gl~_1.')
    expected = [0] if not base.inert else [0, 1]
    if sorted(phiV) != expected:
        raise ValueError('Expected one unitary function per Hermitian class '
                         '{}, got keys {}.'.format(expected, sorted(phiV)))
    for bit, f in phiV.items():
        if f.h0 != Fraction(base.p) ** bit:
            raise ValueError('The function of class {} must carry the Gram '
                             'entry {}.'.format(bit, base.p ** bit))


def verify_matching(phi, phiV, depth=3, sign='+'):
    r"""Exhaustive check that phi and (phi^V) are matched at n = 1.

    For every X of rs_grid, omega^sign(X) I_X(phi, 1, 0) must equal
    J_{X^V}(phi^V) on the Hermitian line V matching X.

    Parameters
    ----------
    phi: LatticeCosetFunction
        Phase-free function on gl~_1.
    phiV: dict
        Disc class (0, 1) -> LatticeCosetFunction on u~ carrying the Gram
        entry p^class. Split E has the single class 0.
    depth: int, optional
        Depth of the rs grid.
        Default is 3.
    sign: str, optional
        '+' or '-'.
        Default is '+'.

    Returns
    -------
    MatchReport
    """
    _check_family(phi, phiV)
    base = phi.base
    deepest = max([phi.max_depth()] + [f.max_depth() for f in phiV.values()])
    if deepest > depth:
        warnings.warn('The rs grid of depth {} is shallower than the '
                      'functions (depth {}).'.format(depth, deepest),
                      UserWarning)
    rows = []
    first = None
    for X in rs_grid(base, depth):
        bit = matching_disc(X, base)
        lhs = transfer_factor(X, base, sign) * \
            orbital_rs(X, phi, 1).evaluate(1)
        rhs = unitary_orbital_n1(X, phiV[bit])
        row = {'X': X, 'V': bit, 'lhs': lhs, 'rhs': rhs}
        rows.append(row)
        if first is None and lhs != rhs:
            first = row
    return MatchReport(first is None, len(rows), first, rows)


def flip_pair(phiV, base):
    r"""(phi^V) -> (eta(disc V) phi^V): a plus-matched family becomes
    minus-matched with the same phi."""
    return {bit: f.scale(-1 if (bit and base.inert) else 1)
            for bit, f in phiV.items()}


def fourier_pair(phi, phiV, n=1):
    r"""Fourier transfer of a plus-matched pair:
    (F phi, eta(disc V)^n F phi^V), every epsilon factor being 1."""
    base = phi.base
    return fourier(phi), {
        bit: fourier(f).scale((-1 if (bit and base.inert) else 1) ** n)
        for bit, f in phiV.items()
    }


def _central_value(phiV, lam, n):
    if isinstance(phiV, LatticeCosetFunction):
        if n != 1:
            raise ValueError('At n >= 2 the unitary functions enter through '
                             'their value at Z_lam.')
        return phiV((lam, 0, 0))
    return Fraction(phiV)


def _report(verdict, lhs, rhs, ledger, mode, X):
    return {
        'verdict': verdict,
        'mode': mode,
        'X': X.to_json(),
        'lhs': None if lhs is None else format_rational(lhs),
        'rhs': None if rhs is None else format_rational(rhs),
        'ledger': ledger
    }


def singular_transfer_check(phi, phiV, X, mode='lie_n_any_central', depth=3,
                            verbose=0):
    r"""Compare I^natural_X(phi) with sum_{(V, o)} c_{X,o} J_o(phi^V).

    Parameters
    ----------
    phi: LatticeCosetFunction
        Function on gl~_n.
    phiV: dict
        Disc class -> unitary function on u~ (n = 1) or, at n >= 2, the
        value of phi^V at Z_lam as a rational.
    X: TildeGlElement
        Regular element: of central type in the mode 'lie_n_any_central',
        any regular element of gl~_1 in the mode 'full_n1'.
    mode: str, optional
        'lie_n_any_central' or 'full_n1'.
        Default is 'lie_n_any_central'.
    depth: int, optional
        Depth of the rs grid used to verify the matching at n = 1.
        Default is 3.
    verbose: int, optional
        If set to a value > 0, print the ledger.
        Default is 0.

    Returns
    -------
    dict
        'verdict' is 'equal', 'discrepancy' or 'unmatched'; the ledger
        lists c_{X,o} and J_o(phi^V) per semisimple orbit.
    """
    if mode not in MODES:
        raise ValueError('Unknown mode `{}`. Should be one of {}.'.format(
            mode, ', '.join(MODES)))
    if not isinstance(X, TildeGlElement):
        raise TypeError('Wrong element type: {}. Should be: {}'.format(
            type(X).__name__, 'TildeGlElement'
        ))
    base = phi.base
    n = X.n
    a = quotient_point(X)
    dd = descend(a)
    if mode == 'full_n1' and n != 1:
        raise DeskScaleError('desk-scale limit: the full chain is verified '
                             'at n=1, got n={}.'.format(n))
    central = dd.is_central() and dd.factors[0].degree == 1
    if mode == 'lie_n_any_central' and not central:
        raise ValueError('The mode lie_n_any_central needs X of central '
                         'type, got {}.'.format(X))

    functions = all(isinstance(f, LatticeCosetFunction)
                    for f in phiV.values())
    if n == 1 and functions:
        report = verify_matching(phi, phiV, depth)
        if not report.matched:
            row = report.first_failure
            ledger = [{'X': row['X'].to_json(), 'V': row['V'],
                       'lhs': format_rational(row['lhs']),
                       'rhs': format_rational(row['rhs'])}]
            return _report('unmatched', None, None, ledger, mode, X)
    else:
        warnings.warn('The matching of the pair is assumed, not verified, '
                      'at n={}.'.format(n), UserWarning)

    result = orbital_general(X, phi, 1)
    holo = result.normalized.holo_at(0, base.p)
    if holo.order is not None and holo.order < 0:
        raise ValueError('I_X / L_X has a pole at s = 0 for {}.'.format(X))
    lhs = holo.value

    constants = transfer_constants(X, base)
    ledger = []
    rhs = Fraction(0)
    if central:
        lam = -a.char_coeffs[-1] / n
        for entry in constants.components:
            V = entry['V']
            J = _central_value(phiV[V.disc_class], lam, n)
            rhs += entry['c_X_o'] * J
            ledger.append({'V': V.disc_class,
                           'c_X_o': format_rational(entry['c_X_o']),
                           'J': format_rational(J)})
    else:
        bit = matching_disc(X, base)
        J = unitary_orbital_n1(X, phiV[bit])
        rhs = constants.c_X * J
        ledger.append({'V': bit, 'c_X_o': format_rational(constants.c_X),
                       'J': format_rational(J)})
    if verbose:
        for row in ledger:
            print('V={V}: c={c_X_o}, J={J}'.format(**row))
    verdict = 'equal' if lhs == rhs else 'discrepancy'
    return _report(verdict, lhs, rhs, ledger, mode, X)
