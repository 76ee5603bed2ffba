import itertools
import math

from fractions import Fraction
from joblib import Parallel, delayed

from ..invariants import TildeGlElement, quotient_point
from ..lfactors import LaurentRational, chi_of
from ..linalg.matrix import poly_coeffs, poly_from_coeffs
from ..linalg.recurrence import berlekamp_massey
from ..utils import as_fraction, DeskScaleError, WindowInsufficientError
from .cells import IwasawaCell, iwasawa_element, cell_value
from .kaverage import KAverage


#: Largest number of N-classes summed in a single cell.
MAX_X_CLASSES = 3 ** 8


def _entry_bound(c0, c1, c2, M, base):
    r"""Necessary lower bound on v(x) for c0 + c1 x + c2 x^2 to lie in
    p^-M O, or None if the entry does not depend on x."""
    coeffs = [c0, c1, c2]
    d = max((i for i, c in enumerate(coeffs) if c != 0), default=0)
    if d == 0:
        return None
    vd = base.valuation(coeffs[d])
    bounds = [Fraction(-M - vd, d)]
    for i in range(d):
        if coeffs[i] != 0:
            bounds.append(Fraction(base.valuation(coeffs[i]) - vd, d - i))
    return math.floor(min(bounds))


def x_support_valuation(X, k, M, base):
    r"""Lower bound on v(x) over the support of x -> phi(X.p^k n(x)).

    The entries of X.p^k n(x) are polynomials of degree <= 2 in x,
    recovered by interpolation at x = 0, 1, -1. Returns None when the
    cell is empty (an entry independent of x leaves p^-M O), and
    math.inf when no entry depends on x.
    """
    p = base.p
    Y0, Y1, Ym = (X.act(iwasawa_element(k, Fraction(x), p)).coordinates()
                  for x in (0, 1, -1))
    bound = -math.inf
    depends = False
    for c0, y1, ym in zip(Y0, Y1, Ym):
        c2 = (y1 + ym) / 2 - c0
        c1 = (y1 - ym) / 2
        b = _entry_bound(c0, c1, c2, M, base)
        if b is None:
            if base.valuation(c0) < -M:
                return None
            continue
        depends = True
        bound = max(bound, b)
    return bound if depends else math.inf


def _cell(Phi, X, k, M, base):
    p = base.p
    if len(k) == 1:
        Y = X.act(iwasawa_element(k, None, p))
        if any(base.valuation(c) < -M for c in Y.coordinates()):
            return Fraction(0)
        return cell_value(Phi, X, IwasawaCell(k, 0), p)
    xv = x_support_valuation(X, k, M, base)
    if xv is None:
        return Fraction(0)
    if xv == math.inf:
        if Phi(X.act(iwasawa_element(k, Fraction(0), p))) != 0:
            raise WindowInsufficientError(
                'window insufficient: the integrand is constant along N in '
                'the cell k={}.'.format(k)
            )
        return Fraction(0)
    if p ** max(0, -xv) > MAX_X_CLASSES:
        raise DeskScaleError(
            'desk-scale limit: the cell k={} needs {}^{} classes of N.'
            .format(k, p, -xv)
        )
    return cell_value(Phi, X, IwasawaCell(k, xv), p)


def central_tail_denominator(n, p):
    r"""Coefficients of prod_{i=1..n} (1 - p^(i-1) z^i), constant term first.

    At a central orbit the layers are Tate integrals in the variables
    p^(i-1) (chi(p) t)^-/+i, so both tails have this denominator.
    """
    D = poly_from_coeffs([1])
    for i in range(1, n + 1):
        D = D * poly_from_coeffs([1] + [0] * (i - 1) + [-p ** (i - 1)])
    return poly_coeffs(D)


def rational_tail(sequence, side, denominator=None):
    r"""Generating function sum_i s_i z^i of a tail of layers.

    Parameters
    ----------
    sequence: list of rationals
    side: str
        Label used in the diagnostics.
    denominator: list of rationals, optional
        Known multiple of the denominator, constant term first. The tail
        is closed by it when D(z) sum_i s_i z^i vanishes on the last
        terms; otherwise the shortest recurrence found by Berlekamp-Massey
        is used.
        Default is None.

    Returns
    -------
    (num, den): (list, list)
        Coefficients, constant term first, with sum s_i z^i = num / den.

    Raises
    ------
    WindowInsufficientError
        If fewer than 2L + 1 terms back a recurrence of length L and the
        known denominator does not close the sequence either.
    """
    sequence = [as_fraction(s) for s in sequence]
    if denominator is not None:
        den = [as_fraction(a) for a in denominator]
        num = [sum((den[i] * sequence[j - i]
                    for i in range(min(j + 1, len(den)))), Fraction(0))
               for j in range(len(sequence))]
        while num and num[-1] == 0:
            num.pop()
        if len(num) < len(sequence):
            return num, den
    Q, L = berlekamp_massey(sequence)
    if len(sequence) < 2 * L + 1:
        raise WindowInsufficientError(
            'window insufficient: the {} tail has linear complexity {} but '
            'only {} layers were computed (need {}).'.format(
                side, L, len(sequence), 2 * L + 1
            )
        )
    q = poly_coeffs(Q)
    den = [q[L - i] for i in range(L + 1)]
    num = []
    for j in range(L):
        num.append(sum((den[i] * sequence[j - i] for i in range(j + 1)),
                       Fraction(0)))
    return num, den


def oracle_integrate(X, phi, xi, window=6, depth=0, n_jobs=1, prefer=None,
                     verbose=0):
    r"""Brute-force orbital integral over Iwasawa cells.

    The cells p^k N K with |k_i| <= 2 window are integrated exactly
    against the K-average of phi and summed into the layers
    H(sigma) = sum_{k_1 + ... + k_n = sigma}, |sigma| <= window. The two
    tails sigma -> +inf and sigma -> -inf are then closed by their
    shortest linear recurrences. At n = 2 the tails of a central orbit
    have a denominator of degree 3, and they are closed by it directly
    (central_tail_denominator) before falling back to the recurrences.

    Parameters
    ----------
    X: TildeGlElement or (sign, lam)
        Any element of gl~_n, n <= 2; a pair names Z_lam^sign.
    phi: LatticeCosetFunction
        Phase-free function on gl~_n.
    xi: UnramifiedCharacter or rational
    window: int, optional
        Number of layers on each side.
        Default is 6.
    depth: int, optional
        Minimal congruence depth of the K-average.
        Default is 0.
    n_jobs: int, optional
        Number of CPU to use for parallel computing.
        Default is 1.
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
    LaurentRational

    Raises
    ------
    WindowInsufficientError
        When the window does not certify both tails, or a layer reaches
        the edge of the enumerated cells.
    """
    if not isinstance(X, TildeGlElement):
        sign, lam = X
        X = TildeGlElement.central(phi.n, as_fraction(lam), sign)
    n = X.n
    if n != phi.n:
        raise ValueError('Element of size {} for a function on gl~_{}.'
                         .format(n, phi.n))
    if n > 2:
        raise DeskScaleError('desk-scale limit: the oracle is run for '
                             'n <= 2, got n={}.'.format(n))
    if int(window) < 2:
        raise ValueError('The oracle `window` must be at least 2.')
    base = phi.base
    chi = chi_of(xi, base)
    W = int(window)
    B = W if n == 1 else 2 * W
    Phi = KAverage(phi, depth)
    M = Phi.support_bound
    ks = [k for k in itertools.product(range(-B, B + 1), repeat=n)
          if abs(sum(k)) <= W]
    if verbose:
        print('Oracle: {} cells, window {}.'.format(len(ks), W))
    values = Parallel(n_jobs=n_jobs, prefer=prefer, verbose=verbose)(
        delayed(_cell)(Phi, X, k, M, base) for k in ks
    )
    layers = {s: Fraction(0) for s in range(-W, W + 1)}
    for k, value in zip(ks, values):
        if value == 0:
            continue
        if n > 1 and max(abs(e) for e in k) == B:
            raise WindowInsufficientError(
                'window insufficient: the cell k={} on the edge of the '
                'enumeration contributes {}.'.format(k, value)
            )
        layers[sum(k)] += value

    denominator = None
    if n > 1 and quotient_point(X).is_central():
        denominator = central_tail_denominator(n, base.p)

    c = chi.value_at_p
    num, den = rational_tail([layers[s] for s in range(0, W + 1)],
                             'positive', denominator)
    plus = LaurentRational.from_terms(
        {j: a * c ** j for j, a in enumerate(num)},
        {i: a * c ** i for i, a in enumerate(den)}
    )
    num, den = rational_tail([layers[-s] for s in range(1, W + 1)],
                             'negative', denominator)
    minus = LaurentRational.from_terms(
        {-j - 1: a * c ** (-j - 1) for j, a in enumerate(num)},
        {-i: a * c ** (-i) for i, a in enumerate(den)}
    )
    return plus + minus
