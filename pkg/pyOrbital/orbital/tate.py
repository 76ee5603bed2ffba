import itertools

from fractions import Fraction

from ..descent import descend, locate
from ..invariants import TildeGlElement, quotient_point
from ..lfactors import LaurentRational, chi_of
from ..linalg.matrix import det, poly_coeffs
from ..utils import as_fraction, DeskScaleError
from .cosets import LatticeCosetFunction, CosetTerm
from .kaverage import KAverage


#: Largest number of (x1, y, x2) classes enumerated by f_phi at n = 2.
MAX_FPHI_GRID = 20000


def _f_phi_n1(phi, lam):
    base = phi.base
    p = base.p
    out = []
    for t in phi.terms:
        (cA, cv, cu), (mA, mv, mu) = t.center, t.depth
        if base.valuation(lam - cA) < mA or base.valuation(-cu) < mu:
            continue
        v0 = base.valuation(cv)
        if v0 >= mv:
            out.append(CosetTerm(t.weight, None, (mv,), None))
            continue
        # x / kappa stays in the shell v(x) = v0 on a coset of
        # 1 + p^(mv - v0) O inside O^x
        w = t.weight * Fraction(p) ** (v0 - mv + 1) / (p - 1)
        out.append(CosetTerm(w, None, (v0,), None))
        out.append(CosetTerm(-w, None, (v0 + 1,), None))
    return LatticeCosetFunction('F^n', 1, base, out).canonicalize()


def _f_phi_n2(phi, lam):
    base = phi.base
    p = base.p
    Phi = KAverage(phi)
    M = Phi.support_bound
    m = phi.max_depth()
    size = p ** (M + m)
    if size ** 3 > MAX_FPHI_GRID:
        raise DeskScaleError(
            'desk-scale limit: f_phi would enumerate {} classes (support '
            'bound {}, depth {}).'.format(size ** 3, M, m)
        )
    step = Fraction(p) ** m
    offset = Fraction(p) ** (-M)
    grid = [offset * i for i in range(size)]
    out = []
    for x1, x2 in itertools.product(grid, repeat=2):
        value = Fraction(0)
        for y in grid:
            Y = TildeGlElement([[lam, x1], [0, lam]], [y, x2], [0, 0])
            value += Phi(Y)
        if value != 0:
            out.append(CosetTerm(value / step, (x1, x2), (m, m), None))
    return LatticeCosetFunction('F^n', 2, base, out).canonicalize()


def f_phi(phi, lam, chi=None):
    r"""Reduction of an orbital integral at Z_lam^+ to a function on F^n.

    f_phi(x) is the integral of phi over K and over the first coordinate
    of v at the point (lam + x_1 N, (y, x_n), 0); at n = 1 it is the
    K-average of x -> phi(lam, x, 0).

    Parameters
    ----------
    phi: LatticeCosetFunction
        Phase-free function on gl~_n, n <= 2.
    lam: rational
    chi: UnramifiedCharacter, optional
        Unused in the unramified setting (chi is trivial on K).

    Returns
    -------
    LatticeCosetFunction on F^n
    """
    if phi.ambient != 'gl~':
        raise ValueError('f_phi needs a function on gl~_n, got the ambient '
                         '{}.'.format(phi.ambient))
    if not phi.is_phase_free():
        raise ValueError('f_phi needs a phase-free function.')
    lam = as_fraction(lam)
    if phi.n == 1:
        return _f_phi_n1(phi, lam)
    if phi.n == 2:
        return _f_phi_n2(phi, lam)
    raise DeskScaleError('desk-scale limit: f_phi is computed for n <= 2, '
                         'got n={}.'.format(phi.n))


def tate_coset_sum(center, depth, z, base):
    r"""int_{F^x} 1_{center + p^depth O}(b) z^v(b) d^x b with vol O^x = 1.

    Parameters
    ----------
    center: rational
    depth: int
    z: LaurentRational
    base: BaseField

    Returns
    -------
    LaurentRational
    """
    p = base.p
    v0 = base.valuation(center)
    if v0 >= depth:
        return z ** depth / (1 - z)
    return z ** v0 * (Fraction(p) ** (v0 - depth + 1) / (p - 1))


def tate_integral(f, variables):
    r"""Multiplicative integral of a phase-free function on F^n against
    b -> prod_i z_i^v(b_i)."""
    if f.ambient != 'F^n':
        raise ValueError('Tate integrals are taken on F^n.')
    if len(variables) != f.n:
        raise ValueError('Expected {} variables, got {}.'.format(
            f.n, len(variables)
        ))
    out = LaurentRational(0)
    for t in f.terms:
        if t.phase is not None:
            raise ValueError('tate_integral needs a phase-free function.')
        value = LaurentRational(t.weight)
        for c, m, z in zip(t.center, t.depth, variables):
            value = value * tate_coset_sum(c, m, z, f.base)
        out = out + value
    return out


def central_variables(n, chi, base):
    r"""z_i = (chi(p) t)^-i p^(i-1): the Tate variables at Z^+."""
    c = chi.value_at_p
    return [LaurentRational.monomial(Fraction(base.p) ** (i - 1) / c ** i,
                                     -i)
            for i in range(1, n + 1)]


def twist_factor(g, chi, base):
    r"""(chi(p) t)^-v(det g): the change of I_X under X -> X.g."""
    e = base.valuation(det(g))
    return LaurentRational.monomial(chi.value_at_p ** (-e), -e)


def invert_plus_route(R, chi):
    r"""Given R(t) = G(chi(p) t), return G(1 / (chi(p) t))."""
    return R.substitute_inverse().scale_variable(chi.value_at_p ** 2)


def orbital_central_rep(sign, lam, phi, xi):
    r"""I_{Z_lam^sign}(phi, xi, s) as a rational function of t = p^-s.

    The minus integral is the plus integral of phi o theta with
    chi(p) t replaced by its inverse.
    """
    base = phi.base
    chi = chi_of(xi, base)
    if sign > 0:
        f = f_phi(phi, lam, chi)
        return tate_integral(f, central_variables(phi.n, chi, base))
    f = f_phi(phi.pullback_theta(), lam, chi)
    R = tate_integral(f, central_variables(phi.n, chi, base))
    return invert_plus_route(R, chi)


def central_data(X):
    r"""(sign, lam, g) with X = Z_lam^sign . g for an element of central
    type.

    Raises
    ------
    ValueError
        If q(X) is not central or X is not regular.
    """
    dd = descend(quotient_point(X))
    if not dd.is_central() or dd.factors[0].mult != X.n:
        raise ValueError('{} is not of central type.'.format(X))
    lam = -poly_coeffs(dd.factors[0].P)[0]
    rep, g = locate(X, dd)
    return rep.epsilon[0], lam, g


def orbital_central(X, phi, xi):
    r"""Orbital integral at a regular element of central type.

    Parameters
    ----------
    X: TildeGlElement or (sign, lam)
        Z_lam^+/- composed with some g in GL_n(Q), or the pair (sign, lam)
        naming Z_lam^sign itself.
    phi: LatticeCosetFunction
        Phase-free function on gl~_n, n <= 2.
    xi: UnramifiedCharacter or rational
        The character xi (or its value at p).

    Returns
    -------
    LaurentRational
        I_X(phi, xi, s) in t = p^-s.
    """
    if isinstance(X, TildeGlElement):
        if X.n != phi.n:
            raise ValueError('Element of size {} for a function on gl~_{}.'
                             .format(X.n, phi.n))
        sign, lam, g = central_data(X)
    else:
        sign, lam = X
        g = None
    value = orbital_central_rep(sign, as_fraction(lam), phi, xi)
    if g is None:
        return value
    return value * twist_factor(g, chi_of(xi, phi.base), phi.base)

