import collections
import warnings

from ..descent import descend, locate
from ..invariants import TildeGlElement, quotient_point
from ..lfactors import LaurentRational, L_for_orbit, central_L, chi_of
from ..lfactors import local_degrees
from ..linalg.matrix import poly_coeffs
from ..padic import UnramifiedCharacter
from .cosets import LatticeCosetFunction
from .rs import orbital_rs
from .tate import orbital_central, twist_factor


OrbitalResult = collections.namedtuple('OrbitalResult',
                                       ['value', 'L', 'normalized'])
OrbitalResult.__doc__ = r"""Regularized orbital integral I_X, its
L-factor L_X and the normalized value I_X / L_X."""


def _is_unit_lattice(phi):
    if phi is None:
        return True
    return phi == LatticeCosetFunction.unit_lattice(phi.n, phi.base)


def _central_component(factor, sign, phi_i, xi, base):
    r"""I_{Z^sign_alpha}(phi_i) over F_i = Q[x]/(P_i)."""
    chi = chi_of(xi, base)
    m = factor.mult
    if factor.degree == 1:
        lam = -poly_coeffs(factor.P)[0]
        if phi_i is None:
            if m > 2:
                out = LaurentRational(1)
                for f in local_degrees(factor.P, base.p):
                    out = out * central_L(m, sign, chi, base, f)
                return out
            phi_i = LatticeCosetFunction.unit_lattice(m, base)
        return orbital_central((sign, lam), phi_i, xi)
    if not _is_unit_lattice(phi_i):
        raise ValueError('general Schwartz descent not supported: the '
                         'component over Q[x]/({}) must be the unit lattice.'
                         .format(factor.P.as_expr()))
    # O_{F_i} splits as a product of unramified local rings
    out = LaurentRational(1)
    for f in local_degrees(factor.P, base.p):
        out = out * central_L(m, sign, chi, base, f)
    return out


def orbital_general(X, phi, xi, components=None, check=True):
    r"""Regularized orbital integral of a regular element.

    Regular semisimple elements go to orbital_rs and elements of central
    type to orbital_central. Otherwise X = iota(X0, Z_1, ..., Z_k).g and
    the integral is the twist by g of the product of the integral over
    the closed orbit of X0 and the central integrals of the Z_i.

    Parameters
    ----------
    X: TildeGlElement
        Regular element.
    phi: LatticeCosetFunction
        Function on gl~_n. Outside the rs and central cases it must be
        the unit lattice indicator, unless `components` is given.
    xi: UnramifiedCharacter or rational
    components: (LatticeCosetFunction, list), optional
        Product function along the descent slice: a function on gl~_r for
        X0 and one function (or None for the unit lattice) per central
        factor.
    check: bool, optional
        If True, a warning is raised when I_X / L_X has a pole at s = 0.
        Default is True.

    Returns
    -------
    OrbitalResult
    """
    if not isinstance(X, TildeGlElement):
        raise TypeError('Wrong element type: {}. Should be: {}'.format(
            type(X).__name__, 'TildeGlElement'
        ))
    base = phi.base
    dd = descend(quotient_point(X))
    rep, g = locate(X, dd)
    if dd.k == 0:
        value = orbital_rs(X, phi, xi)
    elif dd.is_central() and dd.factors[0].degree == 1 and \
            components is None and (X.n <= 2 or not _is_unit_lattice(phi)):
        value = orbital_central(X, phi, xi)
    else:
        if components is None:
            if not _is_unit_lattice(phi):
                raise ValueError(
                    'general Schwartz descent not supported: only the unit '
                    'lattice or an explicit product along the slice is '
                    'accepted.'
                )
            phi0, phis = None, [None] * dd.k
        else:
            phi0, phis = components
            if len(phis) != dd.k:
                raise ValueError('Expected {} central components, got {}.'
                                 .format(dd.k, len(phis)))
        X0 = rep.provenance['X0']
        value = LaurentRational(1)
        if X0.n > 0:
            if phi0 is None:
                phi0 = LatticeCosetFunction.unit_lattice(X0.n, base)
            value = orbital_rs(X0, phi0, xi)
        for factor, sign, phi_i in zip(dd.factors, rep.epsilon, phis):
            value = value * _central_component(factor, sign, phi_i, xi, base)
        value = value * twist_factor(g, chi_of(xi, base), base)

    if not isinstance(xi, UnramifiedCharacter):
        xi = UnramifiedCharacter(xi, 'xi')
    L = L_for_orbit((dd, rep.epsilon), xi, base)
    normalized = value / L
    if check:
        holo = normalized.holo_at(0, base.p)
        if holo.order is not None and holo.order < 0:
            warnings.warn('I_X / L_X has a pole of order {} at s = 0 for {}.'
                          .format(-holo.order, X), UserWarning)
    return OrbitalResult(value, L, normalized)
