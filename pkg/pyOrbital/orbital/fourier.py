from fractions import Fraction

from ..utils import format_rational
from .cosets import CosetTerm


def self_dual_scale(phi):
    r"""Exponent e such that the self-dual measure is p^-e times the
    coordinate measure (vol O = 1 on every coordinate)."""
    _, weights = phi.pairing_layout()
    total = sum(phi.base.valuation(w) for w in weights)
    if total % 2:
        raise ValueError(
            'The self-dual measure of this pairing is not rational (total '
            'weight valuation {}).'.format(total)
        )
    return total // 2


def dual_depths(phi, depth):
    r"""Depths of the dual box of prod p^depth[i] O under the pairing."""
    perm, weights = phi.pairing_layout()
    out = [0] * phi.dim
    for i, w in enumerate(weights):
        out[perm[i]] = -depth[i] - phi.base.valuation(w)
    return tuple(out)


def fourier(phi):
    r"""Fourier transform for the ambient pairing and the self-dual
    measure, with the unramified additive character psi.

    A term w psi(<a, .>) 1_{c + L} is sent to
    w vol(L) psi(<c, a>) psi(<c, .>) 1_{-a + L^dual}.

    Parameters
    ----------
    phi: LatticeCosetFunction

    Returns
    -------
    LatticeCosetFunction
        Phase-decorated in general; F F phi(X) = phi(-X).

    Raises
    ------
    ValueError
        If psi(<c, a>) is not rational (<c, a> not integral).
    """
    p = Fraction(phi.base.p)
    scale = self_dual_scale(phi)
    out = []
    for t in phi.terms:
        cross = Fraction(0) if t.phase is None else phi.pair(t.center,
                                                             t.phase)
        if not phi.base.is_integral(cross):
            raise ValueError(
                'Non-rational additive phase: psi({}) in the transform of a '
                'phase-decorated coset.'.format(format_rational(cross))
            )
        vol = p ** (-sum(t.depth) - scale)
        center = (tuple(-a for a in t.phase) if t.phase is not None
                  else None)
        out.append(CosetTerm(t.weight * vol, center,
                             dual_depths(phi, t.depth), t.center))
    return phi._like(out).canonicalize()
