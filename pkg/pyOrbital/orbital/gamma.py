from fractions import Fraction

import numpy as np

from ..lfactors import LaurentRational, central_gamma, chi_of
from ..utils import as_fraction, DeskScaleError
from .fourier import fourier
from .tate import central_data, twist_factor, invert_plus_route
from ..invariants import TildeGlElement


def additive_shell_sum(a, depth, w, base):
    r"""int_{p^depth O} psi(a u) w^v(u) du for the additive measure
    (vol O = 1).

    The shell p^k O^x contributes p^-k (1 - 1/p) when k >= -v(a),
    -p^(-k-1) when k = -v(a) - 1 and nothing below.
    """
    p = Fraction(base.p)
    v = base.valuation(a)
    start = depth if a == 0 else max(depth, -v)
    q = w * (1 / p)
    out = q ** start * (1 - 1 / p) / (1 - q)
    if a != 0 and -v - 1 >= depth:
        k = -v - 1
        out = out - w ** k * p ** (-k - 1)
    return out


def _lattice_integral(a, depth, base):
    r"""int_{p^depth O} psi(a x) dx."""
    if base.valuation(a) >= -depth:
        return Fraction(base.p) ** (-depth)
    return Fraction(0)


def _dual_plus_n1(phi, lam, chi):
    r"""zeta_1 gamma^-1 int F(phi_lam)(X) chi(u)|u|^s dX at n = 1."""
    base = phi.base
    p = base.p
    transform = fourier(phi.translate(lam))
    w = LaurentRational.monomial(chi.value_at_p, 1)
    total = LaurentRational(0)
    for t in transform.terms:
        if any(c != 0 for c in t.center):
            raise ValueError('The gamma route needs a phase-free function.')
        phase = t.phase or (Fraction(0),) * 3
        mA, mv, mu = t.depth
        # <phase, X> = phase_A A + phase_v u + phase_u v
        scalar = (_lattice_integral(phase[0], mA, base) *
                  _lattice_integral(phase[2], mv, base))
        if scalar == 0:
            continue
        total = total + t.weight * scalar * additive_shell_sum(
            phase[1], mu, w, base
        )
    zeta = Fraction(p, p - 1)
    return total * zeta / central_gamma(1, 1, chi, base)


def _residue_counts(c, p):
    r"""Residues r of (a12, d, a21, u1, u2) modulo p, counted by the class
    <c, r> mod p.

    Rows: u a unit and delta^- a unit; u a unit and delta^- in pO; for u in
    pO^2, the first two counts of the a-part of r summed over the units u.
    """
    grid = np.indices((p,) * 5).reshape(5, -1).astype(np.int64)
    a12, d, a21, u1, u2 = grid
    delta = (u1 * u1 * a12 + u1 * u2 * d - u2 * u2 * a21) % p
    classes = (np.asarray(c, dtype=np.int64) @ grid) % p
    u_zero = (u1 == 0) & (u2 == 0)
    unit = ~u_zero & (delta != 0)
    zero = ~u_zero & (delta == 0)
    a_index = (a12 * p + d) * p + a21
    n_unit = np.zeros(p ** 3, dtype=np.int64)
    n_zero = np.zeros(p ** 3, dtype=np.int64)
    np.add.at(n_unit, a_index[unit], 1)
    np.add.at(n_zero, a_index[zero], 1)
    counts = np.zeros((4, p), dtype=np.int64)
    np.add.at(counts[0], classes[unit], 1)
    np.add.at(counts[1], classes[zero], 1)
    np.add.at(counts[2], classes[u_zero], n_unit[a_index[u_zero]])
    np.add.at(counts[3], classes[u_zero], n_zero[a_index[u_zero]])
    return counts


def _delta_minus_integral(c, w, base):
    r"""int_{O^5} psi(<c, x> / p) w^v(delta^-) dx over (a12, d, a21, u1, u2)
    with delta^- = u1^2 a12 + u1 u2 d - u2^2 a21 and c integral.

    On a residue cell with u a unit, delta^- runs through a coset of pO
    with density p^-2, so the cell gives p^-5 or p^-4 J with
    J = int_{pO} w^v(y) dy. The cells with u in pO^2 repeat the whole
    integral over u, scaled by p^-2 w^2. The result is rational, so the
    character sum reduces to the class 0 minus the mean of the others.
    """
    p = base.p
    q = Fraction(1, p)
    counts = _residue_counts([base.residue(a, 1) for a in c], p)
    x = [Fraction(int(row[0])) - Fraction(int(row[1:].sum()), p - 1)
         for row in counts]
    J = w * (q * (1 - q)) / (1 - w * q)
    cells = J * (x[1] * q ** 4) + x[0] * q ** 5
    tail = J * (x[3] * q ** 4) + x[2] * q ** 5
    return cells + (w ** 2) * q ** 2 * tail / (1 - (w ** 2) * q ** 2)


def _uniform_depth(depth, indices):
    values = {depth[i] for i in indices}
    if len(values) != 1:
        raise DeskScaleError('desk-scale limit: the gamma route at n = 2 '
                             'needs a common depth on A and on u.')
    return values.pop()


def _dual_plus_n2(phi, lam, chi):
    r"""zeta_2 gamma^-1 int F(phi_lam)(X) chi(delta^-)|delta^-|^s dX on
    gl~_2 (delta^-(Z_0^-) = -1).

    Coordinates: a11, a12, a21, a22, v1, v2, u1, u2. The phase pairs a12
    with slot 2, a21 with slot 1, u with slots 4-5 and v with slots 6-7.
    v and the trace a11 + a22 split off as lattice integrals; the other
    coordinates are scaled to O^5 and integrated by _delta_minus_integral.
    """
    base = phi.base
    p = base.p
    transform = fourier(phi.translate(lam))
    w = LaurentRational.monomial(chi.value_at_p, 1)
    total = LaurentRational(0)
    for t in transform.terms:
        if any(c != 0 for c in t.center):
            raise ValueError('The gamma route needs a phase-free function.')
        phase = t.phase or (Fraction(0),) * 8
        depth = t.depth
        M = _uniform_depth(depth, (0, 1, 2, 3))
        N = _uniform_depth(depth, (6, 7))
        scalar = (_lattice_integral(phase[6], depth[4], base) *
                  _lattice_integral(phase[7], depth[5], base) *
                  _lattice_integral((phase[0] + phase[3]) / 2, M, base))
        if scalar == 0:
            continue
        pM, pN = Fraction(p) ** M, Fraction(p) ** N
        beta = [pM * phase[2], pM * (phase[3] - phase[0]) / 2,
                pM * phase[1], pN * phase[4], pN * phase[5]]
        if any(base.valuation(b) < -1 for b in beta):
            raise DeskScaleError('desk-scale limit: the gamma route at n = 2 '
                                 'handles phases of conductor at most p.')
        c = [b * p for b in beta]
        value = _delta_minus_integral(c, w, base) * w ** (M + 2 * N)
        total = total + value * (t.weight * scalar / (pM ** 3 * pN ** 2))
    zeta = Fraction(p, p - 1) * Fraction(p ** 2, p ** 2 - 1)
    return total * zeta / central_gamma(2, 1, chi, base)


def orbital_via_gamma(X, phi, xi):
    r"""Orbital integral at Z_lam^+/- through the Fourier transform and
    the gamma factor.

    At n = 1 the transform of phi on gl~_1 is integrated against
    chi(u)|u|^s; at n = 2 the transform of phi_lam on gl~_2 is integrated
    against chi(delta^-)|delta^-|^s. Both are divided by the product of
    the gamma factors gamma(-is - i + 1, chi^-i). The minus integral is
    obtained through theta.

    Parameters
    ----------
    X: TildeGlElement or (sign, lam)
    phi: LatticeCosetFunction
        Phase-free function on gl~_n, n <= 2.
    xi: UnramifiedCharacter or rational

    Returns
    -------
    LaurentRational
    """
    base = phi.base
    chi = chi_of(xi, base)
    g = None
    if isinstance(X, TildeGlElement):
        sign, lam, g = central_data(X)
    else:
        sign, lam = X
    lam = as_fraction(lam)
    if phi.n > 2:
        raise DeskScaleError('desk-scale limit: the gamma route is computed '
                             'for n <= 2, got n={}.'.format(phi.n))
    if not phi.is_phase_free():
        raise ValueError('The gamma route needs a phase-free function.')
    route = _dual_plus_n1 if phi.n == 1 else _dual_plus_n2
    if sign > 0:
        value = route(phi, lam, chi)
    else:
        value = invert_plus_route(route(phi.pullback_theta(), lam, chi), chi)
    if g is not None:
        value = value * twist_factor(g, chi, base)
    return value
