"""Mutual-distance formulation of the ring problem, used as an
independent cross-check on the angular one.

Three chords r_ab, r_bc, r_ac are realizable on a common unit circle
exactly when the polynomial E below vanishes (it is 16 A^2 (R^2 - 1)
for circumradius R and triangle area A).  Critical points of the
effective potential subject to the E-constraints give the same central
configurations as the angular equations; for N = 3 the Lagrange
multiplier can be eliminated by hand, which is what the eliminated
residuals implement.
"""

import numpy as np

from .geometry import chord_distance, check_exponent, mass_array


def concyclicity_E(r_ab, r_bc, r_ac):
    """Unit-circle constraint polynomial of three chord lengths:

        (r_ab r_bc r_ac)^2 + r_ab^4 + r_bc^4 + r_ac^4
        - 2 r_ab^2 r_bc^2 - 2 r_ab^2 r_ac^2 - 2 r_bc^2 r_ac^2.

    Zero iff the three distances occur between three points on a common
    unit circle."""
    a2 = r_ab * r_ab
    b2 = r_bc * r_bc
    c2 = r_ac * r_ac
    return a2 * b2 * c2 + a2 * a2 + b2 * b2 + c2 * c2 - 2.0 * (a2 * b2 + a2 * c2 + b2 * c2)


def w_coefficient(mi, mj, r, s):
    """Pair coefficient W_ij = m_i m_j (1 - r**-s) of the distance equations."""
    check_exponent(s)
    return mi * mj * (1.0 - r ** -s)


def _brackets(r12, r13, r23):
    """The three E-gradient factors that multiply the Lagrange multiplier."""
    a2 = r12 * r12
    b2 = r13 * r13
    c2 = r23 * r23
    B12 = b2 * c2 + 2.0 * a2 - 2.0 * b2 - 2.0 * c2
    B13 = a2 * c2 + 2.0 * b2 - 2.0 * a2 - 2.0 * c2
    B23 = a2 * b2 + 2.0 * c2 - 2.0 * a2 - 2.0 * b2
    return B12, B13, B23


def n3_lagrange_residuals(r12, r13, r23, m, lam, s=3.0):
    """The three constrained critical-point residuals of the N=3 ring,

        rho_ij = r_ij (W_ij + 2 lambda B_ij),

    where B_ij is the derivative of the concyclicity constraint with
    respect to r_ij^2 up to a common factor.  All three vanish at a
    central configuration for the right multiplier."""
    mm = mass_array(m, 3)
    B12, B13, B23 = _brackets(r12, r13, r23)
    w12 = w_coefficient(mm[0], mm[1], r12, s)
    w13 = w_coefficient(mm[0], mm[2], r13, s)
    w23 = w_coefficient(mm[1], mm[2], r23, s)
    return (
        r12 * (w12 + 2.0 * lam * B12),
        r13 * (w13 + 2.0 * lam * B13),
        r23 * (w23 + 2.0 * lam * B23),
    )


def n3_eliminated_residuals(r12, r23, r13, m, s=3.0):
    """The two N=3 residuals left after eliminating the multiplier
    through the r13 equation:

        rho_1 = r12 (W12 - W13 B12 / B13)
        rho_2 = r23 (W23 - W13 B23 / B13)

    Raises ValueError when the eliminating factor B13 is degenerate."""
    mm = mass_array(m, 3)
    B12, B13, B23 = _brackets(r12, r13, r23)
    scale = r12 * r12 * r23 * r23 + 2.0 * (r12 * r12 + r13 * r13 + r23 * r23)
    if abs(B13) <= 1e-12 * scale:
        raise ValueError("degenerate elimination: the r13 constraint factor vanishes")
    w12 = w_coefficient(mm[0], mm[1], r12, s)
    w13 = w_coefficient(mm[0], mm[2], r13, s)
    w23 = w_coefficient(mm[1], mm[2], r23, s)
    lam_term = w13 / B13
    return (
        r12 * (w12 - lam_term * B12),
        r23 * (w23 - lam_term * B23),
    )


def distances_from_config(config):
    """All pairwise chord distances of a configuration, keyed (i, j), i < j."""
    out = {}
    for i in range(config.n):
        for j in range(i + 1, config.n):
            out[(i, j)] = chord_distance(config.separation(i, j))
    return out


def max_E_residual(config):
    """Largest |E| over all triples of the configuration; a consistency
    check that the stored angles really describe concyclic points."""
    d = distances_from_config(config)
    worst = 0.0
    n = config.n
    for a in range(n):
        for b in range(a + 1, n):
            for c in range(b + 1, n):
                worst = max(worst, abs(concyclicity_E(d[(a, b)], d[(b, c)], d[(a, c)])))
    return worst
