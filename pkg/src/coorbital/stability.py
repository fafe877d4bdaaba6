"""Hessian-based classification of ring equilibria: eigenvalue inertia,
Morse index, linearization eigenvalue counts, and the block
decomposition of the mirror-symmetric 1+5 Hessian.

The key fact is Sylvester-type: M**-1 H is similar to a congruence
transform of H (conjugate by M**(1/2)), so its eigenvalue sign counts
equal the inertia of H even though M**-1 H itself is not symmetric.
A Morse index of m for the restricted potential translates into 2m
imaginary eigenvalue pairs of the rotating-frame linearization, with
N - m positive and N - m negative ones.
"""

import math
from dataclasses import dataclass

import numpy as np

from .geometry import RingConfiguration, f_value, hessian, hessian_entry, mass_array


def inertia(S, tol=1e-8):
    """Eigenvalue sign counts (n_plus, n_zero, n_minus) of a symmetric matrix.

    Eigenvalues below tol * max|eigenvalue| in magnitude count as zero.
    Raises ValueError if S is not symmetric to 1e-10 relative."""
    S = np.asarray(S, dtype=float)
    scale = max(1.0, float(np.max(np.abs(S))))
    if float(np.max(np.abs(S - S.T))) > 1e-10 * scale:
        raise ValueError("inertia needs a symmetric matrix")
    w = np.linalg.eigvalsh(0.5 * (S + S.T))
    wmax = float(np.max(np.abs(w))) if w.size else 0.0
    cut = tol * wmax
    n_plus = int(np.sum(w > cut))
    n_minus = int(np.sum(w < -cut))
    return (n_plus, len(w) - n_plus - n_minus, n_minus)


@dataclass(frozen=True)
class StabilityReport:
    """Inertia of the Hessian and its linearization consequences.

    linearization_counts = (imaginary, positive, negative) eigenvalue
    counts of the rotating-frame linearization: (2m, N-m, N-m) for
    Morse index m.  is_stable_candidate means the Hessian is negative
    semidefinite with only the rotational zero mode, the necessary
    spectral condition for linear stability of the ring."""

    inertia_H: tuple
    morse_index: int
    linearization_counts: tuple
    is_stable_candidate: bool
    residual: float
    residual_warning: bool


def stability_report(config, m, zero_tol=1e-8):
    """Classify an equilibrium candidate (config, m), m positive.

    The inertia of H and of A = M**-1 H are computed independently and
    asserted equal; A's eigenvalues are real because A is similar to
    the symmetric M**(-1/2) H M**(-1/2).  A residual |F m| above 1e-6
    only sets a warning flag, so near-solutions can still be inspected.
    """
    mm = mass_array(m, config.n)
    if np.any(mm <= 0.0):
        raise ValueError("stability classification requires positive masses")
    H = hessian(config, mm)
    counts_H = inertia(H, zero_tol)

    A = H / mm[:, None]
    lam = np.linalg.eigvals(A)
    # eigenvalues of A are real up to rounding; classify the real parts
    lmax = float(np.max(np.abs(lam))) if lam.size else 0.0
    cut = zero_tol * lmax
    re = lam.real
    counts_A = (
        int(np.sum(re > cut)),
        int(np.sum(np.abs(re) <= cut)),
        int(np.sum(re < -cut)),
    )
    if counts_A != counts_H:
        raise ArithmeticError(
            f"inertia mismatch between H {counts_H} and M^-1 H {counts_A}; "
            "the configuration is too degenerate for the default tolerance"
        )

    res = 0.0
    for i in range(config.n):
        acc = 0.0
        for j in range(config.n):
            if j != i:
                acc += mm[j] * f_value(config.separation(i, j), config.s)
        res = max(res, abs(acc))

    n = config.n
    morse = counts_H[2]
    return StabilityReport(
        inertia_H=counts_H,
        morse_index=morse,
        linearization_counts=(2 * morse, n - morse, n - morse),
        is_stable_candidate=(morse == n - 1 and counts_H[1] == 1),
        residual=res,
        residual_warning=(res >= 1e-6),
    )


# Congruence matrix splitting the mirror-symmetric 1+5 Hessian: columns
# are the rotational direction, the two mirror-even combinations, and
# the two mirror-odd combinations.
SYM5_P = np.array(
    [
        [1, 1, 0, 1, 0],
        [1, 0, 1, 0, 1],
        [1, 0, 0, 0, 0],
        [1, 0, 1, 0, -1],
        [1, 1, 0, -1, 0],
    ],
    dtype=float,
)


@dataclass(frozen=True)
class Sym5Blocks:
    """The two 2x2 blocks of the decomposed symmetric 1+5 Hessian.

    With P = SYM5_P, the congruence gives
    P^T H P = diag(0, -H1, -H2); H1 and H2 are reported in the sign
    convention in which trace(H1) < 0 on the convex region."""

    H1: np.ndarray
    H2: np.ndarray
    P: np.ndarray


def sym5_blocks(theta1, theta2, m1, m2, m3, s=3.0):
    """Block decomposition of the Hessian for slots (t1, t2, 0, -t2, -t1)
    with mirror-symmetric masses (m1, m2, m3, m2, m1).

    Requires 0 < theta2 < theta1 < pi/2 (the convex frame).  The closed
    forms are cross-checked against P^T H P entrywise to 1e-10; the
    mirror-even combinations produce -H1 and the mirror-odd ones -H2.
    """
    t1 = float(theta1)
    t2 = float(theta2)
    if not 0.0 < t2 < t1 < 0.5 * math.pi:
        raise ValueError("block decomposition requires 0 < theta2 < theta1 < pi/2")
    if min(m1, m2, m3) <= 0.0:
        raise ValueError("masses must be positive")

    h12 = hessian_entry(t1 - t2, s)
    h13 = hessian_entry(t1, s)
    h14 = hessian_entry(t1 + t2, s)
    h15 = hessian_entry(2.0 * t1, s)
    h23 = hessian_entry(t2, s)
    h24 = hessian_entry(2.0 * t2, s)

    H1 = np.array(
        [
            [2.0 * m1 * (m2 * (h12 + h14) + m3 * h13), -2.0 * m1 * m2 * (h12 + h14)],
            [-2.0 * m1 * m2 * (h12 + h14), 2.0 * m2 * (m1 * (h12 + h14) + m3 * h23)],
        ]
    )
    H2 = np.array(
        [
            [
                2.0 * m1 * (2.0 * m1 * h15 + m2 * (h12 + h14) + m3 * h13),
                2.0 * m1 * m2 * (h14 - h12),
            ],
            [
                2.0 * m1 * m2 * (h14 - h12),
                2.0 * m2 * (m1 * (h12 + h14) + 2.0 * m2 * h24 + m3 * h23),
            ],
        ]
    )

    config = RingConfiguration((t1, t2, 0.0, -t2, -t1), s)
    H = hessian(config, (m1, m2, m3, m2, m1))
    G = SYM5_P.T @ H @ SYM5_P
    want = np.zeros((5, 5))
    want[1:3, 1:3] = -H1
    want[3:5, 3:5] = -H2
    scale = max(1.0, float(np.max(np.abs(H))))
    if float(np.max(np.abs(G - want))) > 1e-10 * scale:
        raise ArithmeticError("block decomposition failed its consistency check")

    return Sym5Blocks(H1=H1, H2=H2, P=SYM5_P.copy())


def sym5_det_H1(theta1, theta2, m1, m2, m3, s=3.0):
    """Closed-form determinant of the first block:

        4 ((h12 + h14)(h13 m1 + h23 m2) + h13 h23 m3) m1 m2 m3.
    """
    h12 = hessian_entry(theta1 - theta2, s)
    h13 = hessian_entry(theta1, s)
    h14 = hessian_entry(theta1 + theta2, s)
    h23 = hessian_entry(theta2, s)
    return 4.0 * ((h12 + h14) * (h13 * m1 + h23 * m2) + h13 * h23 * m3) * m1 * m2 * m3
