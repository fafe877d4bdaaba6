"""The antisymmetric mass-coefficient matrix of the ring problem, its
kernel and Pfaffian, and the reflection-symmetric configuration
families.

A configuration is a central configuration for masses m exactly when
F m = 0, with F[i, j] = f(theta_i - theta_j).  Because F is
antisymmetric, its rank is even, so the kernel dimension has the same
parity as N; for even N a nontrivial kernel appears exactly on the zero
set of the Pfaffian.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import OrderingError
from .geometry import RingConfiguration, f_value, mass_array


def build_F(config):
    """Mass-coefficient matrix F[i, j] = f(theta_i - theta_j).

    Antisymmetric with zero diagonal; kernel vectors are the mass
    solutions of the ring equilibrium equations."""
    n = config.n
    F = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            v = f_value(config.separation(i, j), config.s)
            F[i, j] = v
            F[j, i] = -v
    return F


def residual(F, m):
    """Max-norm of F m."""
    F = np.asarray(F, dtype=float)
    mm = mass_array(m, F.shape[0])
    return float(np.max(np.abs(F @ mm)))


def pfaffian(a):
    """Pfaffian of an even-dimensional antisymmetric matrix by first-row
    expansion.

    For N=4 this is a12*a34 - a13*a24 + a14*a23.  Generic over the
    element type: floats, numpy scalars, and interval scalars all work,
    so the same code path serves both numerics and certification.
    """
    rows = a.tolist() if hasattr(a, "tolist") else [list(r) for r in a]
    n = len(rows)
    if n % 2 != 0:
        raise ValueError("Pfaffian is defined for even dimension only")
    return _pf_expand(rows, list(range(n)))


def _pf_expand(rows, idx):
    if not idx:
        return 1.0
    if len(idx) == 2:
        return rows[idx[0]][idx[1]]
    i0 = idx[0]
    rest = idx[1:]
    total = None
    negate = False
    for pos, k in enumerate(rest):
        term = rows[i0][k] * _pf_expand(rows, rest[:pos] + rest[pos + 1:])
        if negate:
            term = -term
        total = term if total is None else total + term
        negate = not negate
    return total


@dataclass(frozen=True)
class KernelBasis:
    """Orthonormal basis of the numerical kernel of F.

    vectors has shape (dim, N).  tolerance is the effective relative
    singular-value cutoff actually used, so that every basis vector v
    satisfies |F v| <= tolerance * |F| * |v|.
    """

    vectors: np.ndarray
    singular_values: np.ndarray
    tolerance: float

    @property
    def dimension(self):
        return self.vectors.shape[0]


def mass_kernel(F, tol=1e-9):
    """Numerical kernel of F via SVD.

    Singular values below tol * (largest singular value) count as zero.
    Singular values of a real antisymmetric matrix come in equal pairs,
    so the numerical rank is rounded down to even when a pair straddles
    the cutoff; this keeps the kernel dimension parity equal to N's.
    """
    if not 0.0 < tol <= 1e-4:
        raise ValueError(f"kernel tolerance must be in (0, 1e-4], got {tol}")
    F = np.asarray(F, dtype=float)
    n = F.shape[0]
    _, sv, vt = np.linalg.svd(F)
    smax = float(sv[0]) if n else 0.0
    if smax == 0.0:
        return KernelBasis(vt, sv, tol)
    rank = int(np.sum(sv > tol * smax))
    if rank % 2:
        rank -= 1
    eff = tol
    if rank < n and sv[rank] / smax > tol:
        eff = float(sv[rank] / smax) * (1.0 + 1e-12)
    return KernelBasis(vt[rank:].copy(), sv, eff)


@dataclass(frozen=True)
class PositiveMassRegion:
    """Where a kernel family is componentwise positive.

    kind "sign": one-dimensional kernel; sign is +1 if v > 0, -1 if
    -v > 0, and the kind degrades to "empty" otherwise.
    kind "interval": two-dimensional kernel spanned by (v1, v2); the
    open interval (alpha_lo, alpha_hi) of mixing parameters with
    v1 + alpha*v2 > 0 componentwise, None meaning unbounded.
    """

    kind: str
    sign: int = 0
    alpha_lo: float | None = None
    alpha_hi: float | None = None

    @property
    def is_empty(self):
        return self.kind == "empty"


def positive_mass_region(vectors):
    """Positivity analysis of a 1- or 2-dimensional kernel basis.

    The two-vector case solves the linear inequalities
    v1[i] + alpha*v2[i] > 0 exactly.  Dimensions >= 3 (or 0) are not
    analyzed and raise ValueError."""
    vs = [np.asarray(v, dtype=float) for v in vectors]
    if len(vs) == 1:
        v = vs[0]
        if np.all(v > 0.0):
            return PositiveMassRegion("sign", sign=1)
        if np.all(v < 0.0):
            return PositiveMassRegion("sign", sign=-1)
        return PositiveMassRegion("empty")
    if len(vs) != 2:
        raise ValueError("positive-mass analysis supports kernel dimension 1 or 2 only")
    v1, v2 = vs
    lo = -math.inf
    hi = math.inf
    for a, b in zip(v1, v2):
        if b == 0.0:
            if a <= 0.0:
                return PositiveMassRegion("empty")
        elif b > 0.0:
            lo = max(lo, -a / b)
        else:
            hi = min(hi, -a / b)
    if lo >= hi:
        return PositiveMassRegion("empty")
    return PositiveMassRegion(
        "interval",
        alpha_lo=None if lo == -math.inf else lo,
        alpha_hi=None if hi == math.inf else hi,
    )


# Reflection-symmetric families.  Free angles may be negative (mirror
# labelings); each must avoid 0 and +-pi, and magnitudes must be
# pairwise distinct so that no body lands on its own or another's
# mirror image.

FAMILY_FREE_COUNT = {
    "type1-1p4": 1,
    "type2-1p4": 2,
    "type1-1p6": 2,
    "type2-1p6": 3,
    "type2-1p8": 4,
    "sym-1p5": 2,
}

FAMILY_SIZE = {
    "type1-1p4": 4,
    "type2-1p4": 4,
    "type1-1p6": 6,
    "type2-1p6": 6,
    "type2-1p8": 8,
    "sym-1p5": 5,
}

# index pairs swapped by the reflection, per family kind
FAMILY_MIRROR_PAIRS = {
    "type1-1p4": ((1, 3),),
    "type2-1p4": ((0, 3), (1, 2)),
    "type1-1p6": ((1, 5), (2, 4)),
    "type2-1p6": ((0, 5), (1, 4), (2, 3)),
    "type2-1p8": ((0, 7), (1, 6), (2, 5), (3, 4)),
    "sym-1p5": ((0, 4), (1, 3)),
}


@dataclass(frozen=True)
class SymmetricFamily:
    """A reflection-symmetric family of ring configurations.

    kind selects the slot layout; free_angles fills it:
      type1-1p4:  (0, a, pi, -a)            free (a,)
      type2-1p4:  (a, b, -b, -a)            free (a, b)
      type1-1p6:  (0, a, b, pi, -b, -a)     free (a, b)
      type2-1p6:  (a, b, c, -c, -b, -a)     free (a, b, c)
      type2-1p8:  (a, b, c, d, -d, -c, -b, -a)
      sym-1p5:    (a, b, 0, -b, -a)         free (a, b)
    """

    kind: str
    free_angles: tuple

    def __post_init__(self):
        if self.kind not in FAMILY_FREE_COUNT:
            raise ValueError(f"unknown family kind {self.kind!r}")
        angles = tuple(float(t) for t in self.free_angles)
        if len(angles) != FAMILY_FREE_COUNT[self.kind]:
            raise OrderingError(
                f"{self.kind} takes {FAMILY_FREE_COUNT[self.kind]} free angles, got {len(angles)}"
            )
        object.__setattr__(self, "free_angles", angles)

    @property
    def n(self):
        return FAMILY_SIZE[self.kind]


def _check_free_angles(kind, angles):
    mags = []
    for t in angles:
        if not -math.pi < t < math.pi or t == 0.0:
            raise OrderingError(
                f"free angles of {kind} must lie in (-pi, pi) excluding 0, got {t}"
            )
        mags.append(abs(t))
    for i in range(len(mags)):
        for j in range(i + 1, len(mags)):
            if mags[i] == mags[j]:
                raise OrderingError(
                    f"free angles of {kind} must have distinct magnitudes, got {angles}"
                )


def family_slots(fam):
    """Full slot angles of the family (before reduction to [0, 2*pi))."""
    a = fam.free_angles
    _check_free_angles(fam.kind, a)
    if fam.kind == "type1-1p4":
        return (0.0, a[0], math.pi, -a[0])
    if fam.kind == "type2-1p4":
        return (a[0], a[1], -a[1], -a[0])
    if fam.kind == "type1-1p6":
        return (0.0, a[0], a[1], math.pi, -a[1], -a[0])
    if fam.kind == "type2-1p6":
        return (a[0], a[1], a[2], -a[2], -a[1], -a[0])
    if fam.kind == "type2-1p8":
        return (a[0], a[1], a[2], a[3], -a[3], -a[2], -a[1], -a[0])
    return (a[0], a[1], 0.0, -a[1], -a[0])


def expand_family(fam, s=3.0):
    """RingConfiguration for the family; collisions propagate."""
    return RingConfiguration(family_slots(fam), s)


def mass_mirror_defect(kind, m):
    """Largest relative mirror-pair mass difference, the asymmetry measure."""
    mm = np.asarray(m.m if hasattr(m, "m") else m, dtype=float)
    worst = 0.0
    for i, j in FAMILY_MIRROR_PAIRS[kind]:
        denom = max(abs(mm[i]), abs(mm[j]))
        if denom > 0.0:
            worst = max(worst, abs(mm[i] - mm[j]) / denom)
    return worst


def sym5_reduced_system(theta1, theta2, s=3.0):
    """Independent equilibrium equations of the mirror-symmetric 1+5 ring.

    For slots (t1, t2, 0, -t2, -t1) and masses (m1, m2, m3, m2, m1) the
    five equations F m = 0 collapse to two; this returns the 2x3
    coefficient matrix on (m1, m2, m3):

        [ f15        f12 + f14   f13 ]
        [ f14 - f12  f24         f23 ]

    with f1k = f(t1 - t_k) etc.  Valid for t1, t2 in (0, pi), t1 != t2.
    """
    t1 = float(theta1)
    t2 = float(theta2)
    if not (0.0 < t1 < math.pi and 0.0 < t2 < math.pi):
        raise ValueError("symmetric 1+5 angles must lie in (0, pi)")
    if t1 == t2:
        raise ValueError("symmetric 1+5 angles must be distinct")
    f12 = f_value(t1 - t2, s)
    f13 = f_value(t1, s)
    f14 = f_value(t1 + t2, s)
    f15 = f_value(2.0 * t1, s)
    f23 = f_value(t2, s)
    f24 = f_value(2.0 * t2, s)
    return np.array([[f15, f12 + f14, f13], [f14 - f12, f24, f23]])


def zero_mass_values(theta1, theta2, s=3.0):
    """The three 2x2 minors (Z1, Z2, Z3) of the reduced 1+5 system.

    Z_k = 0 is necessary for a kernel mass vector with m_k = 0; their
    zero curves split the plane into regions of constant mass-sign
    pattern."""
    (f15, f12p14, f13), (f14m12, f24, f23) = sym5_reduced_system(theta1, theta2, s)
    z1 = f23 * f12p14 - f13 * f24
    z2 = f15 * f23 - f13 * f14m12
    z3 = f15 * f24 - f12p14 * f14m12
    return z1, z2, z3
