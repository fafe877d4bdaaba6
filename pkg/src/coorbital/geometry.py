"""Ring kernel functions and the effective potential of the coorbital
problem: N small bodies on the unit circle around a dominant center.

The pair interaction at angular separation delta is governed by

    f(delta) = sin(delta) * (r**-s - 1),    r = 2*|sin(delta/2)|,

where r is the chord distance and s the potential exponent (s = 3 is
the Newtonian case, s = 2 the vortex case).  f vanishes at separations
pi/3, pi and 5pi/3; these are the ring analogues of the triangular and
collinear Lagrange points.  Everything else in the package is built on
f, its derivative h, and the effective potential V below.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import CollisionError

TWO_PI = 2.0 * math.pi

# Pairwise separations below this are treated as collisions; the kernel
# and all derived quantities blow up like r**-s there.
COLLISION_TOL = 1e-9


def check_exponent(s):
    """Validate the potential exponent.  Only s >= 2 is meaningful."""
    s = float(s)
    if not (math.isfinite(s) and s >= 2.0):
        raise ValueError(f"potential exponent must satisfy s >= 2, got {s}")
    return s


def reduce_angle(delta):
    """Fold an angle difference into (-pi, pi]."""
    d = math.remainder(float(delta), TWO_PI)
    if d <= -math.pi:
        d += TWO_PI
    return d


def reduce_angle_full(theta):
    """Fold an angle into [0, 2*pi)."""
    t = math.fmod(float(theta), TWO_PI)
    if t < 0.0:
        t += TWO_PI
    if t >= TWO_PI:
        t = 0.0
    return t


def chord_distance(delta):
    """Chord length 2*|sin(delta/2)| between unit-circle points, in [0, 2]."""
    return 2.0 * abs(math.sin(0.5 * reduce_angle(delta)))


def f_value(delta, s):
    """The ring kernel f(delta) = sin(delta) * (r**-s - 1).

    Odd in delta.  Zero exactly where the chord distance is 1
    (separation pi/3 or 5pi/3) or where sin vanishes (separation pi).
    Raises CollisionError within COLLISION_TOL of zero separation.
    """
    s = check_exponent(s)
    d = reduce_angle(delta)
    if abs(d) < COLLISION_TOL:
        raise CollisionError(f"angular separation {delta!r} is below the collision threshold")
    r = 2.0 * abs(math.sin(0.5 * d))
    return math.sin(d) * (r ** -s - 1.0)


def f_grid(delta, s):
    """Vectorized f over an array of separations.

    Collision entries become NaN instead of raising, so that implicit
    curve tracing can mask them cell by cell.
    """
    s = check_exponent(s)
    d = np.remainder(np.asarray(delta, dtype=float) + math.pi, TWO_PI) - math.pi
    r = 2.0 * np.abs(np.sin(0.5 * d))
    with np.errstate(divide="ignore", invalid="ignore"):
        out = np.sin(d) * (r ** -s - 1.0)
    return np.where(np.abs(d) < COLLISION_TOL, np.nan, out)


def hessian_entry(delta, s):
    """h(delta) = f'(delta) in chord form:

        r**2/2 - 1 + (s-2)/(4 r**(s-2)) - (s-1)/r**s.

    Even in delta; strictly increasing on (0, pi)."""
    s = check_exponent(s)
    d = reduce_angle(delta)
    if abs(d) < COLLISION_TOL:
        raise CollisionError(f"angular separation {delta!r} is below the collision threshold")
    r = 2.0 * abs(math.sin(0.5 * d))
    return 0.5 * r * r - 1.0 + (s - 2.0) / (4.0 * r ** (s - 2.0)) - (s - 1.0) / r ** s


def hessian_entry_trig(delta, s):
    """Trigonometric form of hessian_entry; agrees to rounding:

        -cos(delta) - (s + (s-2) cos(delta)) / (2**(s+1) |sin(delta/2)|**s).
    """
    s = check_exponent(s)
    d = reduce_angle(delta)
    if abs(d) < COLLISION_TOL:
        raise CollisionError(f"angular separation {delta!r} is below the collision threshold")
    c = math.cos(d)
    return -c - (s + (s - 2.0) * c) / (2.0 ** (s + 1.0) * abs(math.sin(0.5 * d)) ** s)


@dataclass(frozen=True)
class RingConfiguration:
    """Angular positions of the N ring bodies plus the exponent s.

    Angles are reduced to [0, 2*pi) at construction.  Rejects N < 2,
    s < 2, and any pairwise separation below COLLISION_TOL.
    """

    thetas: tuple
    s: float = 3.0

    def __post_init__(self):
        object.__setattr__(self, "s", check_exponent(self.s))
        ths = tuple(reduce_angle_full(t) for t in self.thetas)
        if len(ths) < 2:
            raise ValueError("a ring configuration needs at least two bodies")
        object.__setattr__(self, "thetas", ths)
        order = sorted(ths)
        gaps = [b - a for a, b in zip(order, order[1:])]
        gaps.append(order[0] + TWO_PI - order[-1])
        if min(gaps) < COLLISION_TOL:
            raise CollisionError("two ring bodies are closer than the collision threshold")

    @property
    def n(self):
        return len(self.thetas)

    def separation(self, i, j):
        """theta_i - theta_j reduced to (-pi, pi]."""
        return reduce_angle(self.thetas[i] - self.thetas[j])

    def as_array(self):
        return np.array(self.thetas, dtype=float)


@dataclass(frozen=True)
class MassVector:
    """The N small masses."""

    m: tuple

    def __post_init__(self):
        object.__setattr__(self, "m", tuple(float(v) for v in self.m))
        if len(self.m) == 0:
            raise ValueError("empty mass vector")

    @property
    def n(self):
        return len(self.m)

    @property
    def positive(self):
        return all(v > 0.0 for v in self.m)

    def as_array(self):
        return np.array(self.m, dtype=float)


def mass_array(m, n):
    """Coerce a MassVector or plain sequence to an ndarray of length n."""
    arr = np.asarray(m.m if isinstance(m, MassVector) else m, dtype=float)
    if arr.shape != (n,):
        raise ValueError(f"expected {n} masses, got shape {arr.shape}")
    return arr


def pair_potential(r, s):
    """Effective interaction of one pair at chord distance r (unit masses).

    r**(2-s)/(s-2) + r**2/2 for s > 2.  The vortex branch is the s -> 2
    limit after dropping the constant 1/(s-2), i.e. r**2/2 - log(r);
    the minus sign on the log keeps the derivative identity
    d/d(delta) pair(r(delta)) = -f(delta) valid for every s >= 2.
    """
    s = check_exponent(s)
    if r <= 0.0:
        raise CollisionError("zero chord distance")
    if s == 2.0:
        return 0.5 * r * r - math.log(r)
    return r ** (2.0 - s) / (s - 2.0) + 0.5 * r * r


def hall_potential(config, m):
    """Effective potential V = sum over pairs of m_i m_j pair_potential.

    Critical points of V on the circle are exactly the coorbital
    central configurations."""
    mm = mass_array(m, config.n)
    total = 0.0
    for i in range(config.n):
        for j in range(i + 1, config.n):
            r = chord_distance(config.separation(i, j))
            total += mm[i] * mm[j] * pair_potential(r, config.s)
    return total


def potential_gradient(config, m):
    """Angular gradient: dV/dtheta_i = -m_i * sum_{j != i} m_j f(theta_i - theta_j).

    Components sum to zero (rotation invariance)."""
    mm = mass_array(m, config.n)
    g = np.zeros(config.n)
    for i in range(config.n):
        acc = 0.0
        for j in range(config.n):
            if j != i:
                acc += mm[j] * f_value(config.separation(i, j), config.s)
        g[i] = -mm[i] * acc
    return g


def hessian(config, m):
    """Angular Hessian of V: off-diagonal H[i, j] = m_i m_j h(theta_i - theta_j),
    diagonal forced by zero row sums.  The all-ones vector is always in
    the kernel (rotation invariance)."""
    mm = mass_array(m, config.n)
    n = config.n
    H = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            v = mm[i] * mm[j] * hessian_entry(config.separation(i, j), config.s)
            H[i, j] = v
            H[j, i] = v
    for i in range(n):
        H[i, i] = -(H[i].sum() - H[i, i])
    return H


def regular_ngon(n, s=3.0):
    """Equally spaced ring of n bodies; an equilibrium for equal masses."""
    if n < 2:
        raise ValueError("need at least two bodies")
    return RingConfiguration(tuple(TWO_PI * k / n for k in range(n)), s)
