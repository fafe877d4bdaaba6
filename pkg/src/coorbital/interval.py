"""Outward-rounded interval arithmetic for the certification paths.

Self-contained on purpose: closed float intervals whose operations are
widened by one ulp past the worst-case rounding of the underlying
float op (two ulps for libm trig).  Just enough machinery to certify
signs of the ring kernel quantities; not a general interval library.
"""

import math
from dataclasses import dataclass

from .errors import CertificationError, CollisionError
from .geometry import COLLISION_TOL

_INF = math.inf
_TWO_PI_F = 2.0 * math.pi
_HALF_PI_F = 0.5 * math.pi


def _down(x):
    return math.nextafter(x, -_INF)


def _up(x):
    return math.nextafter(x, _INF)


class Interval:
    """Closed interval [lo, hi] with outward-rounded arithmetic."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi=None):
        lo = float(lo)
        hi = lo if hi is None else float(hi)
        if math.isnan(lo) or math.isnan(hi) or lo > hi:
            raise ValueError(f"bad interval endpoints [{lo}, {hi}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    def __setattr__(self, name, value):
        raise AttributeError("intervals are immutable")

    def __repr__(self):
        return f"Interval({self.lo!r}, {self.hi!r})"

    @property
    def width(self):
        return self.hi - self.lo

    @property
    def mid(self):
        return 0.5 * (self.lo + self.hi)

    @property
    def mag(self):
        return max(abs(self.lo), abs(self.hi))

    def contains(self, x):
        return self.lo <= x <= self.hi

    @property
    def contains_zero(self):
        return self.lo <= 0.0 <= self.hi

    @property
    def strictly_positive(self):
        return self.lo > 0.0

    @property
    def strictly_negative(self):
        return self.hi < 0.0

    # -- arithmetic --------------------------------------------------

    def __neg__(self):
        return Interval(-self.hi, -self.lo)

    def __abs__(self):
        if self.lo >= 0.0:
            return self
        if self.hi <= 0.0:
            return Interval(-self.hi, -self.lo)
        return Interval(0.0, max(-self.lo, self.hi))

    def __add__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return Interval(_down(self.lo + o.lo), _up(self.hi + o.hi))

    __radd__ = __add__

    def __sub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return Interval(_down(self.lo - o.hi), _up(self.hi - o.lo))

    def __rsub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return Interval(_down(o.lo - self.hi), _up(o.hi - self.lo))

    def __mul__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        p = (self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi)
        return Interval(_down(min(p)), _up(max(p)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if o.lo <= 0.0 <= o.hi:
            raise ZeroDivisionError(f"interval denominator {o!r} straddles zero")
        q = (self.lo / o.lo, self.lo / o.hi, self.hi / o.lo, self.hi / o.hi)
        return Interval(_down(min(q)), _up(max(q)))

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o.__truediv__(self)

    def powi(self, n):
        """Integer power, sharp on the even-power sign straddle."""
        if not isinstance(n, int):
            raise TypeError("integer exponent required")
        if n < 0:
            return Interval(1.0, 1.0) / self.powi(-n)
        if n == 0:
            return Interval(1.0, 1.0)
        if n % 2 == 0:
            big = max(abs(self.lo), abs(self.hi))
            small = 0.0 if self.lo <= 0.0 <= self.hi else min(abs(self.lo), abs(self.hi))
            return Interval(_pow_down(small, n), _pow_up(big, n))
        lo = _pow_down(self.lo, n) if self.lo >= 0.0 else -_pow_up(-self.lo, n)
        hi = _pow_up(self.hi, n) if self.hi >= 0.0 else -_pow_down(-self.hi, n)
        return Interval(lo, hi)

    def sqrt(self):
        if self.lo < 0.0:
            raise ValueError(f"sqrt of interval {self!r} reaching below zero")
        return Interval(max(0.0, _down(math.sqrt(self.lo))), _up(math.sqrt(self.hi)))

    # -- trig --------------------------------------------------------

    def sin(self):
        a, b = self.lo, self.hi
        if b - a >= _TWO_PI_F:
            return Interval(-1.0, 1.0)
        sa, sb = math.sin(a), math.sin(b)
        lo = _down(_down(min(sa, sb)))
        hi = _up(_up(max(sa, sb)))
        # any critical point possibly inside [a, b] pins that side to +-1;
        # the 1e-9 margin makes the containment test itself conservative
        d = 1e-9
        if math.floor((b - _HALF_PI_F + d) / _TWO_PI_F) >= math.ceil(
            (a - _HALF_PI_F - d) / _TWO_PI_F
        ):
            hi = 1.0
        if math.floor((b + _HALF_PI_F + d) / _TWO_PI_F) >= math.ceil(
            (a + _HALF_PI_F - d) / _TWO_PI_F
        ):
            lo = -1.0
        return Interval(max(lo, -1.0), min(hi, 1.0))

    def cos(self):
        return (self + HALF_PI).sin()


def _coerce(x):
    if isinstance(x, Interval):
        return x
    if isinstance(x, (int, float)):
        return Interval(float(x), float(x))
    return None


def _pow_up(x, n):
    r = 1.0
    for _ in range(n):
        r = _up(r * x)
    return r


def _pow_down(x, n):
    r = 1.0
    for _ in range(n):
        r = max(0.0, _down(r * x))
    return r


# true pi lies strictly between the nearest double and its successor
PI = Interval(math.pi, _up(math.pi))
HALF_PI = Interval(0.5 * PI.lo, 0.5 * PI.hi)
TWO_PI = Interval(2.0 * PI.lo, 2.0 * PI.hi)


def rational_pi(num, den=1):
    """Tight enclosure of num*pi/den for integer num, den."""
    if not isinstance(num, int) or not isinstance(den, int) or den == 0:
        raise ValueError("rational_pi wants integers with den != 0")
    return (PI * num) / den


def as_interval(x):
    iv = _coerce(x)
    if iv is None:
        raise TypeError(f"cannot interpret {x!r} as an interval")
    return iv


def _pow_s(r, s):
    """r^s for r > 0 and s integer or half-integer."""
    n = round(s)
    if abs(s - n) < 1e-12:
        return r.powi(int(n))
    n2 = round(2.0 * s)
    if abs(2.0 * s - n2) < 1e-12:
        return r.powi((int(n2) - 1) // 2) * r.sqrt()
    raise ValueError(
        f"certified evaluation supports integer and half-integer exponents, not s={s}"
    )


def interval_separation(theta):
    """Enclosure of the chord 2|sin(theta/2)|; CollisionError when the
    enclosure reaches the collision set."""
    th = as_interval(theta)
    r = abs((th * 0.5).sin()) * 2.0
    if r.lo < COLLISION_TOL:
        raise CollisionError(f"separation enclosure {r!r} reaches a collision")
    return r


def interval_f(theta, s=3.0):
    """Certified enclosure of sin(theta) (r^-s - 1), r the chord."""
    th = as_interval(theta)
    r = interval_separation(th)
    return th.sin() * (Interval(1.0, 1.0) / _pow_s(r, s) - 1.0)


def interval_h(theta, s=3.0):
    """Certified enclosure of the pairwise stiffness

        r^2/2 - 1 + (s-2)/(4 r^(s-2)) - (s-1)/r^s.
    """
    th = as_interval(theta)
    r = interval_separation(th)
    out = r.powi(2) * 0.5 - 1.0
    if s != 2.0:
        out = out + Interval(s - 2.0) / (_pow_s(r, s - 2.0) * 4.0)
    return out - Interval(s - 1.0) / _pow_s(r, s)


def certified_sign(iv):
    """+1, -1, or 0 when the sign cannot be decided from the enclosure."""
    if iv.lo > 0.0:
        return 1
    if iv.hi < 0.0:
        return -1
    return 0


@dataclass(frozen=True)
class CertifiedSign:
    """Sign decision together with the enclosure that produced it."""

    value: int
    enclosure: Interval

    @classmethod
    def of(cls, iv):
        return cls(value=certified_sign(iv), enclosure=iv)


def certify_bracket(fn, a, b, max_depth=48):
    """Certified root bracket by sign bisection.

    fn maps an Interval to an Interval.  The endpoint signs must
    certify strictly opposite; afterwards the bracket is halved while
    a midpoint sign can still be certified (a near-root midpoint whose
    enclosure straddles zero ends the shrink).  For continuous fn the
    returned interval contains a zero."""
    lo, hi = float(a), float(b)
    if not lo < hi:
        raise ValueError("need a < b")
    s_lo = certified_sign(fn(Interval(lo)))
    s_hi = certified_sign(fn(Interval(hi)))
    if s_lo == 0 or s_hi == 0 or s_lo == s_hi:
        raise CertificationError(
            f"endpoint signs ({s_lo}, {s_hi}) not certified opposite on [{a}, {b}]"
        )
    for _ in range(max_depth):
        progress = False
        for frac in (0.5, 0.46875, 0.53125):
            mid = lo + frac * (hi - lo)
            if not lo < mid < hi:
                continue
            sm = certified_sign(fn(Interval(mid)))
            if sm == 0:
                continue
            if sm == s_lo:
                lo = mid
            else:
                hi = mid
            progress = True
            break
        if not progress:
            break
    return Interval(lo, hi)
