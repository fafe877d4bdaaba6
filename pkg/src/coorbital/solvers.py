"""Root finding and curve tracing for the ring problem: the restricted
two-massive-plus-test-body equilibria, Pfaffian zero loci, zero-mass
curves, full and reduced equilibrium solves, and the convex-region
filters used by the symmetry results.
"""

import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from .ccsystem import (
    FAMILY_FREE_COUNT,
    SymmetricFamily,
    build_F,
    expand_family,
    family_slots,
    mass_kernel,
    mass_mirror_defect,
    pfaffian,
)
from .errors import CollisionError, NoPositiveMassError, OrderingError
from .geometry import (
    COLLISION_TOL,
    TWO_PI,
    MassVector,
    RingConfiguration,
    f_grid,
    f_value,
    hessian_entry,
    mass_array,
    reduce_angle,
)

# ---------------------------------------------------------------------------
# Restricted problem: two massive ring bodies at separation theta2 plus a
# test body at theta3.  Equilibria of the test body solve
#     g(t) = m1 f(t) + (1 - m1) f(t - theta2) = 0.

CASE_THETA2 = {
    "equilateral+": math.pi / 3.0,
    "equilateral-": 5.0 * math.pi / 3.0,
    "collinear": math.pi,
}

# Open intervals between consecutive singularities/zeros carrying exactly
# one root each; the test body cannot sit on either massive body.
CASE_BRACKETS = {
    "equilateral+": (
        (0.0, math.pi / 3.0),
        (math.pi / 3.0, math.pi),
        (math.pi, 4.0 * math.pi / 3.0),
        (4.0 * math.pi / 3.0, TWO_PI),
    ),
    "equilateral-": (
        (0.0, 2.0 * math.pi / 3.0),
        (2.0 * math.pi / 3.0, math.pi),
        (math.pi, 5.0 * math.pi / 3.0),
        (5.0 * math.pi / 3.0, TWO_PI),
    ),
    "collinear": ((0.0, math.pi), (math.pi, TWO_PI)),
}

# Endpoint nudge keeping bisection away from the collision singularities.
_EDGE = 1e-7


@dataclass(frozen=True)
class RootList:
    """Roots of the restricted problem for one case label."""

    case_label: str
    roots: tuple
    m1: float
    s: float


def _restricted_g(m1, theta2, s):
    def g(t):
        return m1 * f_value(t, s) + (1.0 - m1) * f_value(t - theta2, s)

    return g


def _restricted_g_prime(m1, theta2, s):
    def gp(t):
        return m1 * hessian_entry(t, s) + (1.0 - m1) * hessian_entry(t - theta2, s)

    return gp


def _check_restricted_args(m1, case, s):
    if case not in CASE_THETA2:
        raise ValueError(f"unknown case {case!r}; choose from {sorted(CASE_THETA2)}")
    if not 0.0 < m1 < 1.0:
        raise ValueError(f"m1 must lie in (0, 1), got {m1}")
    if s < 2.0:
        raise ValueError(f"potential exponent must satisfy s >= 2, got {s}")
    if s == 2.0:
        warnings.warn(
            "vortex exponent s=2 is outside the root-counting hypothesis; "
            "interval counts are not guaranteed",
            stacklevel=3,
        )


def _bisect(g, a, b, width=1e-13):
    ga = g(a)
    gb = g(b)
    if ga == 0.0:
        return a
    if gb == 0.0:
        return b
    if (ga > 0.0) == (gb > 0.0):
        raise ValueError(f"no sign change on [{a}, {b}]")
    while b - a > width:
        mid = 0.5 * (a + b)
        gm = g(mid)
        if gm == 0.0:
            return mid
        if (gm > 0.0) == (ga > 0.0):
            a, ga = mid, gm
        else:
            b = mid
    return 0.5 * (a + b)


def solve_1p2p1(m1, case, s=3.0):
    """All test-body equilibria for the given case.

    Bisection on each bracket (each carries exactly one sign change for
    any m1 in (0, 1)), then one derivative polish step.  The collinear
    case at m1 = 1/2 returns exactly {pi/2, 3pi/2}."""
    _check_restricted_args(m1, case, s)
    theta2 = CASE_THETA2[case]
    g = _restricted_g(m1, theta2, s)
    gp = _restricted_g_prime(m1, theta2, s)
    roots = []
    for a, b in CASE_BRACKETS[case]:
        root = _bisect(g, a + _EDGE, b - _EDGE)
        slope = gp(root)
        if slope != 0.0:
            polished = root - g(root) / slope
            if a < polished < b and abs(g(polished)) <= abs(g(root)):
                root = polished
        roots.append(root)
    return RootList(case_label=case, roots=tuple(sorted(roots)), m1=float(m1), s=float(s))


def brute_force_roots(m1, case, s=3.0, samples=100000):
    """Oracle root finder: dense sign scan plus bisection.

    Scans `samples` points of (0, 2pi), skips the collision
    neighborhoods of both massive bodies, and refines every sign change
    between adjacent valid samples.  Independent of the bracket layout
    used by solve_1p2p1."""
    _check_restricted_args(m1, case, s)
    theta2 = CASE_THETA2[case]
    g = _restricted_g(m1, theta2, s)
    ts = np.linspace(0.0, TWO_PI, samples, endpoint=False) + math.pi / samples
    valid = np.ones(ts.shape, dtype=bool)
    for sing in (0.0, theta2, TWO_PI):
        valid &= np.abs(ts - sing) > 1e-6
    vals = np.where(valid, f_grid(ts, s) * m1 + (1.0 - m1) * f_grid(ts - theta2, s), np.nan)
    roots = []
    for k in range(len(ts) - 1):
        if not (valid[k] and valid[k + 1]):
            continue
        a, b = vals[k], vals[k + 1]
        if np.isnan(a) or np.isnan(b):
            continue
        if a == 0.0:
            roots.append(ts[k])
        elif (a > 0.0) != (b > 0.0):
            roots.append(_bisect(g, float(ts[k]), float(ts[k + 1]), width=1e-14))
    return tuple(sorted(roots))


# ---------------------------------------------------------------------------
# Zero sets in the two free angles of the symmetric families.


def pfaffian_on_family(fam, s=3.0):
    """Pfaffian of the mass-coefficient matrix over an even family."""
    if isinstance(fam, SymmetricFamily):
        kind, free = fam.kind, fam.free_angles
    else:
        raise TypeError("pass a SymmetricFamily")
    if FAMILY_FREE_COUNT[kind] is None or kind == "sym-1p5":
        raise ValueError("Pfaffian needs an even number of ring bodies")
    return float(pfaffian(build_F(expand_family(fam, s))))


def pfaffian_type2_1p4(theta1, theta2, s=3.0):
    """Simplified Pfaffian of the (t1, t2, -t2, -t1) family:

        f(t1-t2)^2 - f(t1+t2)^2 + f(2 t1) f(2 t2).
    """
    f12 = f_value(theta1 - theta2, s)
    f13 = f_value(theta1 + theta2, s)
    f14 = f_value(2.0 * theta1, s)
    f23 = f_value(2.0 * theta2, s)
    return f12 * f12 - f13 * f13 + f14 * f23


def _grid_pfaffian_type2_1p4(T1, T2, s):
    f12 = f_grid(T1 - T2, s)
    f13 = f_grid(T1 + T2, s)
    f14 = f_grid(2.0 * T1, s)
    f23 = f_grid(2.0 * T2, s)
    return f12 * f12 - f13 * f13 + f14 * f23


def _grid_zero_mass(T1, T2, s):
    f12 = f_grid(T1 - T2, s)
    f13 = f_grid(T1, s)
    f14 = f_grid(T1 + T2, s)
    f15 = f_grid(2.0 * T1, s)
    f23 = f_grid(T2, s)
    f24 = f_grid(2.0 * T2, s)
    z1 = f23 * (f12 + f14) - f13 * f24
    z2 = f15 * f23 - f13 * (f14 - f12)
    z3 = f15 * f24 - (f14 * f14 - f12 * f12)
    return z1, z2, z3


_TRACE_TAGS = {
    ("pfaffian", "type2-1p4"): lambda T1, T2, s: _grid_pfaffian_type2_1p4(T1, T2, s),
    ("z1", "sym-1p5"): lambda T1, T2, s: _grid_zero_mass(T1, T2, s)[0],
    ("z2", "sym-1p5"): lambda T1, T2, s: _grid_zero_mass(T1, T2, s)[1],
    ("z3", "sym-1p5"): lambda T1, T2, s: _grid_zero_mass(T1, T2, s)[2],
}

DEFAULT_WINDOW = (0.02, math.pi - 0.02, 0.02, math.pi - 0.02)


@dataclass(frozen=True)
class Polyline:
    """One traced curve component: vertices in the (theta1, theta2) plane."""

    points: np.ndarray
    tag: str


@dataclass(frozen=True)
class TraceResult:
    polylines: list
    tag: str
    window: tuple
    grid_n: int
    degenerate_cells: int
    ambiguous_cells: int

    @property
    def n_components(self):
        return len(self.polylines)


def _scalar_eval(tag_fn, t1, t2, s):
    v = tag_fn(np.asarray(t1, dtype=float), np.asarray(t2, dtype=float), s)
    return float(v)


def trace_zero_curve(tag, fam_kind, window=None, grid_n=512, s=3.0, refine_tol=1e-8):
    """Marching-squares zero set of the tagged function on the window.

    window = (t1_min, t1_max, t2_min, t2_max), inside [0, pi] on both
    axes.  Grid cells touching a collision singularity (NaN corner) are
    skipped and counted as degenerate; saddle cells are disambiguated
    by a center sample and counted.  Every vertex is refined along its
    grid edge until |f| < refine_tol, so the output is plot-ready.
    """
    key = (tag, fam_kind)
    if key not in _TRACE_TAGS:
        raise ValueError(f"unsupported tag/family pair {key!r}")
    if grid_n < 16:
        raise ValueError("grid_n must be at least 16")
    if window is None:
        window = DEFAULT_WINDOW
    a1, b1, a2, b2 = (float(v) for v in window)
    if not (0.0 <= a1 < b1 <= math.pi and 0.0 <= a2 < b2 <= math.pi):
        raise ValueError(f"window {window!r} is outside the family domain [0, pi]^2")
    fn = _TRACE_TAGS[key]

    x = np.linspace(a1, b1, grid_n + 1)
    y = np.linspace(a2, b2, grid_n + 1)
    T1, T2 = np.meshgrid(x, y, indexing="ij")
    vals = fn(T1, T2, s)

    pos = vals > 0.0
    finite = np.isfinite(vals)

    def refine_edge(p, q, vp, vq):
        # bisect along the segment p-q for the crossing of fn
        lo, hi = 0.0, 1.0
        flo = vp
        for _ in range(60):
            mid = 0.5 * (lo + hi)
            pt1 = p[0] + mid * (q[0] - p[0])
            pt2 = p[1] + mid * (q[1] - p[1])
            fm = _scalar_eval(fn, pt1, pt2, s)
            if not math.isfinite(fm):
                return None
            if abs(fm) < refine_tol:
                return (pt1, pt2)
            if (fm > 0.0) == (flo > 0.0):
                lo, flo = mid, fm
            else:
                hi = mid
        t = 0.5 * (lo + hi)
        return (p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1]))

    # crossing cache keyed by (i, j, axis): axis 0 = edge from node (i,j)
    # to (i+1,j), axis 1 = edge to (i,j+1)
    crossings = {}
    dropped = 0

    def edge_point(i, j, axis):
        nonlocal dropped
        key_e = (i, j, axis)
        if key_e in crossings:
            return crossings[key_e]
        if axis == 0:
            p, q = (x[i], y[j]), (x[i + 1], y[j])
            vp, vq = vals[i, j], vals[i + 1, j]
        else:
            p, q = (x[i], y[j]), (x[i], y[j + 1])
            vp, vq = vals[i, j], vals[i, j + 1]
        pt = refine_edge(p, q, vp, vq)
        if pt is None:
            dropped += 1
        crossings[key_e] = pt
        return pt

    # segments as pairs of edge keys; assembled into chains afterwards
    segments = []
    degenerate = 0
    ambiguous = 0
    for i in range(grid_n):
        for j in range(grid_n):
            corner_f = (finite[i, j], finite[i + 1, j], finite[i + 1, j + 1], finite[i, j + 1])
            if not all(corner_f):
                degenerate += 1
                continue
            c00 = bool(pos[i, j])
            c10 = bool(pos[i + 1, j])
            c11 = bool(pos[i + 1, j + 1])
            c01 = bool(pos[i, j + 1])
            code = (c00, c10, c11, c01)
            if code == (c00, c00, c00, c00):
                continue
            # edges of the cell with a sign change
            e_bottom = (i, j, 0) if c00 != c10 else None
            e_right = (i + 1, j, 1) if c10 != c11 else None
            e_top = (i, j + 1, 0) if c01 != c11 else None
            e_left = (i, j, 1) if c00 != c01 else None
            active = [e for e in (e_bottom, e_right, e_top, e_left) if e is not None]
            if len(active) == 2:
                segments.append((active[0], active[1]))
            elif len(active) == 4:
                ambiguous += 1
                cx = 0.5 * (x[i] + x[i + 1])
                cy = 0.5 * (y[j] + y[j + 1])
                center_pos = _scalar_eval(fn, cx, cy, s) > 0.0
                # pair edges so the curve separates corners of unequal sign
                if center_pos == c00:
                    segments.append((e_bottom, e_right))
                    segments.append((e_top, e_left))
                else:
                    segments.append((e_bottom, e_left))
                    segments.append((e_top, e_right))

    # drop segments whose vertices failed refinement
    good = []
    for ea, eb in segments:
        pa = edge_point(*ea)
        pb = edge_point(*eb)
        if pa is not None and pb is not None:
            good.append((ea, eb))

    adj = {}
    for ea, eb in good:
        adj.setdefault(ea, []).append(eb)
        adj.setdefault(eb, []).append(ea)

    visited = set()
    polylines = []
    # open chains first (degree-1 endpoints), then closed loops
    starts = sorted([k for k, v in adj.items() if len(v) == 1])
    starts += sorted([k for k, v in adj.items() if len(v) != 1])
    for start in starts:
        if start in visited:
            continue
        chain = [start]
        visited.add(start)
        cur = start
        prev = None
        while True:
            nxt = None
            for cand in adj[cur]:
                if cand != prev and cand not in visited:
                    nxt = cand
                    break
            if nxt is None:
                # close the loop if we came around
                if len(chain) > 2 and start in adj[cur] and prev != start:
                    chain.append(start)
                break
            chain.append(nxt)
            visited.add(nxt)
            prev, cur = cur, nxt
        if len(chain) >= 2:
            pts = np.array([crossings[k] for k in chain])
            polylines.append(Polyline(points=pts, tag=tag))

    return TraceResult(
        polylines=polylines,
        tag=tag,
        window=(a1, b1, a2, b2),
        grid_n=grid_n,
        degenerate_cells=degenerate,
        ambiguous_cells=ambiguous + dropped,
    )


# ---------------------------------------------------------------------------
# Convex-region filters.


def ordered_gaps(config):
    """Consecutive gaps of the configuration in its minimal-span frame.

    Returns (gaps, span) with span = sum of gaps = 2*pi minus the
    largest circular gap; the bodies are ordered along the short arc.
    """
    ths = sorted(config.thetas)
    n = len(ths)
    gaps_circ = [(ths[(k + 1) % n] - ths[k]) % TWO_PI for k in range(n)]
    big = max(range(n), key=lambda k: gaps_circ[k])
    arc = [gaps_circ[(big + 1 + k) % n] for k in range(n - 1)]
    return tuple(arc), TWO_PI - gaps_circ[big]


def region_check_1p4(config):
    """Membership in the admissible gap region of convex ordered 1+4
    rings: the three consecutive gaps all below pi/3 and the end-to-end
    span above pi/3 (and at most pi, else the ring is not convex).

    Antipodal end bodies are flagged with a warning: no positive-mass
    solution can have that shape."""
    if config.n != 4:
        raise ValueError("region check needs exactly four ring bodies")
    gaps, span = ordered_gaps(config)
    if abs(span - math.pi) <= 1e-9:
        warnings.warn(
            "end bodies are antipodal; no positive-mass ring equilibrium has this shape",
            stacklevel=2,
        )
    if span > math.pi:
        return False
    return all(g < math.pi / 3.0 for g in gaps) and span > math.pi / 3.0


def region_check_1p5(theta1, theta2):
    """Membership in the admissible region for convex mirror-symmetric
    1+5 rings described by free angles 0 < theta2 < theta1:
    pi/6 < theta2 < pi/3 and theta1 - theta2 < pi/3, inside the convex
    frame theta1 < pi/2."""
    t1 = float(theta1)
    t2 = float(theta2)
    if not 0.0 < t2 < t1:
        raise ValueError("need 0 < theta2 < theta1")
    if t1 >= 0.5 * math.pi:
        return False
    return math.pi / 6.0 < t2 < math.pi / 3.0 and t1 - t2 < math.pi / 3.0


# ---------------------------------------------------------------------------
# The Newtonian difference factorization used by the convex 1+5
# symmetry argument.


def factor_bracket(t_ij, t_kl):
    """Bracketed factor of the difference factorization below; positive
    throughout (0, pi/2]^2."""
    si = math.sin(0.25 * (t_kl + t_ij))
    return (
        8.0
        * math.sin(0.5 * t_ij) ** 2
        * math.sin(0.5 * t_kl) ** 2
        * math.cos(0.5 * (t_ij + t_kl))
        * math.cos(0.25 * (t_kl - t_ij))
        + si * (1.0 + math.cos(0.5 * t_ij) * math.cos(0.5 * t_kl))
    )


def f_difference_factored(t_ij, t_kl):
    """Both sides of the identity (Newtonian exponent s = 3)

        r_ij^3 r_kl^3 (f(t_ij) - f(t_kl))
            = 32 sin(t_ij/2) sin(t_kl/2) sin((t_kl - t_ij)/4) * bracket,

    for angles in (0, pi/2].  Returns (lhs, rhs); the sign of the whole
    expression is carried by sin((t_kl - t_ij)/4), which is what makes
    f strictly decreasing across such pairs."""
    for t in (t_ij, t_kl):
        if not 0.0 < t <= 0.5 * math.pi:
            raise ValueError("factorization holds for angles in (0, pi/2]")
    rij = 2.0 * math.sin(0.5 * t_ij)
    rkl = 2.0 * math.sin(0.5 * t_kl)
    lhs = math.sin(t_ij) * rkl ** 3 * (1.0 - rij ** 3) - math.sin(t_kl) * rij ** 3 * (
        1.0 - rkl ** 3
    )
    rhs = (
        32.0
        * math.sin(0.5 * t_ij)
        * math.sin(0.5 * t_kl)
        * math.sin(0.25 * (t_kl - t_ij))
        * factor_bracket(t_ij, t_kl)
    )
    return lhs, rhs


# ---------------------------------------------------------------------------
# Equilibrium solvers.


def _ring_residual_jacobian(thetas, mm, s):
    n = len(thetas)
    R = np.zeros(n)
    J = np.zeros((n, n))
    for i in range(n):
        diag = 0.0
        for j in range(n):
            if j == i:
                continue
            d = reduce_angle(thetas[i] - thetas[j])
            R[i] += mm[j] * f_value(d, s)
            hij = mm[j] * hessian_entry(d, s)
            J[i, j] = -hij
            diag += hij
        J[i, i] = diag
    return R, J


def solve_ring(thetas0, m, s=3.0, tol=1e-12, max_iter=100):
    """Full damped Gauss-Newton solve of F(theta) m = 0 in all N angles.

    The rotational direction is fixed by a gauge row keeping the mean
    angle constant.  Returns a RingConfiguration, or None when the
    iteration does not converge or walks into a collision."""
    mm = mass_array(m, len(thetas0))
    th = np.array([float(t) for t in thetas0])
    try:
        R, J = _ring_residual_jacobian(th, mm, s)
    except CollisionError:
        return None
    for _ in range(max_iter):
        if np.max(np.abs(R)) < tol:
            return RingConfiguration(tuple(th), s)
        A = np.vstack([J, np.ones(len(th))])
        b = np.concatenate([-R, [0.0]])
        step, *_ = np.linalg.lstsq(A, b, rcond=None)
        scale = 1.0
        base = np.max(np.abs(R))
        for _ in range(30):
            try:
                R2, J2 = _ring_residual_jacobian(th + scale * step, mm, s)
            except CollisionError:
                scale *= 0.5
                continue
            if np.max(np.abs(R2)) < base:
                th = th + scale * step
                R, J = R2, J2
                break
            scale *= 0.5
        else:
            return None
    if np.max(np.abs(R)) < tol:
        return RingConfiguration(tuple(th), s)
    return None


# slot layout as a linear map theta = A phi + b, per family kind
def _family_linear_map(kind):
    nfree = FAMILY_FREE_COUNT[kind]
    probe0 = family_slots(SymmetricFamily(kind, tuple(0.31 + 0.17 * k for k in range(nfree))))
    A = np.zeros((len(probe0), nfree))
    b = np.array(probe0)
    for k in range(nfree):
        shifted = list(0.31 + 0.17 * j for j in range(nfree))
        shifted[k] += 1e-3
        probe1 = family_slots(SymmetricFamily(kind, tuple(shifted)))
        A[:, k] = (np.array(probe1) - b) / 1e-3
    b = b - A @ np.array([0.31 + 0.17 * k for k in range(nfree)])
    return np.round(A), np.round(b * 2.0 / math.pi) * math.pi / 2.0


_FAMILY_EQ_ROWS = {
    "type1-1p4": (1,),
    "type2-1p4": (0, 1),
    "type1-1p6": (1, 2),
    "type2-1p6": (0, 1, 2),
    "type2-1p8": (0, 1, 2, 3),
    "sym-1p5": (0, 1),
}


def _check_family_masses(kind, mm):
    if mass_mirror_defect(kind, mm) > 1e-12:
        raise ValueError(f"masses must carry the mirror symmetry of {kind}")


def solve_symmetric_family(kind, m, seeds, s=3.0, tol=1e-12, max_iter=100, dedup=1e-8):
    """Damped-Newton solve of the reduced equilibrium equations of a
    symmetric family at fixed symmetric masses.

    The reflection constraints leave FAMILY_FREE_COUNT[kind] free
    angles; the same number of equilibrium equations stay independent.
    Every seed is iterated separately; non-convergent seeds are
    dropped.  Solutions are deduplicated modulo the mirror relabeling
    (free angles are canonicalized to descending magnitudes)."""
    mm = mass_array(m, _family_size(kind))
    _check_family_masses(kind, mm)
    rows = _FAMILY_EQ_ROWS[kind]
    A, b = _family_linear_map(kind)

    def eval_rj(phi):
        th = A @ phi + b
        n = len(th)
        R = np.zeros(len(rows))
        Jfull = np.zeros((len(rows), n))
        for out, i in enumerate(rows):
            diag = 0.0
            for j in range(n):
                if j == i:
                    continue
                d = reduce_angle(th[i] - th[j])
                R[out] += mm[j] * f_value(d, s)
                hij = mm[j] * hessian_entry(d, s)
                Jfull[out, j] = -hij
                diag += hij
            Jfull[out, i] += diag
        return R, Jfull @ A

    found = []
    for seed in seeds:
        phi = np.array([float(v) for v in seed])
        try:
            R, J = eval_rj(phi)
        except (CollisionError, OrderingError):
            continue
        ok = False
        for _ in range(max_iter):
            if np.max(np.abs(R)) < tol:
                ok = True
                break
            try:
                step = np.linalg.solve(J, -R)
            except np.linalg.LinAlgError:
                break
            scale = 1.0
            base = np.max(np.abs(R))
            for _ in range(30):
                try:
                    R2, J2 = eval_rj(phi + scale * step)
                except (CollisionError, OrderingError):
                    scale *= 0.5
                    continue
                if np.max(np.abs(R2)) < base:
                    phi = phi + scale * step
                    R, J = R2, J2
                    break
                scale *= 0.5
            else:
                break
        if not ok:
            continue
        canon = tuple(sorted((abs(v) for v in phi), reverse=True))
        if any(
            len(canon) == len(c) and max(abs(x - y) for x, y in zip(canon, c)) < dedup
            for c in (f.free_angles for f in found)
        ):
            continue
        try:
            found.append(SymmetricFamily(kind, canon))
        except OrderingError:
            continue
    return found


def _family_size(kind):
    from .ccsystem import FAMILY_SIZE

    return FAMILY_SIZE[kind]


DEFAULT_ASYMMETRIC_SEEDS = {
    "type2-1p4": (math.pi / 6.0, 1.936),
    "type2-1p6": (math.pi / 8.0, 3.0 * math.pi / 7.0, 2.5349),
    "type2-1p8": (
        0.5 * (61.0 * math.pi / 702.0 + 63.0 * math.pi / 725.0),
        0.5 * (95.0 * math.pi / 289.0 + 24.0 * math.pi / 73.0),
        0.5 * (32.0 * math.pi / 55.0 + 71.0 * math.pi / 122.0),
        0.5 * (91.0 * math.pi / 110.0 + 24.0 * math.pi / 29.0),
    ),
}


def find_asymmetric_positive(kind, seed_free=None, s=3.0, min_defect=1e-3):
    """Positive asymmetric mass vector on the Pfaffian zero set of an
    even type-2 family.

    Polishes the last free angle of the seed onto the Pfaffian zero
    set, extracts the two-dimensional kernel, and scans kernel
    combinations for the componentwise-positive vector of largest
    mirror asymmetry.  Raises NoPositiveMassError when the kernel
    admits no positive vector (or none asymmetric beyond min_defect).
    """
    if kind not in ("type2-1p4", "type2-1p6", "type2-1p8"):
        raise ValueError(f"asymmetric-mass search supports even type-2 families, not {kind!r}")
    free = list(DEFAULT_ASYMMETRIC_SEEDS[kind] if seed_free is None else seed_free)

    def pf_at(last):
        angles = free[:-1] + [last]
        return pfaffian_on_family(SymmetricFamily(kind, tuple(angles)), s)

    t = free[-1]
    # secant toward the zero set, then a safeguarding bisection
    t0, t1 = t - 1e-4, t + 1e-4
    p0, p1 = pf_at(t0), pf_at(t1)
    for _ in range(60):
        if p1 == p0:
            break
        t2 = t1 - p1 * (t1 - t0) / (p1 - p0)
        if not math.isfinite(t2):
            break
        t0, p0, t1, p1 = t1, p1, t2, pf_at(t2)
        if abs(p1) < 1e-15:
            break
    if abs(p1) > 1e-12:
        lo, hi = t - 0.1, t + 0.1
        plo, phi_v = pf_at(lo), pf_at(hi)
        if (plo > 0.0) == (phi_v > 0.0):
            raise NoPositiveMassError("no Pfaffian zero near the seed")
        t1 = _bisect(pf_at, lo, hi, width=1e-14)
    free[-1] = t1

    fam = SymmetricFamily(kind, tuple(free))
    config = expand_family(fam, s)
    F = build_F(config)
    basis = mass_kernel(F)
    if basis.dimension != 2:
        raise NoPositiveMassError(
            f"kernel dimension {basis.dimension} at the polished root; expected 2"
        )
    v1, v2 = basis.vectors

    best = None
    best_defect = min_defect
    for k in range(1440):
        ang = math.pi * k / 1440.0
        cand = math.cos(ang) * v1 + math.sin(ang) * v2
        for sgn in (1.0, -1.0):
            vec = sgn * cand
            if np.all(vec > 0.0):
                defect = mass_mirror_defect(kind, vec)
                if defect > best_defect:
                    best_defect = defect
                    best = vec
    if best is None:
        raise NoPositiveMassError("no positive asymmetric kernel vector at the root")
    best = best / np.max(best)
    if float(np.max(np.abs(F @ best))) > 1e-10 * max(1.0, float(np.max(np.abs(F)))):
        raise NoPositiveMassError("kernel vector fails the residual bound")
    return config, MassVector(tuple(best))
