"""Machine-checkable certificates for the ring kernel results.

Everything here runs on the outward-rounded intervals from
`coorbital.interval`, so a passing report is a rigorous statement about
the exact real quantities, not about one floating-point sample.  Three
entry points:

* certify_theorem1: the asymmetric-mass 1+4 example (exact vanishing
  pair separation term, certified root bracket, enclosed mass family).
* certify_theorem4: the 1+6 and 1+8 Pfaffian zeros with positive
  asymmetric kernel masses extracted from the mirror-symmetry blocks.
* certify_detH2_region: adaptive box certification that the second
  symmetry block of the convex 1+5 family has nonvanishing determinant
  wherever a central configuration can exist.
"""

import math
from dataclasses import dataclass

from .ccsystem import pfaffian
from .errors import CertificationError, CollisionError, ResourceLimitError
from .interval import (
    Interval,
    as_interval,
    certified_sign,
    certify_bracket,
    interval_f,
    interval_h,
    rational_pi,
)

# default kernel mixing weight used by the 1+4 certificate; any value
# below 1/f23 (about -1.77) keeps the masses positive
DEFAULT_ALPHA_1P4 = -4.0

# mixing weights for the 1+6 / 1+8 certificates, chosen inside the
# positivity window of the normalized block kernels
DEFAULT_ALPHA_N6 = 0.25
DEFAULT_ALPHA_N8 = 0.25

N6_PINNED = ((1, 8), (3, 7))
N6_BRACKET = (4.0 * math.pi / 5.0, 13.0 * math.pi / 16.0)

# printed search box for the 1+8 example, one (num, den) pi-rational
# pair per bound
N8_BOX = (
    ((61, 702), (63, 725)),
    ((95, 289), (24, 73)),
    ((32, 55), (71, 122)),
    ((91, 110), (24, 29)),
)
# corner pair of the box used for the sign-change segment (bit per axis)
N8_SEGMENT_CORNERS = ((0, 0, 0, 0), (1, 1, 1, 1))


@dataclass(frozen=True)
class Assertion:
    """One certified claim inside a report."""

    name: str
    passed: bool
    enclosure: tuple | None
    detail: str

    def as_dict(self):
        d = {"name": self.name, "passed": self.passed, "detail": self.detail}
        if self.enclosure is not None:
            d["enclosure"] = {"lo": self.enclosure[0], "hi": self.enclosure[1]}
        return d


def _enc(iv):
    return (iv.lo, iv.hi)


def _enc_dict(iv):
    return {"lo": iv.lo, "hi": iv.hi}


# ---------------------------------------------------------------------------
# Small generic linear algebra over interval elements.


def _cross3(a, b):
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def _det3(m):
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def _interval_F(slots, s):
    """Full antisymmetric interval coefficient matrix of the ring."""
    n = len(slots)
    zero = Interval(0.0)
    M = [[zero for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = interval_f(slots[i] - slots[j], s)
            M[i][j] = v
            M[j][i] = -v
    return M


def _mirror_slots(halfs):
    return list(halfs) + [-h for h in reversed(list(halfs))]


def _interval_pf_mirror(halfs, s):
    return pfaffian(_interval_F(_mirror_slots(halfs), s))


def _mirror_blocks(halfs, s):
    """Symmetric and antisymmetric mass blocks of a mirror ring.

    With bodies ordered (t1..tk, -tk..-t1) and u a half mass vector,
    the full vector (u, reversed u) is a kernel vector iff B u = 0 and
    (u, -reversed u) is one iff C u = 0, where

        B_ij = f(ti - tj) + f(ti + tj),   C_ij = f(ti - tj) - f(ti + tj)

    (difference term dropped on the diagonal).
    """
    k = len(halfs)
    B = [[None] * k for _ in range(k)]
    C = [[None] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            plus = interval_f(halfs[i] + halfs[j], s)
            if i == j:
                B[i][j] = plus
                C[i][j] = -plus
            else:
                minus = interval_f(halfs[i] - halfs[j], s)
                B[i][j] = minus + plus
                C[i][j] = minus - plus
    return B, C


def _block_kernel_vector(M):
    """Certified kernel direction of a singular k x k interval matrix.

    k=3: cross product of two rows; k=4: signed 3x3 minors along a row
    triple.  Tries row choices in a fixed order and demands every
    component of the result have certified sign, so the output provably
    spans the kernel when the true matrix is singular with a simple
    kernel.  Raises CertificationError when no row choice certifies."""
    k = len(M)
    if k == 3:
        for r0, r1 in ((0, 1), (0, 2), (1, 2)):
            u = _cross3(M[r0], M[r1])
            if all(certified_sign(c) != 0 for c in u):
                return list(u)
    elif k == 4:
        for rows in ((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)):
            u = []
            sign = 1.0
            for drop in range(4):
                cols = [c for c in range(4) if c != drop]
                minor = [[M[r][c] for c in cols] for r in rows]
                u.append(_det3(minor) * sign)
                sign = -sign
            if all(certified_sign(c) != 0 for c in u):
                return u
    else:
        raise ValueError(f"kernel extraction supports 3x3 and 4x4 blocks, got {k}x{k}")
    raise CertificationError("no row choice certifies a nonzero kernel direction")


def _normalize_kernel(u):
    """Scale so the component of largest midpoint magnitude becomes ~1
    (its own sign included); deterministic and certified nonzero."""
    idx = max(range(len(u)), key=lambda i: abs(u[i].mid))
    pivot = u[idx]
    return [c / pivot for c in u]


def _residual_bound(slots, masses, s):
    """Upper bound on max_i |sum_j f(ti - tj) m_j| over the enclosures."""
    F = _interval_F(slots, s)
    worst = 0.0
    for i in range(len(slots)):
        acc = Interval(0.0)
        for j in range(len(slots)):
            if j != i:
                acc = acc + F[i][j] * masses[j]
        worst = max(worst, acc.mag)
    return worst


# ---------------------------------------------------------------------------
# 1+4 certificate.


@dataclass(frozen=True)
class Theorem1Certificate:
    theta1: Interval
    alpha: float
    root: Interval
    f12: Interval
    f13: Interval
    f14: Interval
    f23: Interval
    masses: tuple
    residual_bound: float
    assertions: tuple
    certified: bool

    def as_dict(self):
        return {
            "certificate": "thm1",
            "certified": self.certified,
            "theta1": _enc_dict(self.theta1),
            "alpha": self.alpha,
            "theta2": _enc_dict(self.root),
            "f12": _enc_dict(self.f12),
            "f13": _enc_dict(self.f13),
            "f14": _enc_dict(self.f14),
            "f23": _enc_dict(self.f23),
            "masses": [_enc_dict(m) for m in self.masses],
            "residual_bound": self.residual_bound,
            "assertions": [a.as_dict() for a in self.assertions],
        }


def certify_theorem1(theta1=None, alpha=DEFAULT_ALPHA_1P4, s=3.0, bracket=(1.9, 2.0), max_depth=48):
    """Certify the asymmetric-mass 1+4 ring example.

    Five assertions: the opposite-end coefficient vanishes exactly at
    the special first angle; a certified sign-change bracket pins the
    second free angle; the two printed coefficient enclosures; and
    positivity plus asymmetry of the mass family at the given alpha.
    Returns the report in all cases (failed assertions included);
    raises CertificationError only if the bracket endpoints cannot be
    signed at all."""
    th1 = rational_pi(1, 6) if theta1 is None else as_interval(theta1)
    alpha = float(alpha)
    assertions = []

    f14 = interval_f(th1 * 2.0, s)
    f14_ok = f14.contains_zero and f14.width < 1e-12
    note = "enclosure pinches zero" if f14_ok else (
        "certified nonzero: the exact-zero step fails away from the special angle"
        if not f14.contains_zero
        else "enclosure too wide"
    )
    assertions.append(Assertion("f14_vanishes", f14_ok, _enc(f14), note))

    def gap_sum(w):
        return interval_f(th1 + w, s) + interval_f(th1 - w, s)

    try:
        root = certify_bracket(gap_sum, bracket[0], bracket[1], max_depth)
        root_ok = True
        root_note = f"certified sign change, width {root.width:.3e}"
    except CertificationError as exc:
        root = Interval(float(bracket[0]), float(bracket[1]))
        root_ok = False
        root_note = str(exc)
    assertions.append(Assertion("root_certified", root_ok, _enc(root), root_note))

    f12 = interval_f(th1 + root, s)
    f13 = interval_f(th1 - root, s)
    f23 = interval_f(root * (-2.0), s)

    f12_ok = -0.54 <= f12.lo and f12.hi <= -0.53
    assertions.append(
        Assertion("f12_enclosure", f12_ok, _enc(f12), "target [-0.54, -0.53]")
    )
    f23_ok = -0.57 <= f23.lo and f23.hi <= -0.56
    assertions.append(
        Assertion("f23_enclosure", f23_ok, _enc(f23), "target [-0.57, -0.56]")
    )

    m1 = Interval(1.0)
    m2 = f12 * alpha
    m4 = f23 * alpha - 1.0
    masses = (m1, m2, m2, m4)
    gap = m1 - m4
    positive = all(m.lo > 0.0 for m in masses)
    asymmetric = certified_sign(gap) != 0
    assertions.append(
        Assertion(
            "masses_positive_asymmetric",
            positive and asymmetric,
            _enc(gap),
            f"positivity {'certified' if positive else 'FAILED'}, "
            f"m1 - m4 {'excludes' if asymmetric else 'straddles'} zero",
        )
    )

    slots = [th1, -root, root, -th1]
    res = _residual_bound(slots, masses, s)

    return Theorem1Certificate(
        theta1=th1,
        alpha=alpha,
        root=root,
        f12=f12,
        f13=f13,
        f14=f14,
        f23=f23,
        masses=masses,
        residual_bound=res,
        assertions=tuple(assertions),
        certified=all(a.passed for a in assertions),
    )


# ---------------------------------------------------------------------------
# 1+6 / 1+8 certificates.


@dataclass(frozen=True)
class Theorem4Certificate:
    n: int
    alpha: float
    half_angles: tuple
    root: Interval
    pfaffian_at_root: Interval
    masses: tuple
    residual_bound: float
    assertions: tuple
    certified: bool

    def as_dict(self):
        return {
            "certificate": f"thm4n{self.n}",
            "certified": self.certified,
            "alpha": self.alpha,
            "half_angles": [_enc_dict(t) for t in self.half_angles],
            "root": _enc_dict(self.root),
            "pfaffian_at_root": _enc_dict(self.pfaffian_at_root),
            "masses": [_enc_dict(m) for m in self.masses],
            "residual_bound": self.residual_bound,
            "assertions": [a.as_dict() for a in self.assertions],
        }


def _kernel_mass_assertions(halfs, alpha, s, assertions):
    """Shared tail of the even-ring certificates: extract both block
    kernels at the certified root enclosure and certify the combined
    mass vector positive and mirror-asymmetric."""
    B, C = _mirror_blocks(halfs, s)
    try:
        u_s = _normalize_kernel(_block_kernel_vector(B))
        u_a = _normalize_kernel(_block_kernel_vector(C))
        kernel_ok = True
        kernel_note = "both block kernel directions certified nonzero"
    except CertificationError as exc:
        k = len(halfs)
        u_s = [Interval(1.0)] * k
        u_a = [Interval(0.0)] * k
        kernel_ok = False
        kernel_note = str(exc)
    assertions.append(Assertion("block_kernels", kernel_ok, None, kernel_note))

    top = [u_s[i] + u_a[i] * alpha for i in range(len(halfs))]
    bottom = [u_s[i] - u_a[i] * alpha for i in reversed(range(len(halfs)))]
    masses = tuple(top + bottom)

    positive = all(m.lo > 0.0 for m in masses)
    assertions.append(
        Assertion(
            "masses_positive",
            positive,
            None,
            "all components certified positive" if positive else "a component may vanish",
        )
    )

    defects = [abs(u_a[i] * (2.0 * alpha)) for i in range(len(halfs))]
    best = max(defects, key=lambda d: d.lo)
    assertions.append(
        Assertion(
            "masses_asymmetric",
            best.lo > 1e-3,
            _enc(best),
            "largest certified mirror defect",
        )
    )

    slots = _mirror_slots(halfs)
    res = _residual_bound(slots, masses, s)
    assertions.append(
        Assertion(
            "residual_bound",
            res < 1e-6,
            None,
            f"max |F m| over the enclosure: {res:.3e}",
        )
    )
    return masses, res


def certify_theorem4(n, alpha=None, s=3.0, max_depth=48):
    """Certify the even-ring asymmetric-mass examples.

    n=6: the first two half angles are pinned rationally and a
    certified bracket isolates the third on the stated interval.
    n=8: the sign change is certified across a segment between two
    corners of the stated four-dimensional box, and the root enclosure
    stays inside the box.  Both then extract the symmetric and
    antisymmetric block kernels and certify a positive asymmetric mass
    vector."""
    if n == 4:
        raise ValueError("the four-ring example is certify_theorem1")
    if n not in (6, 8):
        raise ValueError(f"n must be 6 or 8, got {n}")

    assertions = []
    if n == 6:
        alpha = DEFAULT_ALPHA_N6 if alpha is None else float(alpha)
        t1 = rational_pi(*N6_PINNED[0])
        t2 = rational_pi(*N6_PINNED[1])

        def pf_of(w):
            return _interval_pf_mirror([t1, t2, w], s)

        root = certify_bracket(pf_of, N6_BRACKET[0], N6_BRACKET[1], max_depth)
        assertions.append(
            Assertion(
                "pfaffian_root_certified",
                True,
                _enc(root),
                f"sign change on ({N6_BRACKET[0]:.6f}, {N6_BRACKET[1]:.6f}), "
                f"width {root.width:.3e}",
            )
        )
        halfs = (t1, t2, root)
        pf_val = pf_of(root)
    else:
        alpha = DEFAULT_ALPHA_N8 if alpha is None else float(alpha)
        lows = [rational_pi(*lo) for lo, _ in N8_BOX]
        highs = [rational_pi(*hi) for _, hi in N8_BOX]
        c0, c1 = N8_SEGMENT_CORNERS
        p0 = [highs[k] if c0[k] else lows[k] for k in range(4)]
        p1 = [highs[k] if c1[k] else lows[k] for k in range(4)]

        def seg(t):
            return [p0[k] + (p1[k] - p0[k]) * t for k in range(4)]

        def pf_of(t):
            return _interval_pf_mirror(seg(t), s)

        root = certify_bracket(pf_of, 0.0, 1.0, max_depth)
        halfs = tuple(seg(root))
        pf_val = pf_of(root)
        assertions.append(
            Assertion(
                "pfaffian_root_certified",
                True,
                _enc(root),
                f"sign change along the box diagonal, parameter width {root.width:.3e}",
            )
        )
        inside = all(
            halfs[k].lo > lows[k].hi and halfs[k].hi < highs[k].lo for k in range(4)
        )
        assertions.append(
            Assertion(
                "root_inside_box",
                inside,
                None,
                "each half angle certified strictly inside its printed bracket",
            )
        )

    masses, res = _kernel_mass_assertions(list(halfs), alpha, s, assertions)
    return Theorem4Certificate(
        n=n,
        alpha=alpha,
        half_angles=tuple(halfs),
        root=root,
        pfaffian_at_root=pf_val,
        masses=masses,
        residual_bound=res,
        assertions=tuple(assertions),
        certified=all(a.passed for a in assertions),
    )


# ---------------------------------------------------------------------------
# Convex 1+5 block determinant over the admissible region.

REGION_T1 = (math.pi / 6.0, math.pi / 2.0)
REGION_T2 = (math.pi / 6.0, math.pi / 3.0)
REGION_AREA = math.pi * math.pi / 24.0


@dataclass(frozen=True)
class BoxRecord:
    box_id: str
    theta1: tuple
    theta2: tuple
    status: str

    def as_dict(self):
        return {
            "id": self.box_id,
            "theta1": {"lo": self.theta1[0], "hi": self.theta1[1]},
            "theta2": {"lo": self.theta2[0], "hi": self.theta2[1]},
            "status": self.status,
        }


@dataclass(frozen=True)
class SliceReport:
    masses: tuple
    excluded_area: float
    det_certified_area: float
    unresolved_area: float
    degenerate_area: float
    unresolved_count: int
    unresolved_boxes: tuple
    coverage: float

    def as_dict(self):
        return {
            "masses": list(self.masses),
            "excluded_area": self.excluded_area,
            "det_certified_area": self.det_certified_area,
            "unresolved_area": self.unresolved_area,
            "degenerate_area": self.degenerate_area,
            "unresolved_count": self.unresolved_count,
            "unresolved_boxes": [b.as_dict() for b in self.unresolved_boxes],
            "coverage": self.coverage,
        }


@dataclass(frozen=True)
class RegionCoverageReport:
    grid_n: int
    s: float
    extra_depth: int
    coverage_target: float
    region_area: float
    slices: tuple
    coverage: float
    boxes_processed: int
    det_zero_boxes: tuple
    certified: bool

    def as_dict(self):
        return {
            "certificate": "thm5",
            "certified": self.certified,
            "grid_n": self.grid_n,
            "s": self.s,
            "extra_depth": self.extra_depth,
            "coverage_target": self.coverage_target,
            "region_area": self.region_area,
            "coverage": self.coverage,
            "boxes_processed": self.boxes_processed,
            "det_zero_boxes": [b.as_dict() for b in self.det_zero_boxes],
            "slices": [s.as_dict() for s in self.slices],
        }


def _mass_slices(mass_sampling):
    """Resolve a sampling strategy into symmetric half-ring mass triples
    (m1, m2, m3) = (outer pair, inner pair, middle)."""
    if mass_sampling is None or mass_sampling == "equal":
        return [(1.0, 1.0, 1.0)]
    if mass_sampling == "vertices":
        return [(2.0, 1.0, 1.0), (1.0, 2.0, 1.0), (1.0, 1.0, 2.0)]
    if isinstance(mass_sampling, str) and mass_sampling.startswith("lattice:"):
        depth = int(mass_sampling.split(":", 1)[1])
        if depth < 3:
            raise ValueError("lattice depth must be at least 3")
        out = []
        for i in range(1, depth - 1):
            for j in range(1, depth - i):
                k = depth - i - j
                if k >= 1:
                    out.append((float(i), float(j), float(k)))
        return out
    if isinstance(mass_sampling, (list, tuple)):
        slices = []
        for triple in mass_sampling:
            m = tuple(float(v) for v in triple)
            if len(m) != 3 or any(v <= 0.0 for v in m):
                raise ValueError(f"mass slice must be 3 positive reals, got {triple!r}")
            slices.append(m)
        if not slices:
            raise ValueError("empty mass slice list")
        return slices
    raise ValueError(f"unknown mass sampling strategy {mass_sampling!r}")


def _box_vs_region(x0, x1, y0, y1):
    """'inside', 'outside', or 'boundary' relative to the open region
    {pi/6 < t2 < pi/3, t2 < t1 < pi/2}."""
    a2, b2 = REGION_T2
    b1 = REGION_T1[1]
    if y1 <= a2 or y0 >= b2 or x1 <= y0 or x0 >= b1:
        return "outside"
    if y0 >= a2 and y1 <= b2 and x1 <= b1 and x0 > y1:
        return "inside"
    return "boundary"


def _box_status(x0, x1, y0, y1, masses, s):
    X1 = Interval(x0, x1)
    X2 = Interval(y0, y1)
    m1, m2, m3 = masses
    try:
        f12 = interval_f(X1 - X2, s)
        f13 = interval_f(X1, s)
        f14 = interval_f(X1 + X2, s)
        f15 = interval_f(X1 * 2.0, s)
        f23 = interval_f(X2, s)
        f24 = interval_f(X2 * 2.0, s)
    except CollisionError:
        return "degenerate"
    r1 = f15 * m1 + (f12 + f14) * m2 + f13 * m3
    if not r1.contains_zero:
        return "excluded"
    r2 = (f14 - f12) * m1 + f24 * m2 + f23 * m3
    if not r2.contains_zero:
        return "excluded"
    try:
        h12 = interval_h(X1 - X2, s)
        h13 = interval_h(X1, s)
        h14 = interval_h(X1 + X2, s)
        h15 = interval_h(X1 * 2.0, s)
        h23 = interval_h(X2, s)
        h24 = interval_h(X2 * 2.0, s)
    except CollisionError:
        return "degenerate"
    hsum = h12 + h14
    a11 = (h15 * (2.0 * m1) + hsum * m2 + h13 * m3) * (2.0 * m1)
    a12 = (h14 - h12) * (2.0 * m1 * m2)
    a22 = (hsum * m1 + h24 * (2.0 * m2) + h23 * m3) * (2.0 * m2)
    det = a11 * a22 - a12.powi(2)
    if not det.contains_zero:
        return "certified"
    return "split"


def _subdivide_cell(cell, masses, s, max_depth, budget):
    """Resolve one top-level cell; returns per-status areas, unresolved
    samples, and the number of boxes consumed from the budget."""
    areas = {"excluded": 0.0, "certified": 0.0, "unresolved": 0.0, "degenerate": 0.0}
    unresolved = []
    processed = 0
    stack = [cell]
    while stack:
        depth, bid, x0, x1, y0, y1 = stack.pop()
        side = _box_vs_region(x0, x1, y0, y1)
        if side == "outside":
            continue
        if side == "boundary":
            if depth >= max_depth:
                # unresolved boundary sliver; measure-zero in the limit
                continue
            xm = 0.5 * (x0 + x1)
            ym = 0.5 * (y0 + y1)
            for q, (qx0, qx1, qy0, qy1) in enumerate(
                ((x0, xm, y0, ym), (xm, x1, y0, ym), (x0, xm, ym, y1), (xm, x1, ym, y1))
            ):
                stack.append((depth + 1, f"{bid}.{q}", qx0, qx1, qy0, qy1))
            continue
        processed += 1
        if processed > budget:
            raise ResourceLimitError(
                f"box budget exhausted inside cell {bid}",
                report=None,
            )
        status = _box_status(x0, x1, y0, y1, masses, s)
        area = (x1 - x0) * (y1 - y0)
        if status in ("excluded", "certified"):
            areas[status] += area
        elif status == "degenerate":
            areas["degenerate"] += area
        elif depth >= max_depth:
            areas["unresolved"] += area
            if len(unresolved) < 16:
                unresolved.append(BoxRecord(bid, (x0, x1), (y0, y1), "unresolved"))
        else:
            xm = 0.5 * (x0 + x1)
            ym = 0.5 * (y0 + y1)
            for q, (qx0, qx1, qy0, qy1) in enumerate(
                ((x0, xm, y0, ym), (xm, x1, y0, ym), (x0, xm, ym, y1), (xm, x1, ym, y1))
            ):
                stack.append((depth + 1, f"{bid}.{q}", qx0, qx1, qy0, qy1))
    return areas, unresolved, processed


def certify_detH2_region(
    grid_n=32,
    mass_sampling="equal",
    s=3.0,
    extra_depth=6,
    coverage_target=0.9,
    max_boxes=400000,
    threads=1,
):
    """Adaptive certified subdivision of the convex 1+5 region.

    Per mass slice, every box either certifies that no central
    configuration of the family lies inside (a reduced-system residual
    component excludes zero), certifies det of the second symmetry
    block nonzero, or splits; unresolved boxes at the depth limit are
    the only places a vanishing determinant could hide and are reported
    explicitly.  Coverage counts resolved area against the exact region
    area.  Raises ResourceLimitError (partial report attached) when the
    box budget runs out."""
    if grid_n < 32:
        raise ValueError("grid_n must be at least 32")
    if extra_depth < 0 or extra_depth > 16:
        raise ValueError("extra_depth must lie in [0, 16]")
    threads = int(threads)
    if threads < 1:
        raise ValueError("threads must be positive")
    slices = _mass_slices(mass_sampling)

    x_lo, x_hi = REGION_T1
    y_lo, y_hi = REGION_T2
    xs = [x_lo + (x_hi - x_lo) * k / grid_n for k in range(grid_n + 1)]
    ys = [y_lo + (y_hi - y_lo) * k / grid_n for k in range(grid_n + 1)]
    cells = [
        (0, f"{i}:{j}", xs[i], xs[i + 1], ys[j], ys[j + 1])
        for i in range(grid_n)
        for j in range(grid_n)
    ]

    slice_reports = []
    total_processed = 0
    det_zero_boxes = []
    for masses in slices:
        areas = {"excluded": 0.0, "certified": 0.0, "unresolved": 0.0, "degenerate": 0.0}
        unresolved = []
        budget_left = max_boxes - total_processed

        def run_cell(cell, budget=budget_left):
            return _subdivide_cell(cell, masses, s, extra_depth, budget)

        try:
            if threads > 1:
                from concurrent.futures import ThreadPoolExecutor

                with ThreadPoolExecutor(max_workers=threads) as pool:
                    results = list(pool.map(run_cell, cells))
            else:
                results = [run_cell(c) for c in cells]
        except ResourceLimitError as exc:
            partial = _assemble_region_report(
                grid_n, s, extra_depth, coverage_target, slice_reports, total_processed, det_zero_boxes
            )
            raise ResourceLimitError(str(exc), report=partial) from exc

        for cell_areas, cell_unresolved, cell_processed in results:
            for k in areas:
                areas[k] += cell_areas[k]
            unresolved.extend(cell_unresolved)
            total_processed += cell_processed
        if total_processed > max_boxes:
            partial = _assemble_region_report(
                grid_n, s, extra_depth, coverage_target, slice_reports, total_processed, det_zero_boxes
            )
            raise ResourceLimitError("box budget exhausted", report=partial)

        coverage = (areas["excluded"] + areas["certified"]) / REGION_AREA
        rep = SliceReport(
            masses=tuple(masses),
            excluded_area=areas["excluded"],
            det_certified_area=areas["certified"],
            unresolved_area=areas["unresolved"],
            degenerate_area=areas["degenerate"],
            unresolved_count=len(unresolved),
            unresolved_boxes=tuple(unresolved[:16]),
            coverage=coverage,
        )
        slice_reports.append(rep)
        det_zero_boxes.extend(unresolved[:16])

    return _assemble_region_report(
        grid_n, s, extra_depth, coverage_target, slice_reports, total_processed, det_zero_boxes
    )


def _assemble_region_report(
    grid_n, s, extra_depth, coverage_target, slice_reports, processed, det_zero_boxes
):
    coverage = min((r.coverage for r in slice_reports), default=0.0)
    return RegionCoverageReport(
        grid_n=grid_n,
        s=s,
        extra_depth=extra_depth,
        coverage_target=coverage_target,
        region_area=REGION_AREA,
        slices=tuple(slice_reports),
        coverage=coverage,
        boxes_processed=processed,
        det_zero_boxes=tuple(det_zero_boxes),
        certified=bool(slice_reports)
        and coverage >= coverage_target
        and not det_zero_boxes,
    )
