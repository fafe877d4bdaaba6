"""PNG renderings written next to the delimited outputs.

Headless matplotlib only; every function takes a finished result object
and a file path, so the library itself stays free of plotting state.
"""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .geometry import TWO_PI, f_grid
from .solvers import CASE_THETA2


def render_trace(result, path):
    """Traced zero-set components in the free-angle plane."""
    fig, ax = plt.subplots(figsize=(6.0, 6.0))
    for k, line in enumerate(result.polylines):
        pts = line.points
        ax.plot(pts[:, 0], pts[:, 1], lw=1.2, label=f"component {k}" if k < 8 else None)
    ax.set_xlim(result.window[0], result.window[1])
    ax.set_ylim(result.window[2], result.window[3])
    ax.set_xlabel("theta1")
    ax.set_ylabel("theta2")
    ax.set_title(f"{result.tag}: {len(result.polylines)} zero-curve components")
    if result.polylines:
        ax.legend(loc="best", fontsize=8)
    ax.grid(True, alpha=0.25)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_restricted(rootlist, path):
    """Equilibrium function of the two-massive-body problem with its
    roots marked; the collision poles are clipped, not drawn."""
    theta2 = CASE_THETA2[rootlist.case_label]
    t = np.linspace(1e-4, TWO_PI - 1e-4, 4000)
    g = rootlist.m1 * f_grid(t, rootlist.s) + (1.0 - rootlist.m1) * f_grid(
        t - theta2, rootlist.s
    )
    fig, ax = plt.subplots(figsize=(7.0, 4.0))
    ax.plot(t, g, lw=1.0)
    ax.axhline(0.0, color="k", lw=0.6)
    for r in rootlist.roots:
        ax.plot([r], [0.0], "o", color="tab:red", ms=5)
    ax.set_ylim(-4.0, 4.0)
    ax.set_xlim(0.0, TWO_PI)
    ax.set_xlabel("test body angle")
    ax.set_ylabel("tangential force coefficient")
    ax.set_title(
        f"{rootlist.case_label}, m1={rootlist.m1:g}: {len(rootlist.roots)} equilibria"
    )
    ax.grid(True, alpha=0.25)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_region(report, path):
    """Admissible convex 1+5 region with any unresolved boxes shaded."""
    import math

    a = math.pi / 6.0
    b = math.pi / 3.0
    c = math.pi / 2.0
    fig, ax = plt.subplots(figsize=(6.0, 5.0))
    ax.plot([a, c, c, b, a], [a, a, b, b, a], color="k", lw=1.2)
    for rec in report.det_zero_boxes:
        x0, x1 = rec.theta1
        y0, y1 = rec.theta2
        ax.fill([x0, x1, x1, x0], [y0, y0, y1, y1], color="tab:red", alpha=0.6)
    ax.set_xlabel("theta1")
    ax.set_ylabel("theta2")
    ax.set_title(
        f"block-determinant certification: coverage {report.coverage:.4f}, "
        f"{len(report.det_zero_boxes)} unresolved boxes"
    )
    ax.grid(True, alpha=0.25)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
