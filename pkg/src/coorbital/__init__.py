"""Central configurations of coorbital rings around a dominant mass.

Library layout:

* geometry: angles, separations, the pairwise force and stiffness
  kernels, potentials, gradients, Hessians.
* ccsystem: the antisymmetric coefficient matrix, its Pfaffian and
  kernel, positive-mass regions, symmetric ring families.
* stability: inertia counts and the symmetric 1+5 block reduction.
* distform: mutual-distance formulation of the three-ring case.
* solvers: root finding, zero-curve tracing, region membership,
  full and reduced equilibrium solves.
* interval / certify: outward-rounded interval arithmetic and the
  machine-checkable certificates.
* cli / figures: the `coorbital` command and its PNG renderings.
"""

from .ccsystem import (
    FAMILY_FREE_COUNT,
    FAMILY_SIZE,
    KernelBasis,
    PositiveMassRegion,
    SymmetricFamily,
    build_F,
    expand_family,
    family_slots,
    mass_kernel,
    mass_mirror_defect,
    pfaffian,
    positive_mass_region,
    residual,
    sym5_reduced_system,
    zero_mass_values,
)
from .certify import (
    certify_detH2_region,
    certify_theorem1,
    certify_theorem4,
)
from .distform import (
    concyclicity_E,
    max_E_residual,
    n3_eliminated_residuals,
    n3_lagrange_residuals,
)
from .errors import (
    CertificationError,
    CollisionError,
    CoorbitalError,
    NoPositiveMassError,
    OrderingError,
    ResourceLimitError,
)
from .geometry import (
    MassVector,
    RingConfiguration,
    chord_distance,
    f_value,
    hall_potential,
    hessian,
    hessian_entry,
    potential_gradient,
    regular_ngon,
)
from .interval import (
    Interval,
    certified_sign,
    certify_bracket,
    interval_f,
    interval_h,
    rational_pi,
)
from .solvers import (
    RootList,
    TraceResult,
    brute_force_roots,
    find_asymmetric_positive,
    pfaffian_on_family,
    region_check_1p4,
    region_check_1p5,
    solve_1p2p1,
    solve_ring,
    solve_symmetric_family,
    trace_zero_curve,
)
from .stability import (
    StabilityReport,
    Sym5Blocks,
    inertia,
    stability_report,
    sym5_blocks,
    sym5_det_H1,
)

__version__ = "0.1.0"
