"""Ulrich-bundle trichotomy evidence on small del Pezzo surfaces.

The package mechanizes the dimension-vector bookkeeping behind the
classification of Ulrich bundles on p2, p1xp1 and the blow-ups x3, x4:
exact Picard-lattice arithmetic, quiver Euler/Tits forms with Kac-style
root classes, per-polarization constraint systems with exact finiteness
certificates, complete candidate enumeration, and trichotomy-evidence
reports.  Everything is exact integer/rational arithmetic.
"""

from .lattice import (
    ChiIntegralityError,
    Divisor,
    P1XP1,
    P2,
    Surface,
    SurfaceMismatch,
    UnsupportedSurface,
    X3,
    X4,
    blow_up,
    canonical_class,
    chi,
    effectivity_suite,
    intersect,
    is_ample,
    is_globally_generated,
    is_very_ample,
    line,
    exceptional,
    ulrich_dual_twist,
    zero_divisor,
)
from .quiver import (
    CATALOG,
    DiagramType,
    K3,
    K32,
    K51,
    Quiver,
    RootClass,
    S4,
    catalog,
    classify_root,
    diagram_type,
    euler_form,
    is_hyperbolic,
    moduli_dim,
    tits,
)
from .ulrich import (
    CONE_SCALE,
    Candidate,
    FinitenessCertificate,
    RankCandidates,
    TrichotomyReport,
    UlrichSystem,
    build_system,
    classify_trichotomy,
    enumerate_candidates,
    finiteness_certificate,
    verify_transformations,
)

__version__ = "0.1.0"

__all__ = [
    "ChiIntegralityError",
    "Divisor",
    "P1XP1",
    "P2",
    "Surface",
    "SurfaceMismatch",
    "UnsupportedSurface",
    "X3",
    "X4",
    "blow_up",
    "canonical_class",
    "chi",
    "effectivity_suite",
    "intersect",
    "is_ample",
    "is_globally_generated",
    "is_very_ample",
    "line",
    "exceptional",
    "ulrich_dual_twist",
    "zero_divisor",
    "CATALOG",
    "DiagramType",
    "K3",
    "K32",
    "K51",
    "Quiver",
    "RootClass",
    "S4",
    "catalog",
    "classify_root",
    "diagram_type",
    "euler_form",
    "is_hyperbolic",
    "moduli_dim",
    "tits",
    "CONE_SCALE",
    "Candidate",
    "FinitenessCertificate",
    "RankCandidates",
    "TrichotomyReport",
    "UlrichSystem",
    "build_system",
    "classify_trichotomy",
    "enumerate_candidates",
    "finiteness_certificate",
    "verify_transformations",
]
