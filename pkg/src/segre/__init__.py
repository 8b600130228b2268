"""Exact analysis of pencils of quadrics in CP4.

The package computes Segre symbols of rational quadric pencils without
root finding, decides whether the base locus is a quartic surface of the
sixteen-symbol catalog, and derives the surface's dual-variety report:
singularities, class degree, double covers with branch curves, divisors
at infinity and degeneration transitions.  A floating-point oracle
cross-validates the exact path.
"""

from .catalog import (
    CATALOG,
    CATALOG_ORDER,
    AutE,
    CatalogRow,
    SingularityType,
    class_degree,
    transitions,
)
from .classify import SurfaceReport, classify_symbol
from .covers import (
    BaseKind,
    BranchStructure,
    CoverReport,
    SectionDivisor,
    VertexPosition,
    branch_dual_degree,
    covers_of,
    dual_section,
)
from .errors import (
    DegeneratePencilError,
    DegreeError,
    IllConditionedError,
    InternalConsistencyError,
    NoSmoothMemberError,
    ParseError,
    SegreError,
    ZeroFormError,
)
from .forms import ParsedForm, parse_quadratic_form, render_form
from .numeric import NumericPartition, numeric_exponent_partitions
from .pencil import (
    DegeneracyReport,
    InvariantFactors,
    QuadricPencil,
    degeneracy_report,
    det_poly,
    invariant_factors,
    select_nonsingular_member,
)
from .polynomial import Polynomial, Rational, coprime_basis, poly_gcd, squarefree_part
from .reporting import analyze_pencil
from .symbol import (
    SegreSymbol,
    build_normal_form,
    canonicalize,
    compute_symbol,
    random_instance,
)

__version__ = "0.1.0"

__all__ = [
    "AutE",
    "BaseKind",
    "BranchStructure",
    "CATALOG",
    "CATALOG_ORDER",
    "CatalogRow",
    "CoverReport",
    "DegeneracyReport",
    "DegeneratePencilError",
    "DegreeError",
    "IllConditionedError",
    "InternalConsistencyError",
    "InvariantFactors",
    "NoSmoothMemberError",
    "NumericPartition",
    "ParseError",
    "ParsedForm",
    "Polynomial",
    "QuadricPencil",
    "Rational",
    "SectionDivisor",
    "SegreError",
    "SegreSymbol",
    "SingularityType",
    "SurfaceReport",
    "VertexPosition",
    "ZeroFormError",
    "analyze_pencil",
    "branch_dual_degree",
    "build_normal_form",
    "canonicalize",
    "class_degree",
    "classify_symbol",
    "compute_symbol",
    "coprime_basis",
    "covers_of",
    "degeneracy_report",
    "det_poly",
    "dual_section",
    "invariant_factors",
    "numeric_exponent_partitions",
    "parse_quadratic_form",
    "poly_gcd",
    "random_instance",
    "render_form",
    "select_nonsingular_member",
    "squarefree_part",
    "transitions",
]
