"""Location-type codes (dominating, identifying, locating-dominating,
self-identifying) in circulant graphs: verification with witnesses,
explicit optimal constructions, lower bounds with provenance, lifts to
periodic codes on infinite grids, and an exact branch-and-bound solver."""

from .bounds import (
    BoundReport,
    best_lower_bound,
    exact_sid_value,
    grid_lower_bound,
    regular_graph_lower_bound,
    strict_nonattainment_bound,
)
from .core import (
    CirculantGraph,
    Code,
    IdentifierSet,
    NotApplicableError,
    closed_neighborhood,
    closed_twins,
    code_from_payload,
    code_to_payload,
    distance,
    identifier_set,
    make_graph,
)
from .families import (
    FAMILIES,
    ConstructionResult,
    applicable_families,
    build_family,
    periodic_code,
)
from .grids import (
    GridKind,
    PeriodicGridCode,
    grid_density,
    grid_verify,
    lift,
    literature_density,
    matching_grid,
    render_domain,
)
from .solver import (
    SolveRequest,
    SolveResult,
    SolveStatus,
    exhaustive_min_code_size,
    is_optimal,
    min_code_size,
)
from .verify import (
    CodeKind,
    VerificationReport,
    is_dominating,
    is_identifying,
    is_locating_dominating,
    is_self_identifying,
    is_self_identifying_pairwise,
    sid_structure_audit,
    verify,
)

__all__ = [
    "BoundReport",
    "CirculantGraph",
    "Code",
    "CodeKind",
    "ConstructionResult",
    "FAMILIES",
    "GridKind",
    "IdentifierSet",
    "NotApplicableError",
    "PeriodicGridCode",
    "SolveRequest",
    "SolveResult",
    "SolveStatus",
    "VerificationReport",
    "applicable_families",
    "best_lower_bound",
    "build_family",
    "closed_neighborhood",
    "closed_twins",
    "code_from_payload",
    "code_to_payload",
    "distance",
    "exact_sid_value",
    "exhaustive_min_code_size",
    "grid_density",
    "grid_lower_bound",
    "grid_verify",
    "identifier_set",
    "is_dominating",
    "is_identifying",
    "is_locating_dominating",
    "is_optimal",
    "is_self_identifying",
    "is_self_identifying_pairwise",
    "lift",
    "literature_density",
    "make_graph",
    "matching_grid",
    "min_code_size",
    "periodic_code",
    "regular_graph_lower_bound",
    "render_domain",
    "sid_structure_audit",
    "strict_nonattainment_bound",
    "verify",
]

__version__ = "0.1.0"
