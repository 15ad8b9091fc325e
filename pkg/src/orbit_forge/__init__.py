"""orbit-forge: invariant-metric machinery for two flag-manifold families.

Matrix Lie algebras with invariant inner products, reductive decompositions
carrying two-parameter metrics, geodesic-vector tests, exact adjoint-orbit
invariants through characteristic polynomials, and a multi-start orbit
maximizer with a compiled kernel and a pure-numpy fallback.
"""

from .algebras import (
    AlgebraDescriptor,
    AlgebraElement,
    adjoint,
    basis_element,
    element_from_coords,
    element_from_matrix,
    embed_dpi,
    embed_sigma,
    embed_tau_prime,
    invariant_inner,
    random_element,
    random_group_element,
    so,
    sp,
    su,
    u,
)
from .kernels import BACKEND
from .matrices import (
    PolyCoeffs,
    bracket,
    cayley_retract,
    charpoly,
    haar_orthogonal,
    skew_spectrum_so7,
    so7_weyl_frame,
)
from .orbits import (
    CaseAnalysisRecord,
    DeltaSearchReport,
    RefutationCertificate,
    SearchConfig,
    delta_search,
    le_inequality,
    pol_analytic,
    prop_main_cases,
    refute_vspom4,
    same_orbit_so7,
)
from .quaternions import Quaternion, QuaternionMatrix
from .reporting import ScenarioReport, emit_report, parse_report
from .scenarios import REGISTRY, ScenarioConfig, run_scenario
from .spaces import (
    SPACE_SO,
    SPACE_SP,
    GeodesicCheckResult,
    MetricParams,
    ReductiveDecomposition,
    build_decomposition,
    delta_objective,
    geodesic_check,
    geodesic_completions,
    make_so7_vector,
    make_sp_candidate,
    metric_inner,
)

__version__ = "0.1.0"
