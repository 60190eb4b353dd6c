"""relboost: relativistically boosted two-photon OAM entanglement.

Joint OAM amplitude matrices for three observer-motion models, adaptive
panel quadrature for their oscillatory integrands, and the full
entanglement-metric suite (entropy, purity, mutual information,
negativity, effective dimensionality, Schmidt spectra, marginals).
"""

__version__ = "0.1.0"

from .kinematics import (
    TWO_PI,
    boost_angle,
    boost_jacobian,
    inverse_boost_angle,
    reduce_angle,
)
from .quadrature import (
    QuadratureSpec,
    ToleranceNotReached,
    convergence_report,
    integrate_periodic,
    integrate_periodic_batch,
    seed_edges,
)
from .amplitudes import (
    AmplitudeMatrix,
    BoostModel,
    amplitude,
    build_matrix,
    mode_indices,
    nz2_axis_closed_form,
    zero_rm_closed_form,
)
from .entanglement import (
    DecompositionFailure,
    EntanglementMetrics,
    SchmidtSpectrum,
    ZeroState,
    effective_dimensionality,
    entropy_bits,
    joint_probability,
    marginals,
    metrics,
    mutual_information_bits,
    negativity,
    negativity_partial_transpose,
    normalize,
    purity,
    reduced_eigenvalues,
    schmidt,
)
from .engine import (
    InvalidRequest,
    SweepPoint,
    SweepRequest,
    SweepResult,
    compute_point,
    default_gamma_grid,
    resolve_threads,
    run_sweep,
)

__all__ = [
    "TWO_PI",
    "boost_angle",
    "inverse_boost_angle",
    "boost_jacobian",
    "reduce_angle",
    "QuadratureSpec",
    "ToleranceNotReached",
    "integrate_periodic",
    "integrate_periodic_batch",
    "convergence_report",
    "seed_edges",
    "BoostModel",
    "AmplitudeMatrix",
    "amplitude",
    "build_matrix",
    "mode_indices",
    "zero_rm_closed_form",
    "nz2_axis_closed_form",
    "ZeroState",
    "DecompositionFailure",
    "SchmidtSpectrum",
    "EntanglementMetrics",
    "normalize",
    "joint_probability",
    "schmidt",
    "entropy_bits",
    "purity",
    "mutual_information_bits",
    "negativity",
    "negativity_partial_transpose",
    "effective_dimensionality",
    "metrics",
    "marginals",
    "reduced_eigenvalues",
    "InvalidRequest",
    "SweepRequest",
    "SweepPoint",
    "SweepResult",
    "run_sweep",
    "compute_point",
    "default_gamma_grid",
    "resolve_threads",
    "__version__",
]
