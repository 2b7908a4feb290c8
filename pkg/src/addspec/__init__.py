"""Numerical certificates for exponential bases of two-axis additive measures.

Component measures live on the coordinate axes of the plane; the toolkit
assembles exact Gram sections, runs the zigzag combinatorics that obstruct
Riesz bases, builds the known explicit spectra, and solves or scans the
orthogonality constraint for interval components.
"""

__version__ = "0.1.0"

from .additive_space import (
    AdditiveSpace,
    ExponentPair,
    FiniteCombination,
    PiecewisePolynomial,
    combination_norm_sq,
    exp_inner,
    l_space,
    plus_space,
    projection_coefficients,
    space_from_name,
    symmetric_space,
    t_space,
)
from .constructions import (
    NonOverlapSpectrum,
    integer_base,
    l_space_onb,
    lev_style_set,
    m_tau_eigenvalues,
    mirror_spectrum,
    nonoverlap_riesz_spectrum,
    staircase_zigzag,
)
from .errors import (
    MalformedInputError,
    MultiplicityOneViolation,
    NotAnSSequenceError,
    OverlappingSupportError,
    ToolkitError,
    UnsolvedCaseError,
    ZigzagLoopDetected,
)
from .exponents import (
    UNBOUNDED_BY_LOOP,
    ExponentSet,
    ZigzagPath,
    find_zigzag_loop,
    is_zigzag_complete,
    lower_beurling_density,
    max_zigzag_length,
    multiplicity,
    project,
    zigzag_distance_map,
)
from .gram import (
    GramMatrix,
    SectionCertificate,
    alternating_zigzag_norm,
    assemble,
    collinear_failure_demo,
    extremal_eigenvalues,
    identity_deviation,
    parseval_residual,
    riesz_section_certificate,
)
from .measures import IntervalUnionMeasure, fourier_transform, support_bounds
from .ortho_solver import (
    OrthSolutionFamily,
    classify_case,
    classify_spectrum_candidates,
    residual,
    scan_residual,
    solve_families,
)
