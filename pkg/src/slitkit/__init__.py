"""Numerical toolkit for annulus slit maps and squeezing-function bounds."""

from .counterexample import (
    ArcFamily,
    Certificate,
    CircularArc,
    CounterexampleConfig,
    EvidenceRow,
    EvidenceTable,
    certificate_from_json,
    certificate_to_json,
    certify_degenerate,
    delta_of,
    make_shrinking_arcs,
    nondegenerate_evidence,
    revalidate_certificate,
    search_x_star,
)
from .errors import (
    ConvergenceError,
    DomainError,
    GeometryError,
    NumericalOverflowError,
    PoleError,
    SingularMatrixError,
    SlitkitError,
)
from .potential import (
    DiscreteMeasure,
    PeriodMatrix,
    annulus_harmonic_measure_inner,
    annulus_period,
    annulus_period_matrix,
    competitor_boundary_dist,
    harmonic_measure_upper_bound,
    log_potential,
    radii_solve,
    shrink_mass_bound,
    squeezing_annulus,
    uniform_arc_measure,
    uniform_circle_measure,
)
from .prime import AnnulusModulus, prime_omega, prime_omega_log_deriv, truncation_error_bound
from .slitmap import (
    MobiusReal,
    SlitArc,
    SlitMapParams,
    f_eval,
    f_inverse,
    f_inverse_real_segment,
    f_prime,
    f_prime_at_center,
    mobius_apply,
    mobius_inverse,
    phi_eval,
    q_of,
    q_prime_at_x0,
    slit_dist_after_mobius,
    slit_endpoint,
)
from .svgfig import plot_map

__version__ = "0.1.0"

__all__ = [
    "AnnulusModulus",
    "ArcFamily",
    "Certificate",
    "CircularArc",
    "ConvergenceError",
    "CounterexampleConfig",
    "DiscreteMeasure",
    "DomainError",
    "EvidenceRow",
    "EvidenceTable",
    "GeometryError",
    "MobiusReal",
    "NumericalOverflowError",
    "PeriodMatrix",
    "PoleError",
    "SingularMatrixError",
    "SlitArc",
    "SlitMapParams",
    "SlitkitError",
    "annulus_harmonic_measure_inner",
    "annulus_period",
    "annulus_period_matrix",
    "certificate_from_json",
    "certificate_to_json",
    "certify_degenerate",
    "competitor_boundary_dist",
    "delta_of",
    "f_eval",
    "f_inverse",
    "f_inverse_real_segment",
    "f_prime",
    "f_prime_at_center",
    "harmonic_measure_upper_bound",
    "log_potential",
    "make_shrinking_arcs",
    "mobius_apply",
    "mobius_inverse",
    "nondegenerate_evidence",
    "phi_eval",
    "plot_map",
    "prime_omega",
    "prime_omega_log_deriv",
    "q_of",
    "q_prime_at_x0",
    "radii_solve",
    "revalidate_certificate",
    "search_x_star",
    "shrink_mass_bound",
    "slit_dist_after_mobius",
    "slit_endpoint",
    "squeezing_annulus",
    "truncation_error_bound",
    "uniform_arc_measure",
    "uniform_circle_measure",
]
