"""Numerical laboratory for higher-order Kobayashi metrics on bounded domains.

The package computes the k-th Kobayashi metric by solving the extremal-disc
problem directly, and certifies or falsifies stationarity of boundary-attached
analytic discs through Fourier analysis on the unit circle.
"""

from .circle_analysis import (
    CircleFunction,
    FourierSpectrum,
    fourier_transform,
    holomorphic_extension,
    inverse_transform,
    negative_tail_residual,
    real_completion,
    winding_number,
)
from .discs import (
    AnalyticDisc,
    blaschke_product,
    boundary_trace,
    disc_from_dict,
    disc_to_dict,
    reparametrize,
    rotate,
    schwarz_bound_check,
    schwarz_equality_disc,
)
from .domains import (
    Domain,
    boundary_distance_profile,
    contains,
    convexity_probe,
    domain_from_dict,
    make_ball,
    make_complex_ellipsoid,
    make_domain,
    make_ellipsoid,
    make_unit_disc,
)
from .errors import *  # noqa: F401,F403 -- the error taxonomy is the API
from .jets import (
    AnalyticMapSeries,
    JetVector,
    compose_series,
    first_nonzero_index,
    jet_from_dict,
    jet_of_disc,
    jet_project,
    jet_pushforward,
    jet_scale,
    jet_to_dict,
)
from .kobayashi import (
    MetricResult,
    SolverConfig,
    k1_disc_closed_form,
    k2_disc_closed_form,
    kobayashi_k_metric,
    metric_property_suite,
    yu_metric,
)
from .stationarity import (
    StationarityCertificate,
    StationarityConfig,
    euler_lagrange_check,
    local_extremality_probe,
    pairing_sum,
    poletsky_functionals,
    scalar_stationarity_exact,
    stationarity_search,
)

__version__ = "0.1.0"
