"""Exact certification of nonnegative sine and cosine polynomials on [0, pi]."""

from .bounds import RatInterval, branch_and_bound_nn, cos_enclosure, sin_enclosure
from .certify import certify, certify_cosine, certify_sine
from .criteria import (
    CriteriaReport,
    belov_condition,
    criteria_report,
    fejer_condition,
    identity_k3_check,
    necessary_conditions,
    vietoris_coefficients,
)
from .families import FamilyId, kappa_lambda, lukacs, phi, sigma, theta, vietoris
from .polys import (
    AlgPoly,
    CosinePoly,
    SinePoly,
    cosine_to_algebraic,
    eval_float,
    eval_rational,
    parse_coefficients,
    parse_rational,
    reflect,
    sine_to_algebraic,
)
from .region import (
    BoundaryPoint,
    RegionQuery,
    boundary_sweep,
    cosine2_characterize,
    degree3_characterize,
    kappa0,
    membership,
)
from .sturm import Verdict, count_roots, is_nonneg_on, isolate_roots, min_enclosure, squarefree_part

__version__ = "0.1.0"
