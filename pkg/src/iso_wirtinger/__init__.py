"""Higher-order Wirtinger, isoperimetric and Chernoff inequalities: evaluators,
deficits and equality-case diagnosis for polygons, smooth curves and
support functions."""

from .chernoff import (
    SupportFunction,
    apply_A,
    apply_T_k,
    binomial_area_identity,
    chernoff_core,
    chernoff_theorem,
    locus_area,
    mixed_area,
    support_circle,
    support_curve_points,
    width_k,
)
from .coeffs import CoefficientTable, discrete_table, smooth_table, stability_recurrences_hold
from .discrete import (
    chakerian_identity,
    chakerian_v1,
    chakerian_v2,
    equilateral_bound,
    isoperimetric_higher,
    length_form_even,
    sparse_mode_check,
    stability_c,
    stability_s,
    wirtinger_lambda_form,
    wirtinger_m,
    wirtinger_s_form,
)
from .errors import (
    CoefficientConsistencyError,
    DegenerateCurveError,
    DimensionMismatchError,
    HypothesisViolation,
    IsoWirtingerError,
    OrderOutOfRangeError,
    OrientationError,
    ParameterError,
)
from .fourier import cyclic_shift, derivative, forward_transform, inner_product, inverse_transform, parseval_norm
from .polygon import (
    Polygon,
    centroid,
    curvature_vectors,
    make_regular,
    perimeter,
    random_polygon,
    recenter,
    signed_area,
    squared_side_sum,
    tangent_vectors,
)
from .report import InequalityReport
from .smooth import (
    FourierCurve,
    curve_area,
    curve_length,
    gen_wirtinger,
    reparametrize_by_arclength,
    smooth_isoperimetric,
)

__version__ = "0.1.0"
