"""oscurve: exact classification of plane curve double points and analysis
of rational plane curves from their parameterizations."""

from .census import (
    CensusSite,
    SingularityCensus,
    classify_curve_singularities,
    cusp_conic,
    double_point_census,
    is_curvilinear_at,
    multiple_point_matrix,
    multiple_point_scheme_ideal,
)
from .classifier import (
    NormalizedCurve,
    StepRecord,
    Verdict,
    classify_double_point,
    multiplicity_at_origin,
    normalize_at_point,
    witnesses_in_original_coordinates,
)
from .errors import (
    DegenerateInputError,
    ExtensionMismatchError,
    ExtensionUnsupportedError,
    NonReducedCurveError,
    OscurveError,
    ParseError,
    RingMismatchError,
)
from .groebner import (
    GroebnerBasis,
    HilbertData,
    Ideal,
    TermOrder,
    buchberger,
    eliminate,
    hilbert_function,
    ideal_colon,
    ideal_combine,
    ideal_intersection,
    ideal_power,
    ideal_product,
    ideal_sum,
    irrelevant_ideal,
    normal_form,
    saturate,
    scheme_length,
    zero_dim_radical,
)
from .intersection import (
    GraphCurve,
    branch_separation,
    graph_intersection_multiplicity,
    truncated_local_multiplicity,
)
from .polyops import (
    matrix_det,
    matrix_minors,
    poly_gcd,
    squarefree_part,
    sylvester_resultant,
)
from .qfields import QQ, QuadExt, QuadraticField, Rational, RationalField
from .rational_curves import (
    ImplicitCurve,
    PlaneParameterization,
    cone_fiber_test,
    implicitize,
    moment_point,
    osculating_space_ideal,
    parameterization_from_center,
    point_ideal,
    project_scheme,
    properness_check,
    rational_normal_curve_ideal,
)
from .rings import INF, Polynomial, PolyMatrix, PolyRing, parse_poly

__version__ = "0.1.0"

__all__ = [
    "CensusSite",
    "DegenerateInputError",
    "ExtensionMismatchError",
    "ExtensionUnsupportedError",
    "GraphCurve",
    "GroebnerBasis",
    "HilbertData",
    "INF",
    "Ideal",
    "ImplicitCurve",
    "NonReducedCurveError",
    "NormalizedCurve",
    "OscurveError",
    "ParseError",
    "PlaneParameterization",
    "PolyMatrix",
    "PolyRing",
    "Polynomial",
    "QQ",
    "QuadExt",
    "QuadraticField",
    "Rational",
    "RationalField",
    "RingMismatchError",
    "SingularityCensus",
    "StepRecord",
    "TermOrder",
    "Verdict",
    "branch_separation",
    "buchberger",
    "classify_curve_singularities",
    "classify_double_point",
    "cone_fiber_test",
    "cusp_conic",
    "double_point_census",
    "eliminate",
    "graph_intersection_multiplicity",
    "hilbert_function",
    "ideal_colon",
    "ideal_combine",
    "ideal_intersection",
    "ideal_power",
    "ideal_product",
    "ideal_sum",
    "implicitize",
    "irrelevant_ideal",
    "is_curvilinear_at",
    "matrix_det",
    "matrix_minors",
    "moment_point",
    "multiple_point_matrix",
    "multiple_point_scheme_ideal",
    "multiplicity_at_origin",
    "normal_form",
    "normalize_at_point",
    "osculating_space_ideal",
    "parameterization_from_center",
    "parse_poly",
    "point_ideal",
    "poly_gcd",
    "project_scheme",
    "properness_check",
    "rational_normal_curve_ideal",
    "saturate",
    "scheme_length",
    "squarefree_part",
    "sylvester_resultant",
    "truncated_local_multiplicity",
    "witnesses_in_original_coordinates",
    "zero_dim_radical",
]
