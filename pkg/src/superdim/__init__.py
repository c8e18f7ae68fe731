"""Exact typicality tests, Kac dimensions and Hilbert series for basic classical Lie superalgebras."""

from .atypical import (
    AtypicalitySite,
    atypical_dim_sequence,
    classify_atypicality,
    dim_singly_atypical,
)
from .errors import (
    ConsistencyError,
    DegenerateFormError,
    InvalidAlgebraError,
    ParseError,
    PreconditionError,
    SingularSystemError,
    SuperdimError,
)
from .exactq import Poly, RationalSeries, expand, normalize
from .hilbert import (
    HilbertPolynomial,
    dim_from_series,
    dim_typical,
    hilbert_polynomial,
    series_via_operator,
    series_via_theorem,
    verify_consistency,
)
from .rootdata import AlgebraSpec, Root, RootDatum, build_root_datum, parse_algebra
from .typicality import TypicalityReport, family_criteria_n_typical, is_n_typical, is_typical
from .weights import Dominance, Weight, marks_of, parse_weight, weight_from_marks

__version__ = "0.1.0"
