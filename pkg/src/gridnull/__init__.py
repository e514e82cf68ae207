"""Exact analysis of structured grids over fields.

Finite subsets of a field carry a nullity: the number of leading
coefficients of their vanishing polynomial that are zero.  Products of
highly null sets admit sharper polynomial-method results than generic
grids, and this package computes all of them exactly: witness search,
coefficient extraction by weighted sums, interpolation, sum vanishing,
sumset dichotomies, and plane-intersection counts, each backed by naive
oracles and exhaustive scans.
"""

from .errors import (
    CharacteristicZero,
    DegreeBoundViolated,
    DimensionMismatch,
    DivisionByZero,
    EmptyFactorList,
    EmptySet,
    EvenQ,
    ExponentOutOfRange,
    FieldNotRationals,
    GridNullError,
    InfiniteField,
    LambdaExceedsNullity,
    MissingValue,
    MixedFields,
    NonPrimeModulus,
    NotExtensionField,
    NotPrimeField,
    OrderDoesNotDivide,
    ParseError,
    PointNotOnGrid,
    PreconditionViolated,
    ReducibleModulus,
    ScanTooLarge,
    SingletonFactor,
    SizeBoundExceeded,
    UnknownVariable,
    UnsupportedDegree,
    ZeroShift,
    ZeroVector,
)
from .field import (
    ExtensionField,
    FieldCtx,
    FieldElement,
    FieldSpec,
    PrimeField,
    Rationals,
    enumerate_elements,
    field_make,
    parse_field,
    trace,
)
from .poly import (
    MINUS_INFINITY,
    Monomial,
    MultiPoly,
    UniPoly,
    char_poly,
    coefficient,
    format_poly,
    formal_derivative,
    multi_eval,
    parse_element,
    parse_poly,
    raise_degree,
)
from .nullity import (
    FiniteSet,
    MomentTable,
    complete_moments,
    elementary_moments,
    nullity,
    parse_set,
    power_sums,
    sylvester_sum,
    vandermonde_degree,
    weight,
)
from .grids import (
    Grid,
    additive_coset,
    grid_make,
    grid_points,
    multiplicative_coset,
    parse_factor,
    parse_grid,
    trace_zero_set,
)
from .reports import CoefficientReport, ScanReport, WitnessReport, to_dict
from .theorems import (
    cauchy_davenport,
    cct_coefficient,
    extract_coefficient,
    gcn_check,
    grid_sum,
    interpolate,
    plane_grid_count,
    plane_scan,
    punctured_check,
)
from .oracle import (
    OracleConfig,
    coefficient_oracle,
    enumerate_additive_subgroups,
    exp_series_check,
    moments_bruteforce,
    ore_form_check,
    redei_scan,
    scd_scan,
    sylvester_rhs_bruteforce,
)

__version__ = "0.1.0"
