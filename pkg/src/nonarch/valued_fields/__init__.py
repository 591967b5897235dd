"""p-adic numbers, valuation logarithms and series over Q_p."""

from .padic import (
    DEFAULT_PRECISION,
    INF,
    PAdicNumber,
    abs_p,
    add,
    expand,
    inv,
    mul,
    neg,
    truncations,
    valuation_of_int,
    valuation_of_rational,
    vlog,
)
from .series import (
    Radius,
    SeriesSpec,
    SeriesSum,
    factorial_reciprocal_valuations,
    pattern_spec,
    radius_of_convergence,
    sum_series,
)

__all__ = [
    "DEFAULT_PRECISION", "INF", "PAdicNumber", "abs_p", "add", "expand", "inv",
    "mul", "neg", "truncations", "valuation_of_int", "valuation_of_rational",
    "vlog", "Radius", "SeriesSpec", "SeriesSum", "factorial_reciprocal_valuations",
    "pattern_spec", "radius_of_convergence", "sum_series",
]
