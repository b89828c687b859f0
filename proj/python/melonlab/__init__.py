"""Exact and asymptotic statistics of p-watermelons.

Thin re-export of the compiled core. Counts come back as python ints,
probabilities and moments as fractions.Fraction, limit-law values as floats.
"""

from melonlab._core import (
    brute_force_stats,
    count_height_lt,
    count_strip,
    count_total,
    height_distribution,
    height_limit_cdf,
    height_moment,
    moment_asymptotic,
    range_distribution,
    range_limit_cdf,
    set_precision,
    table1_coefficient,
)

__all__ = [
    "brute_force_stats",
    "count_height_lt",
    "count_strip",
    "count_total",
    "height_distribution",
    "height_limit_cdf",
    "height_moment",
    "moment_asymptotic",
    "range_distribution",
    "range_limit_cdf",
    "set_precision",
    "table1_coefficient",
]
