"""Exact root-distribution and stability analysis of polynomials.

Coefficients are passed as lists of rational strings ("p/q" or integers,
"a+bi" for complex) in descending degree order; every returned number is an
exact rational string.
"""

from polystab._core import (
    classify,
    crosscheck,
    distribution,
    hodograph_csv,
    hodograph_svg,
    hurwitz_minors,
    is_stable,
    lorenz,
    markov_parameters,
    routh_array,
    stieltjes_terms,
    winding,
)

__all__ = [
    "classify",
    "crosscheck",
    "distribution",
    "hodograph_csv",
    "hodograph_svg",
    "hurwitz_minors",
    "is_stable",
    "lorenz",
    "markov_parameters",
    "routh_array",
    "stieltjes_terms",
    "winding",
]
