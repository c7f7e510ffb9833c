"""Local pro-isomorphic zeta functions of the D* groups for x^2 and x^3.

Thin wrapper around the C++ core. The main entry points are exact integer
counts (`f_count`), the torus weight (`theta`, `theta_tilde`), the closed
zeta forms (`zeta_closed`, `zeta_series`), the direct Bruhat summation
(`zeta_series_bruhat`) and the verification suites (`verify`).
"""

from ._core import (
    case_of,
    cone_partition_holds,
    f_count,
    f_series_coefficients,
    functional_equation,
    pair_count,
    theta,
    theta_case,
    theta_tilde,
    verify,
    zeta_assembled_equals_closed,
    zeta_closed,
    zeta_series,
    zeta_series_bruhat,
)

__all__ = [
    "case_of",
    "cone_partition_holds",
    "f_count",
    "f_series_coefficients",
    "functional_equation",
    "pair_count",
    "theta",
    "theta_case",
    "theta_tilde",
    "verify",
    "zeta_assembled_equals_closed",
    "zeta_closed",
    "zeta_series",
    "zeta_series_bruhat",
]

__version__ = "0.1.0"
