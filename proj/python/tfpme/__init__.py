"""Self-similar (Barenblatt) solutions of the time-fractional porous medium equation."""

from ._core import (
    FractionalParams,
    MassMatchResult,
    NumericalError,
    OrderReport,
    Profile,
    SpaceTimeSolution,
    __version__,
    classical_constant,
    classical_profile,
    classical_support,
    discrete_half_mass,
    estimate_order,
    find_support,
    kernel_exact,
    kernel_quadrature,
    origin_one_sided_slope,
    profile_upper_bound,
    seed_value,
    solve_profile,
    specfun,
)

__all__ = [
    "FractionalParams",
    "MassMatchResult",
    "NumericalError",
    "OrderReport",
    "Profile",
    "SpaceTimeSolution",
    "__version__",
    "classical_constant",
    "classical_profile",
    "classical_support",
    "discrete_half_mass",
    "estimate_order",
    "find_support",
    "kernel_exact",
    "kernel_quadrature",
    "origin_one_sided_slope",
    "profile_upper_bound",
    "seed_value",
    "solve_profile",
    "specfun",
]
