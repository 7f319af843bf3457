"""Piecewise complexity, minimality index and Simon-congruence toolkit."""

from ._piecewise import (  # noqa: F401
    ResourceError,
    ValidationError,
    alpha,
    arch,
    beta,
    delta_bf,
    downset,
    h,
    h_bf,
    h_pow,
    is_subword,
    l_table,
    l_vector,
    measure,
    mirror,
    period,
    r_table,
    r_vector,
    rho,
    rho_bf,
    rho_pow,
    sim_k,
)

__all__ = [
    "ResourceError",
    "ValidationError",
    "alpha",
    "arch",
    "beta",
    "delta_bf",
    "downset",
    "h",
    "h_bf",
    "h_pow",
    "is_subword",
    "l_table",
    "l_vector",
    "measure",
    "mirror",
    "period",
    "r_table",
    "r_vector",
    "rho",
    "rho_bf",
    "rho_pow",
    "sim_k",
]
