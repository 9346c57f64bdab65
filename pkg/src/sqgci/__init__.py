"""Pseudospectral workbench for forced-SQG convex-integration runs on T^2."""

from .spectral import (
    FourierGrid,
    LPPartition,
    Multiplier,
    SpectralField,
    apply_multiplier,
    besov_norm,
    commutator,
    field_from_modes,
    forward_transform,
    fractional_laplacian,
    inner_product,
    inverse_div,
    inverse_transform,
    l2_norm,
    linf_norm,
    lp_block,
    perp_velocity,
    product,
    project_leq,
    riesz,
    riesz_odd,
    x_norm,
    zero_field,
)

__version__ = "0.1.0"
