"""Orthogonal function systems on the unit ball and its exterior.

Thin python surface over the C++ core: solid spherical harmonics, basic
monogenic/ambigenic/contragenic functions, closed-form norms, quadrature
checks and truncated Bergman projections.
"""

from ._core import (  # noqa: F401
    alpha,
    appell_residual,
    bergman_table,
    beta,
    duality_residual,
    eval_u,
    eval_x,
    eval_y,
    eval_z,
    exp_monogenic,
    exp_monogenicity_residual,
    gram_max_offdiag,
    index_range,
    inner_basis,
    kelvin_residual,
    legendre_p,
    legendre_p_neg_order,
    mixed_inner_xxbar,
    monogenicity_residual,
    norm_u,
    norm_vec_x,
    norm_x,
    norm_z,
    project_basis,
    project_exp,
)

__all__ = [
    "alpha",
    "appell_residual",
    "bergman_table",
    "beta",
    "duality_residual",
    "eval_u",
    "eval_x",
    "eval_y",
    "eval_z",
    "exp_monogenic",
    "exp_monogenicity_residual",
    "gram_max_offdiag",
    "index_range",
    "inner_basis",
    "kelvin_residual",
    "legendre_p",
    "legendre_p_neg_order",
    "mixed_inner_xxbar",
    "monogenicity_residual",
    "norm_u",
    "norm_vec_x",
    "norm_x",
    "norm_z",
    "project_basis",
    "project_exp",
]
