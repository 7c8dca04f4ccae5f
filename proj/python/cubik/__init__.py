"""Kernel for finite cubical sets with connections."""

from _cubik import (  # noqa: F401
    Complex,
    Simplicial,
    compose_ops,
    cone,
    evaluate_op,
    from_cub,
    from_sim,
    ho_table,
    hom_count,
    integral,
    involute_op,
    is_quasicategory,
    is_quasicategory_complex,
    isomorphic,
    mapping_space,
    natural_marking,
    nerve_truncation,
    normalize_op,
    product,
    q_functor,
    run_suite,
    shape,
    standard_simplex,
    suspension,
    theta_verify,
    triangulate,
    walking_iso_simplicial,
)
