"""Plus-space Kloosterman sums, quadratic Weyl sums and traces of singular moduli."""

from ._core import (
    DomainError,
    QuadForm,
    check_theorem1,
    check_theorem2,
    check_theorem51,
    class_number,
    cm_point,
    corollary3_threshold,
    ell_constant,
    eval_j,
    faber_poly,
    factorizations,
    forms_in_rectangle,
    genus_char,
    is_discriminant,
    is_fundamental,
    j_coefficients,
    kronecker,
    nearest_integer_recovery,
    omega,
    partial_sum,
    plus_admissible,
    rectangle_sum,
    reduce,
    reduced_forms,
    s_plus,
    sigma1,
    tau,
    theorem51_rhs,
    trace,
    weighted_class_number_six,
    weil_rhs,
    weyl_direct,
    weyl_kohnen,
    zeta_one_plus,
    zeta_partial,
)

__all__ = [
    "DomainError",
    "QuadForm",
    "check_theorem1",
    "check_theorem2",
    "check_theorem51",
    "class_number",
    "cm_point",
    "corollary3_threshold",
    "ell_constant",
    "eval_j",
    "faber_poly",
    "factorizations",
    "forms_in_rectangle",
    "genus_char",
    "is_discriminant",
    "is_fundamental",
    "j_coefficients",
    "kronecker",
    "nearest_integer_recovery",
    "omega",
    "partial_sum",
    "plus_admissible",
    "rectangle_sum",
    "reduce",
    "reduced_forms",
    "s_plus",
    "sigma1",
    "tau",
    "theorem51_rhs",
    "trace",
    "weighted_class_number_six",
    "weil_rhs",
    "weyl_direct",
    "weyl_kohnen",
    "zeta_one_plus",
    "zeta_partial",
]
