"""Hopf algebras dual to the tree series groups."""

from .algebra import (
    ALPHA,
    DIF,
    FDB,
    INV_OVER,
    INV_UNDER,
    RHO,
    SYM,
    AlgebraKind,
    Tensor,
    format_tensor,
    format_word,
    tensor_to_json,
)
from .coproducts import (
    COPRODUCT_NAMES,
    Coproduct,
    coact_dif,
    coact_inv,
    coact_rho,
    coprod_alpha,
    coprod_alpha_recursive,
    coprod_dif,
    coprod_inv,
    coprod_rho,
    fdb_coproduct,
    get_coproduct,
    monoid_coproduct_as,
    operad_coproduct_as,
)
from .structure import (
    AlgebraMorphism,
    antipode,
    antipode_identities,
    antipode_word,
    character_convolve,
    counit,
    counit_leg,
    evaluate,
    hopf_morphism_data,
)

__all__ = [
    "ALPHA", "DIF", "FDB", "INV_OVER", "INV_UNDER", "RHO", "SYM",
    "AlgebraKind", "Tensor", "format_tensor", "format_word", "tensor_to_json",
    "COPRODUCT_NAMES", "Coproduct", "coact_dif", "coact_inv", "coact_rho",
    "coprod_alpha", "coprod_alpha_recursive", "coprod_dif", "coprod_inv", "coprod_rho",
    "fdb_coproduct", "get_coproduct", "monoid_coproduct_as", "operad_coproduct_as",
    "AlgebraMorphism", "antipode", "antipode_identities", "antipode_word",
    "character_convolve", "counit", "counit_leg", "evaluate", "hopf_morphism_data",
]
