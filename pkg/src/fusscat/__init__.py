"""fusscat: exact Fuss-Catalan combinatorics of finite Coxeter systems."""

from .field import RealCyclotomicField, FieldElement
from .coxeter import (
    BadMatrix,
    ColoredRoot,
    CoxeterSystem,
    GroupElement,
    InfiniteGroup,
    SystemMismatch,
    colored_inversion_sequence,
    commutation_canonical,
    commutation_equivalent,
    inversion_sequence,
    parse_type,
    reflection_sequence,
    root_name,
    word_act_colored,
)

__all__ = [
    "BadMatrix",
    "ColoredRoot",
    "CoxeterSystem",
    "FieldElement",
    "GroupElement",
    "InfiniteGroup",
    "RealCyclotomicField",
    "SystemMismatch",
    "colored_inversion_sequence",
    "commutation_canonical",
    "commutation_equivalent",
    "inversion_sequence",
    "parse_type",
    "reflection_sequence",
    "root_name",
    "word_act_colored",
]
