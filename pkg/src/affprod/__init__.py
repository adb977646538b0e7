"""Affine product codes over prime fields, with a power-line channel simulator."""

from .affine import AffineCode
from .algebra import ERASED, FieldSpec, rank, rref, solve, systematic_form
from .codes import LinearCode, even_weight, family, full_space, hyperplane_between, reed_muller_1, repetition
from .errors import (
    AffprodError,
    Ambiguous,
    DecodeFailure,
    IncompatibleCosets,
    Inconsistent,
    MissingAllOne,
    NoSolution,
    NotNested,
    NotSelfComplementary,
    TooLargeToEnumerate,
    Underdetermined,
)
from .irregular import IrregularSpec, dimension_bound, encode_irregular, translate_matrix, verify_irregular
from .plc import DecoderOptions, NoiseConfig, apply_noise, decode, gabidulin_comparison, simulate
from .product import (
    Expurgated,
    ProductCode,
    affine_product,
    check_compatibility,
    classical_product,
    construction_I,
    construction_IA,
    coset_leader,
    enumerate_codewords,
)

__all__ = [
    "ERASED", "AffineCode", "AffprodError", "Ambiguous", "DecodeFailure", "DecoderOptions",
    "Expurgated", "FieldSpec", "IncompatibleCosets", "Inconsistent", "IrregularSpec", "LinearCode",
    "MissingAllOne", "NoSolution", "NoiseConfig", "NotNested", "NotSelfComplementary",
    "ProductCode", "TooLargeToEnumerate", "Underdetermined", "affine_product", "apply_noise",
    "check_compatibility", "classical_product", "construction_I", "construction_IA",
    "coset_leader", "decode", "dimension_bound", "encode_irregular", "enumerate_codewords",
    "even_weight", "family", "full_space", "gabidulin_comparison", "hyperplane_between",
    "rank", "reed_muller_1", "repetition", "rref", "simulate", "solve", "systematic_form",
    "translate_matrix", "verify_irregular",
]
__version__ = "0.1.0"
