"""Exact arithmetic over finite fields, Q and small number fields."""
from .fields import (
    EXTENSION,
    NUMBER,
    PRIME,
    RATIONAL,
    Field,
    FieldElem,
    canonical_nonsquare,
    embed,
    embed_raw,
    extension_degree,
    field_from_json,
    field_make,
    field_trace,
    finite_field,
    is_square,
    number_field,
    prime_field,
    rationals,
    restrict_raw,
    square_class,
    squarefree_part,
)
from .poly import Poly, factor_univariate

__all__ = [
    "EXTENSION",
    "NUMBER",
    "PRIME",
    "RATIONAL",
    "Field",
    "FieldElem",
    "Poly",
    "canonical_nonsquare",
    "embed",
    "embed_raw",
    "extension_degree",
    "factor_univariate",
    "field_from_json",
    "field_make",
    "field_trace",
    "finite_field",
    "is_square",
    "number_field",
    "prime_field",
    "rationals",
    "restrict_raw",
    "square_class",
    "squarefree_part",
]
