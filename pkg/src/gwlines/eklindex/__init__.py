"""Groebner bases, local algebras and EKL local indices."""
from .groebner import DEGREVLEX, LEX, groebner_basis
from .local import (
    EKLForm,
    LocalAlgebra,
    PolySystem,
    ekl_form,
    local_algebra,
    simple_zero_index,
    socle_element,
)

__all__ = [
    "DEGREVLEX",
    "LEX",
    "EKLForm",
    "LocalAlgebra",
    "PolySystem",
    "ekl_form",
    "groebner_basis",
    "local_algebra",
    "simple_zero_index",
    "socle_element",
]
