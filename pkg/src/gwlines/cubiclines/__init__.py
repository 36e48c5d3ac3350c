"""Cubic surfaces, their 27 lines and the types of those lines."""
from .enumerate import CHARTS, chart_system, enumerate_lines
from .lines import (
    LineRecord,
    LineSubspace,
    canonical_orbit_key,
    compute_type,
    involution_disc,
    line_resultant,
    make_record,
    resultant_binary_quadratics,
    resultant_closed_form,
    restrict_cubic,
    sylvester_matrix,
)
from .surface import (
    CubicSurface,
    clebsch,
    fermat,
    is_smooth,
    random_cubic,
    random_smooth_cubic,
)

__all__ = [
    "CHARTS",
    "CubicSurface",
    "LineRecord",
    "LineSubspace",
    "canonical_orbit_key",
    "chart_system",
    "clebsch",
    "compute_type",
    "enumerate_lines",
    "fermat",
    "involution_disc",
    "is_smooth",
    "line_resultant",
    "make_record",
    "random_cubic",
    "random_smooth_cubic",
    "resultant_binary_quadratics",
    "resultant_closed_form",
    "restrict_cubic",
    "sylvester_matrix",
]
