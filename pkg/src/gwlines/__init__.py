"""Arithmetic counts of the 27 lines on a smooth cubic surface.

Each line carries a type, the square class of a resultant; summing the traces
of the types over all lines gives a class in the Grothendieck-Witt group of the
base field, which is checked against 15<1> + 12<-1>.
"""
from .cubiclines import CubicSurface, enumerate_lines, is_smooth
from .eulernum import CountReport, euler_number_cubic, verify_main_theorem, verify_parity
from .quadforms import GWClass, gw_equal

__all__ = [
    "CountReport",
    "CubicSurface",
    "GWClass",
    "enumerate_lines",
    "euler_number_cubic",
    "gw_equal",
    "is_smooth",
    "verify_main_theorem",
    "verify_parity",
]
