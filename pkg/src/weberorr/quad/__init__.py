"""Quadrature engines: adaptive Gauss-Kronrod, double-exponential,
oscillatory semi-infinite with tail correction, and vertical-line
contour integration."""

from .adaptive import gk_panel, integrate_adaptive
from .base import QuadratureResult, TruncationPolicy, VerticalLine
from .contour import integrate_vertical_line
from .oscillatory import OscillatoryTail, euler_transform, integrate_oscillatory
from .tanhsinh import integrate_de, integrate_de_endpoints

__all__ = [
    "QuadratureResult",
    "TruncationPolicy",
    "VerticalLine",
    "OscillatoryTail",
    "gk_panel",
    "integrate_adaptive",
    "integrate_de",
    "integrate_de_endpoints",
    "integrate_oscillatory",
    "integrate_vertical_line",
    "euler_transform",
]
