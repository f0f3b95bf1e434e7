"""Shared quadrature types."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import ConstraintError


@dataclass(frozen=True)
class QuadratureResult:
    """Uniform return type of every integrator.

    value may be real or complex depending on the integrand;
    error_estimate is an absolute estimate; evaluations counts integrand
    points.  converged is False when an integrator gave up before its
    internal target (the estimate is then the honest residual bound).
    """

    value: complex
    error_estimate: float
    evaluations: int
    converged: bool = True

    def __post_init__(self):
        if not (self.error_estimate >= 0.0 and self.error_estimate < float("inf")):
            raise ConstraintError("error_estimate finite and >= 0")
        if self.evaluations <= 0:
            raise ConstraintError("evaluations > 0")


@dataclass(frozen=True)
class TruncationPolicy:
    """Cutoffs for improper integrals: oscillatory cutoff n_cut, contour
    half-height t_height, and the working tolerance."""

    n_cut: float = 160.0
    t_height: float = 40.0
    tol: float = 1e-9

    def __post_init__(self):
        if self.n_cut <= 0 or self.t_height <= 0 or self.tol <= 0:
            raise ConstraintError("n_cut, t_height, tol all > 0")
        if self.tol < 1e-14:
            raise ConstraintError("tol >= 1e-14")


@dataclass(frozen=True)
class VerticalLine:
    """A vertical contour {Re s = mu}, truncated at |Im s| = t_height."""

    mu: float
    t_height: float = 40.0

    def __post_init__(self):
        import math

        if not (math.isfinite(self.mu) and math.isfinite(self.t_height)):
            raise ConstraintError("line parameters finite")
        if self.t_height <= 0:
            raise ConstraintError("t_height > 0")

    def require_solver_strip(self):
        """Solver paths demand -1 < mu < 0."""
        if not (-1.0 < self.mu < 0.0):
            raise ConstraintError("-1 < Re s < 0", f"line abscissa mu={self.mu}")
