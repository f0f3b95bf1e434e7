"""Exception types shared across the library."""


class WeberOrrError(Exception):
    """Base class for all library errors."""


class DomainError(WeberOrrError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ParameterError(WeberOrrError, ValueError):
    """A parameter combination violates a representation's validity condition."""


class ConstraintError(WeberOrrError, ValueError):
    """A configuration or case violates a named constraint.

    The violated constraint is kept verbatim in ``constraint`` so callers
    (and the CLI) can report exactly which condition failed.
    """

    def __init__(self, constraint, detail=""):
        self.constraint = constraint
        msg = f"constraint violated: {constraint}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class QuadratureError(WeberOrrError, RuntimeError):
    """Structural misuse of an integrator (bad limits, zero frequency...)."""


class DivergenceError(QuadratureError):
    """The integrand was detected to be non-integrable."""


class ExpressionError(WeberOrrError, ValueError):
    """Syntax or name error in a function expression; carries the offset."""

    def __init__(self, message, position):
        self.position = position
        super().__init__(f"{message} at offset {position}")


class EvalDomainError(WeberOrrError, ValueError):
    """Domain error while evaluating an expression (log/sqrt of a negative)."""

    def __init__(self, message, span):
        self.span = span
        super().__init__(f"{message} in subexpression at offset {span[0]}:{span[1]}")
