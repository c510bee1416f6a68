"""Exception types shared across the package."""


class PslabError(Exception):
    """Base class for all errors raised by this package."""


class SignatureMismatchError(PslabError):
    """Two vectors with different metric signatures were combined."""


class JetError(PslabError):
    """Invalid jet arithmetic (order mismatch, bad derivative request)."""


class JetDomainError(PslabError):
    """An elementary function was evaluated outside its domain."""


class ParseError(PslabError):
    """Expression or curve-file syntax error with a 1-based position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.message = message
        self.position = position


class CurveError(PslabError):
    """A curve could not be evaluated or failed validation."""


class CurveDomainError(CurveError):
    """Evaluation was requested outside the curve's open domain."""


class InvalidGeneratorError(CurveError):
    """A curve failed the generating-curve constraints.

    Carries the full validation report (``.report``) so callers can show
    which constraint failed and where.
    """

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class GeometryError(PslabError):
    """A geometric construction failed (degenerate metric, bad frame...)."""


class SingularPointError(GeometryError):
    """The induced metric is degenerate at the requested point.

    Grid drivers catch this to exclude (and count) singular points rather
    than aborting a whole run.
    """
