"""Exception hierarchy shared by every module of the package."""


class CommitteeError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(CommitteeError):
    """Malformed profile text. Carries the offending 1-based line number."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ValidationError(CommitteeError):
    """Well-formed input that violates a structural invariant."""


class SizeMismatch(CommitteeError):
    """Two committees of different sizes were compared."""


class InstanceTooLarge(CommitteeError):
    """An exhaustive search would exceed its configured cap."""


class PreconditionViolated(CommitteeError):
    """An algorithm was called outside the class of inputs it handles."""


class NonImprovingStep(CommitteeError):
    """An improvement step returned a committee that does not dominate."""
