"""Exception types shared across the package."""


class InvseqError(Exception):
    """Base class for every error raised by this package."""

    code = "error"


class DomainError(InvseqError, ValueError):
    """An argument lies outside the set an operation is defined on."""

    code = "domain"


class ResourceLimitError(InvseqError):
    """An enumeration would exceed the configured object ceiling."""

    code = "resource"


class RemainderError(InvseqError, ArithmeticError):
    """An exact division left a nonzero remainder.

    Always a transcription bug in a formula or recurrence; never swallow it.
    """

    code = "remainder"


class VerificationError(InvseqError):
    """Two routes that must agree did not."""

    code = "verification"
