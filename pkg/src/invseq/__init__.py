"""Exact enumeration of restricted inversion sequences, ascent sequences and
set partitions, with series and recurrence verification."""

from .errors import (
    DomainError,
    InvseqError,
    RemainderError,
    ResourceLimitError,
    VerificationError,
)
from .report import Check

__version__ = "0.1.0"

__all__ = [
    "Check",
    "DomainError",
    "InvseqError",
    "RemainderError",
    "ResourceLimitError",
    "VerificationError",
    "__version__",
]
