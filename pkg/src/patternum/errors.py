"""Exception hierarchy.

Every error raised by the library derives from :class:`PatternumError`.  The
``exit_code`` class attribute is what the command line reports: 2 for domain
errors (bad input for the mathematics), 3 for resource caps.
"""

from __future__ import annotations


class PatternumError(Exception):
    exit_code = 2

    @property
    def reason(self) -> str:
        return type(self).__name__


class DomainError(PatternumError):
    exit_code = 2


class ResourceError(PatternumError):
    exit_code = 3


class EmptyInput(DomainError):
    pass


class DuplicateElements(DomainError):
    pass


class NotAPermutation(DomainError):
    pass


class EmptySubset(DomainError):
    pass


class IndexOutOfRange(DomainError):
    pass


class TooSmall(DomainError):
    pass


class TooLong(ResourceError):
    pass


class CapExceeded(ResourceError):
    pass


class MemoryBudgetExceeded(ResourceError):
    pass


RECONSTRUCTION_REASONS = (
    "RunCountMismatch",
    "BandCountMismatch",
    "ExtraRowInvalid",
    "NotAmple",
    "PatternMismatch",
)


class ReconstructionError(DomainError):
    """The pattern is not the pattern of any ample subset of the grid."""

    def __init__(self, reason: str, message: str = ""):
        if reason not in RECONSTRUCTION_REASONS:
            raise ValueError(f"unknown reconstruction failure {reason!r}")
        self._reason = reason
        super().__init__(message or reason)

    @property
    def reason(self) -> str:
        return self._reason
