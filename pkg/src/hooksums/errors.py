"""Exception types raised across the package."""


class HookSumError(Exception):
    """Base class for all package errors."""


class DomainError(HookSumError, ValueError):
    """An argument lies outside the domain of a formula."""


class RectangleNotContained(HookSumError, ValueError):
    """The partition does not contain the k x l rectangle (or leaves the hook)."""


class BoundExceeded(HookSumError, ValueError):
    """Input is larger than the configured bound of a slow oracle."""


class UnsupportedPower(HookSumError, ValueError):
    pass


class UnsupportedClosedForm(HookSumError, ValueError):
    pass


class WorkLimitExceeded(HookSumError, RuntimeError):
    """Enumeration would visit more partitions than the configured limit."""

    def __init__(self, needed: int, limit: int):
        self.needed = needed
        self.limit = limit
        super().__init__(
            f"enumeration needs {needed} partitions, work limit is {limit}"
        )


class DegenerateShape(HookSumError, ValueError):
    """Two scaled coordinates coincide, so the Vandermonde factor vanishes."""
