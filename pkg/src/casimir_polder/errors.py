"""Exception types shared across the package."""

from __future__ import annotations


class DomainError(ValueError):
    """Raised when an input lies outside the domain of a formula."""


class GeometryError(DomainError):
    """Raised for touching or overlapping bodies, or unsupported region pairs."""


class NotConvergedError(RuntimeError):
    """Integration budget exhausted before the requested tolerance was met.

    The best available estimate is attached as ``result`` so callers can
    still report it.
    """

    def __init__(self, message: str, result=None):
        super().__init__(message)
        self.result = result
