"""Exception hierarchy shared across the package."""

from __future__ import annotations


class EgolensError(Exception):
    """Base class for all errors raised by this package."""


class InvalidRangeError(EgolensError):
    """A time range or lens with its endpoints in the wrong order."""


class OutOfFrameError(EgolensError):
    """A time stamp that does not map to any period of the frame."""


class EmptyTimelineError(EgolensError):
    """A timeline with no positive strength where one is required."""


class EmptyGraphError(EgolensError):
    """A graph request that selected no alters."""


class NotRelevantError(EgolensError):
    """A period index outside the displayed graph's relevant periods."""


class FillingSpecError(EgolensError):
    """A node filling with invalid or missing parameters."""


class ConsistencyError(EgolensError):
    """Renderer inputs that disagree about which alters are drawn."""


class DataError(EgolensError):
    """Malformed or unusable input data (parse failures, bad values)."""


class ConfigError(EgolensError):
    """An invalid graph configuration file."""


class NotFoundError(EgolensError):
    """A requested entity that the dataset does not contain."""


class RequestError(EgolensError):
    """An invalid request parameter (bad lens, bad view name, ...)."""
