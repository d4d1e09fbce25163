"""Exception hierarchy shared by the library and the CLI."""

from __future__ import annotations


class F2Error(Exception):
    """Base class for every error raised by this package."""


class ShapeError(F2Error, ValueError):
    """Matrix or vector dimensions do not fit the operation."""


class InvalidArgument(F2Error, ValueError):
    pass


class NotAnIsometry(InvalidArgument):
    pass


class NotAnInvolution(InvalidArgument):
    pass


class MirrorUndefined(InvalidArgument):
    """The mirror only exists on even-dimensional orthogonal spaces."""


class CapExceeded(F2Error):
    """Exhaustive work was requested above the safety cap without an override."""


class InternalInconsistency(F2Error, RuntimeError):
    pass
