"""Exception hierarchy.

Every error carries a stable machine-readable ``name`` (the class name),
which the command line prints verbatim.
"""


class ShadowError(Exception):
    """Base class for all domain errors raised by shadowkit."""

    @property
    def name(self) -> str:
        return type(self).__name__


class MalformedCode(ShadowError, ValueError):
    pass


class NotDoubleOccurrence(ShadowError, ValueError):
    pass


class NotSpherical(ShadowError, ValueError):
    pass


class InvalidArc(ShadowError, ValueError):
    pass


class StaleSite(ShadowError, ValueError):
    pass


class RealizationFailed(ShadowError, RuntimeError):
    pass


class LimitExceeded(ShadowError, ValueError):
    pass
