"""Exception types shared across the package."""


class CoorbitalError(Exception):
    """Base class for errors raised by this package."""


class CollisionError(CoorbitalError):
    """Two ring bodies are at (or numerically indistinguishable from) the
    same angular position, so the interaction kernel is singular."""


class OrderingError(CoorbitalError):
    """Angles violate the ordering or distinctness constraints of the
    requested symmetric family."""


class NoPositiveMassError(CoorbitalError):
    """The kernel at the requested configuration admits no positive
    (or no positive and asymmetric) mass vector."""


class CertificationError(CoorbitalError):
    """A rigorous certificate could not be established.  The message says
    which step failed; partial data may be attached as ``report``."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class ResourceLimitError(CoorbitalError):
    """An adaptive computation hit its subdivision or time budget before
    reaching the requested quality.  ``report`` holds the partial result."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
