"""Exception hierarchy shared by every module."""


class CoxisoError(Exception):
    """Base class for all library errors."""


class MalformedInput(CoxisoError, ValueError):
    pass


class UnknownGenerator(CoxisoError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class SamePair(CoxisoError, ValueError):
    pass


class NotIrreducible(CoxisoError, ValueError):
    pass


class NotSpherical(CoxisoError, ValueError):
    pass


class AdjacentPair(CoxisoError, ValueError):
    pass


class NotChordal(CoxisoError, ValueError):
    pass


class NotABadEdge(CoxisoError, ValueError):
    pass


class NoBadSeparators(CoxisoError, ValueError):
    pass


class InvalidMove(CoxisoError, ValueError):
    pass


class InvalidPlan(CoxisoError, ValueError):
    pass


class NotABase(CoxisoError, ValueError):
    pass


class InvariantViolation(CoxisoError, AssertionError):
    """Internal consistency failure; indicates a bug rather than bad input."""


class OrbitTruncated(CoxisoError):
    """Raised when an orbit search exceeds its size cap.

    The partial orbit explored so far is kept on ``self.partial``.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial
