"""Exception hierarchy shared by all modules."""


class EnriquesError(Exception):
    """Base class for library errors."""


class NotARoot(EnriquesError, ValueError):
    """A reflection was requested in a class whose square is not -2."""


class BoundTooLarge(EnriquesError):
    """An enumeration would visit more candidates than the safety limit."""


class ParityViolation(EnriquesError, ValueError):
    """A Mukai vector with ``a2`` and ``r`` of different parity."""


class SearchBoundExceeded(EnriquesError):
    """A bounded search ran out of room before it could decide.

    This is an "unknown" answer, never a silent "no".
    """


class NonTermination(EnriquesError):
    """Weyl reduction hit its iteration cap; the surface model is suspect."""


class NotFoundWithinBound(EnriquesError):
    """An object guaranteed to exist was not found below the height bound."""
