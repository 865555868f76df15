"""Exception hierarchy shared by every module of the package."""


class HodgeError(Exception):
    """Base class for all user-facing errors raised by hodgeideals."""


class ParseError(HodgeError):
    """Malformed polynomial expression."""

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class UnknownVariableError(ParseError):
    pass


class ArityError(HodgeError):
    pass


class NotPrimaryError(HodgeError):
    """A local ideal could not be certified to contain a power of the maximal ideal."""


class CenterMismatchError(HodgeError):
    pass


class GroundFieldError(HodgeError):
    """A computation would need a blow-up or singular point that is not defined over Q."""


class IterationCapError(HodgeError):
    pass


class NotSquarefreeError(HodgeError):
    pass
