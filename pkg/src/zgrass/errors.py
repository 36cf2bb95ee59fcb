"""Exception hierarchy shared by every module."""


class ZGrassError(Exception):
    """Base class for all errors raised by zgrass."""


class MismatchError(ZGrassError, ValueError):
    """Operands live over different fields or at different ranks."""


class DegreeError(ZGrassError, ValueError):
    """A substitution does not respect the grading."""


class BudgetExceeded(ZGrassError):
    """A computation would exceed its configured size budget."""


class UnsupportedInput(ZGrassError, ValueError):
    """The input lies outside the domain an operation supports."""


class ParseError(ZGrassError, ValueError):
    def __init__(self, message: str, position: int | None = None, text: str | None = None):
        self.position = position
        self.text = text
        if position is not None:
            message = f"{message} at position {position}"
            if text is not None:
                message += f"\n  {text}\n  {' ' * position}^"
        super().__init__(message)
