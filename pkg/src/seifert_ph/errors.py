"""Exception hierarchy. Every precondition failure is a ``SeifertError``."""


class SeifertError(ValueError):
    pass


class InvalidOrbifold(SeifertError):
    pass


class InvalidInvariant(SeifertError):
    pass


class GcdViolation(InvalidInvariant):
    pass


class NonHyperbolicBase(SeifertError):
    pass


class NonOrientableBase(SeifertError):
    pass


class OrientableBase(SeifertError):
    pass


class DegreeConeClash(SeifertError):
    pass


class NotATurnover(SeifertError):
    pass


class NotInStatedFamily(SeifertError):
    pass


class GenusTooSmall(SeifertError):
    pass


class OffsetArityMismatch(SeifertError):
    pass


class UnknownSymbol(SeifertError):
    pass


class SfsSyntaxError(SeifertError):
    """Raised by the parser; ``position`` is the 0-based offset of the failure."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class SfsSemanticError(SeifertError):
    pass
