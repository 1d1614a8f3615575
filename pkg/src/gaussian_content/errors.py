"""Exception hierarchy shared by the engine and the command line."""


class GaussianContentError(Exception):
    """Base class for every error raised by this package."""


class InvalidArgument(GaussianContentError, ValueError):
    pass


class UnsupportedInput(GaussianContentError):
    """The operation is well defined but outside what the engine can decide."""


class TrivialRingError(GaussianContentError):
    """The defining ideal contains a unit, so the quotient is the zero ring."""


class ResourceLimitError(GaussianContentError):
    """A Groebner basis computation exceeded its generator or term budget."""


class ParseError(GaussianContentError):
    def __init__(self, message, text="", pos=0):
        self.text = text
        self.pos = pos
        self.line = text.count("\n", 0, pos) + 1
        self.column = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"{message} (line {self.line}, column {self.column})")
