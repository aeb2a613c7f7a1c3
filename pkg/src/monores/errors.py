"""Exception types shared across the package."""


class RingMismatchError(ValueError):
    """Operands live in different ring contexts."""


class ExponentOverflowError(OverflowError):
    """An exponent left the supported non-negative integer range."""


class ImproperIdealError(ValueError):
    """An operation that needs a proper nonzero ideal got the zero or unit ideal."""


class CertificateError(ValueError):
    """A containment witness failed verification."""


class ParseError(ValueError):
    """Lexical or syntax error in ideal/session text, with a 1-based position."""

    def __init__(self, message, line=1, column=1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.message = message
        self.line = line
        self.column = column
