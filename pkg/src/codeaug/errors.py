"""Exception hierarchy shared across the toolkit."""


class CodeaugError(Exception):
    """Base class for all errors raised by this package."""


class FrontendError(CodeaugError):
    """Base for errors produced while lexing/parsing/resolving source text."""

    def __init__(self, message: str, line: int = 0, col: int = 0):
        super().__init__(message)
        self.message = message
        self.line = line
        self.col = col

    def diagnostic(self, filename: str = "<source>") -> str:
        return f"{filename}:{self.line}:{self.col}: {self.message}"


class MiniSyntaxError(FrontendError):
    """Malformed source text (not valid in any C dialect we know of)."""


class UnsupportedConstruct(FrontendError):
    """Valid C/C++ that falls outside the supported subset."""


class InapplicableSite(CodeaugError):
    """A transform was asked to fire at a site where it cannot."""


class NoApplicableTransform(CodeaugError):
    """A transformation chain could not apply even a single step."""


class UnknownTask(CodeaugError):
    """A model was asked to predict for a task it was not trained on."""


class EmptySubset(CodeaugError):
    """A curriculum schedule admits zero samples at the first step."""


class MissingScore(CodeaugError):
    """A curriculum ordering strategy lacks a score for a class or sample."""


class DegenerateDenominator(CodeaugError):
    """Precision/recall requested with an all-zero denominator."""


class DataError(CodeaugError):
    """Malformed dataset file or inconsistent sample fields."""
