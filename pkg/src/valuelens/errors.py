"""Exception hierarchy shared across the package."""


class ValuelensError(Exception):
    """Base class for all domain errors."""


class LexiconParseError(ValuelensError):
    """A lexicon line could not be parsed."""

    def __init__(self, line_number: int, message: str):
        self.line_number = line_number
        super().__init__(f"line {line_number}: {message}")


class EmptyPrototypeError(ValuelensError):
    """No lexicon entries matched the requested concept."""


class CombinationError(ValuelensError):
    """Every scenario of a combination was blocked."""

    def __init__(self, message: str, discarded: dict | None = None):
        self.discarded = dict(discarded or {})
        super().__init__(message)


class EmptyProfileError(ValuelensError):
    """A description yielded no usable terms."""


class NotFoundError(ValuelensError):
    """Lookup key outside the known vocabulary or catalog."""


class DataError(ValuelensError):
    """Malformed input file or inconsistent catalog data."""
