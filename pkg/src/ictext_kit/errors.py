"""Exception types shared across the toolkit."""


class ValidationError(ValueError):
    """An input value violates a documented precondition or invariant."""


class ParseError(ValueError):
    """A data file is malformed; the message names the file, line and field."""
