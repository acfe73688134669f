"""Exception types shared across the toolkit."""


class NcdimError(Exception):
    """Base class for all toolkit errors."""


class InputError(NcdimError):
    """Bad user input: unreadable file, malformed schema, or failed validation."""


class ParseError(InputError):
    """Syntax error in a polynomial expression; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class GroebnerVerificationError(NcdimError):
    """A candidate basis failed the overlap check.

    Carries the first failing ambiguity and the nonzero remainder of its
    S-element so callers can print a concrete counterexample.
    """

    def __init__(self, message: str, ambiguity=None, remainder=None):
        super().__init__(message)
        self.ambiguity = ambiguity
        self.remainder = remainder


class CrossCheckError(NcdimError):
    """An internally guaranteed identity failed; indicates a construction bug."""
