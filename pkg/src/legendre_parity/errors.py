"""Exception hierarchy shared across the package.

The CLI maps these onto exit codes: UsageError -> 1, ParseError and
IntegrityError -> 2, CapacityError -> 3.
"""


class UsageError(ValueError):
    """Caller violated a precondition (bad argument, mismatched moduli, ...)."""


class ParseError(ValueError):
    """Malformed input data; carries a 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CapacityError(ValueError):
    """Requested computation exceeds a hard size ceiling."""


class IntegrityError(RuntimeError):
    """An internal consistency check failed (e.g. a 'prime' modulus is not prime)."""
