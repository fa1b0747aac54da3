"""Exception types shared across the package.

Every error raised on a documented precondition carries a stable ``code``
string so callers (and the CLI) can dispatch on it without parsing messages.
"""


class DomainError(ValueError):
    """Input violates a precondition (bad seed, non-member, out of range)."""

    def __init__(self, code: str, message: str):
        self.code = code
        super().__init__(f"{code}: {message}")


class VerificationError(RuntimeError):
    """An internal cross-check between two computation routes failed."""

    def __init__(self, code: str, message: str):
        self.code = code
        super().__init__(f"{code}: {message}")
