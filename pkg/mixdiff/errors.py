"""Exception types raised by mixdiff."""


class MixdiffError(Exception):
    """Base class for every error raised by mixdiff."""
    pass


class InvalidSignatureError(MixdiffError, ValueError):
    """A multiset or multiplicity vector is malformed."""
    pass


class InvalidPartitionError(MixdiffError, ValueError):
    """A partition does not describe the object it claims to partition."""
    pass


class GuardExceededError(MixdiffError):
    """An exhaustive enumeration would exceed the configured size limit."""

    def __init__(self, what: str, size: int, limit: int):
        self.what = what
        self.size = size
        self.limit = limit
        super().__init__(
            f"{what} of size {size} exceeds the limit of {limit} "
            f"(raise it with --max-size or the guards config)"
        )


class IncompleteAssignmentError(MixdiffError, LookupError):
    """A cumulant or moment needed for a computation has no value."""

    def __init__(self, kind: str, key: str):
        self.kind = kind
        self.key = key
        super().__init__(f"Missing {kind} value for key '{key}'")

    def __str__(self) -> str:
        return self.args[0]


class MissingVariableError(MixdiffError, LookupError):
    """An evaluation point does not assign a variable that is needed."""

    def __init__(self, variable: int):
        self.variable = variable
        super().__init__(f"Assignment has no value for x{variable}")

    def __str__(self) -> str:
        return self.args[0]


class InvalidConfigError(MixdiffError, ValueError):
    """A configuration value cannot be used."""
    pass


class SignatureSyntaxError(MixdiffError, SyntaxError):
    """A signature or partition string does not parse."""

    def __init__(self, message: str, column: int):
        self.column = column
        super().__init__(f"{message} at column {column}")

    def __str__(self) -> str:
        return self.args[0]


__all__ = [
    'MixdiffError',
    'InvalidSignatureError',
    'InvalidPartitionError',
    'GuardExceededError',
    'IncompleteAssignmentError',
    'MissingVariableError',
    'InvalidConfigError',
    'SignatureSyntaxError',
]
