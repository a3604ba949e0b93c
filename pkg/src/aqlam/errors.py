"""Exception hierarchy shared by all modules.

The CLI maps these onto exit codes: bad input -> 2, resource limits -> 3,
internal invariant violations -> 4.  A zero verdict is *not* an error.
"""


class AqlamError(Exception):
    """Base class for all library errors."""


class InputError(AqlamError, ValueError):
    """Malformed or out-of-domain input (exit code 2)."""


class ResourceLimitError(AqlamError):
    """A configured size bound was exceeded (exit code 3)."""


class InvariantViolationError(AqlamError):
    """An internal self-check failed; indicates a bug (exit code 4)."""
