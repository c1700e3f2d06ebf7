"""Exception hierarchy shared by the library, the service and the CLI.

The split mirrors the process exit codes: bad user input (exit 2) versus a
broken internal invariant (exit 4), which always indicates a defect rather
than a misuse.
"""


class InputError(ValueError):
    """The caller supplied something invalid (quiver spec, partition, file...)."""


class QuiverSpecError(InputError):
    """A quiver spec string or arrow list does not describe a valid ADE quiver."""


class ReflectionOnSimpleError(InputError):
    """A reflection functor was applied to the simple module it would kill."""


class IntegrityError(InputError):
    """A cache file failed its hash or quiver-spec consistency check."""


class InvariantViolation(RuntimeError):
    """An internal consistency check failed; this signals a bug, not bad input."""
