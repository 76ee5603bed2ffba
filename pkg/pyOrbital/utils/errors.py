"""Exception classes carrying the stable error codes of the workbench."""


class DeskScaleError(ValueError):
    """Raised when an input exceeds the sizes handled exactly (n > 2, ...)."""

    code = 'desk-limit'


class UnsupportedConfigurationError(ValueError):
    """Raised for p = 2, ramified data or missing epsilon inputs."""

    code = 'unsupported'


class WindowInsufficientError(ValueError):
    """Raised by the oracle when no geometric tail can be certified."""

    code = 'window'


def error_code(exc):
    r"""Stable error code of an exception raised by the package."""
    code = getattr(exc, 'code', None)
    if code is not None:
        return code
    if isinstance(exc, (KeyError, TypeError)):
        return 'schema'
    return 'math'
