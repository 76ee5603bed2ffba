"""Utility functions shared by the sub-packages."""

# Authors: pyOrbital developers
#
# License: BSD (3-clause)

from .utils import as_fraction, format_rational, parse_rational
from .utils import vmin, sign_string, parse_signs
from .errors import DeskScaleError, UnsupportedConfigurationError
from .errors import WindowInsufficientError, error_code

__all__ = [
    "as_fraction", "format_rational", "parse_rational",
    "vmin", "sign_string", "parse_signs",
    "DeskScaleError", "UnsupportedConfigurationError",
    "WindowInsufficientError", "error_code"
]
