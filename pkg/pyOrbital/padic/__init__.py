"""Exact model of Q_p, of its quadratic etale algebra and of unramified
characters."""

# Authors: pyOrbital developers
#
# License: BSD (3-clause)

from .base import BaseField, EtaleScalar, UnramifiedCharacter
from .base import valuation, char_eval, etale_ops

__all__ = [
    "BaseField", "EtaleScalar", "UnramifiedCharacter",
    "valuation", "char_eval", "etale_ops"
]
