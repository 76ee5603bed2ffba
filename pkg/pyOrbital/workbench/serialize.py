import hashlib
import json

import numpy as np
import pandas as pd

from fractions import Fraction

from ..invariants import TildeGlElement, GlNextElement, SElement
from ..invariants import EtaleMatrix, QuotientPoint, quotient_point
from ..lfactors import LaurentRational
from ..orbital import LatticeCosetFunction
from ..padic import EtaleScalar
from ..unitary import UTildeElement, unitary_indicator, unitary_zero
from ..utils import as_fraction, format_rational, parse_signs


def canonical_json(value):
    r"""Byte-stable JSON text: sorted keys, compact separators."""
    return json.dumps(value, sort_keys=True, separators=(",", ":"),
                      ensure_ascii=False)


def digest(value):
    r"""SHA-256 of the canonical JSON text of a payload."""
    return hashlib.sha256(canonical_json(value).encode("utf-8")).hexdigest()


def to_payload(obj):
    r"""JSON form of any object of the package (recursively)."""
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    if isinstance(obj, Fraction):
        return format_rational(obj)
    if isinstance(obj, np.generic):
        return to_payload(obj.item())
    if isinstance(obj, pd.DataFrame):
        return to_payload(obj.to_dict(orient='records'))
    if isinstance(obj, dict):
        return {str(k): to_payload(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_payload(v) for v in obj]
    if hasattr(obj, 'to_json'):
        return to_payload(obj.to_json())
    raise TypeError('Wrong output type: {}. Should be: JSON serializable'
                    .format(type(obj).__name__))


def parse_element(payload, base=None):
    r"""Element of gl~_n, gl_{n+1}, S or u~ from its JSON form.

    The layout decides the kind: 'S' for S, 'gram' for u~, 'M' or 'd' for
    gl_{n+1} and (A, v, u) for gl~_n.
    """
    if not isinstance(payload, dict):
        raise TypeError('Wrong element payload type: {}. Should be: dict'
                        .format(type(payload).__name__))
    if 'S' in payload:
        return SElement.from_json(payload)
    if 'gram' in payload:
        return UTildeElement.from_json(payload, base)
    if 'M' in payload or 'd' in payload:
        return GlNextElement.from_json(payload)
    return TildeGlElement.from_json(payload)


def parse_central(payload):
    r"""(sign, lam) of Z_lam^sign, or a TildeGlElement."""
    if 'A' in payload:
        return TildeGlElement.from_json(payload)
    if 'lam' not in payload:
        raise KeyError('Missing field `lam` in central payload.')
    sign = parse_signs(payload.get('sign', '+'))
    if len(sign) != 1:
        raise ValueError('Field `sign` must be a single + or -.')
    return sign[0], as_fraction(payload['lam'])


def parse_function(payload, base):
    r"""LatticeCosetFunction from its JSON form.

    The shorthand {"unit_lattice": n} names the standard lattice of gl~_n.
    """
    if 'unit_lattice' in payload:
        return LatticeCosetFunction.unit_lattice(int(payload['unit_lattice']),
                                                 base)
    return LatticeCosetFunction.from_json(payload, base)


def parse_unitary_family(payload, base):
    r"""Disc class -> unitary function (or rational value at Z_lam).

    The shorthand {"indicator": m} names the indicator of p^m u~(O) on the
    line of that class, {"indicator": null} the zero function.
    """
    out = {}
    for key, value in payload.items():
        bit = int(key)
        if isinstance(value, dict) and 'indicator' in value:
            depth = value['indicator']
            out[bit] = unitary_zero(base, bit) if depth is None else \
                unitary_indicator(base, bit, int(depth))
        elif isinstance(value, dict):
            out[bit] = LatticeCosetFunction.from_json(value, base)
        else:
            out[bit] = as_fraction(value)
    return out


def parse_point(payload):
    r"""QuotientPoint from its JSON form, or the image of an element."""
    if 'charpoly' in payload:
        return QuotientPoint.from_json(payload)
    X = parse_element(payload)
    if isinstance(X, UTildeElement):
        return X.quotient_point()
    return quotient_point(X)


def parse_gamma(payload, base):
    r"""(g_1, g_2) in GL_1(E) x GL_2(E) from nested EtaleScalar rows."""
    out = []
    for key in ('g1', 'g2'):
        if key not in payload:
            raise KeyError('Missing field `{}` in gamma payload.'.format(key))
        rows = [[EtaleScalar.from_json(e) if isinstance(e, dict) else
                 base.scalar(as_fraction(e)) for e in row]
                for row in payload[key]]
        out.append(EtaleMatrix(rows, base.d))
    return tuple(out)


def parse_laurent(payload):
    return LaurentRational.from_json(payload)
