"""Isochronous center analysis for planar polynomial vector fields.

Fields are given either as JSON text or as the equivalent dict::

    {"xi_sign": "+", "degree": 2,
     "coefficients": [{"i": 2, "j": 0, "value": "1/1+0/1i"}]}

Every function returns the same report the ``isochron`` command prints with
``--format json``, parsed into python objects.
"""

import json

from . import _core
from ._core import InconsistencyError, InputError, NonPeriodicError

__all__ = [
    "analyze",
    "classify",
    "scan_periods",
    "complexity",
    "verify_lemmas",
    "InputError",
    "InconsistencyError",
    "NonPeriodicError",
]


def _text(spec):
    return spec if isinstance(spec, str) else json.dumps(spec)


def analyze(field, max_word_length=6, series_depth=3, mould=None):
    m = None if mould is None else _text(mould)
    return json.loads(_core.analyze(_text(field), max_word_length, series_depth, m))


def classify(field):
    return json.loads(_core.classify(_text(field)))


def scan_periods(field, radii=(0.02, 0.05, 0.1, 0.2), tol=1e-10):
    return json.loads(_core.scan_periods(_text(field), list(radii), tol))


def complexity(degree, condition=None):
    return json.loads(_core.complexity(degree, condition))


def verify_lemmas(seed=None, max_word_length=6):
    kwargs = {} if seed is None else {"seed": seed}
    return json.loads(_core.verify_lemmas(max_word_length=max_word_length, **kwargs))
