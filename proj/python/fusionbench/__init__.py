"""Fusion rings, bicrossed products and pentagon checks.

Objects cross the boundary as JSON text in the same format the CLI reads and
writes; the helpers below accept dicts as well.
"""

import json

from . import _core
from ._core import InputError, NumericError, ValidationError

__all__ = ["InputError", "NumericError", "ValidationError", "validate_ring", "universal_grading",
           "fpdim", "nilpotency", "bicrossed", "factorize", "pentagon", "triangle", "run"]


def _text(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def validate_ring(ring):
    return json.loads(_core.validate_ring(_text(ring)))


def universal_grading(ring):
    return json.loads(_core.universal_grading(_text(ring)))


def fpdim(ring):
    return _core.fpdim(_text(ring))


def nilpotency(ring):
    return _core.nilpotency(_text(ring))


def bicrossed(matched_pair):
    return json.loads(_core.bicrossed(_text(matched_pair)))


def factorize(ring, A, C):
    return json.loads(_core.factorize(_text(ring), list(A), list(C)))


def pentagon(category, tol=1e-9):
    return json.loads(_core.pentagon(_text(category), tol))


def triangle(category, tol=1e-9):
    return json.loads(_core.triangle(_text(category), tol))


def run(*args):
    return _core.run([str(a) for a in args])
