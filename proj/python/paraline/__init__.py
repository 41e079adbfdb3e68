"""Paradoxical decomposition of the real line.

Thin Python layer over the C++ core: rationals travel as
:class:`fractions.Fraction`, reports come back as dicts.
"""

import json
from fractions import Fraction

from . import _core
from ._core import (
    BudgetExceeded,
    ContextError,
    InvalidLetter,
    InvariantViolation,
    ParadoxInstance,
    ParseError,
    Rank,
    RigidMap,
    UnsupportedRank,
    VertexLabeling,
    Word,
    class_name,
    classify_word,
    invert,
    multiply,
    reduce,
)

__all__ = [
    "BudgetExceeded", "ContextError", "InvalidLetter", "InvariantViolation", "ParadoxInstance",
    "ParseError", "Rank", "RigidMap", "UnsupportedRank", "VertexLabeling", "Word", "class_name",
    "classify_word", "invert", "multiply", "reduce", "evaluate", "evaluate_inverse", "classify_point",
    "verify", "measure", "certify", "audit",
]


def _pair(x):
    x = Fraction(x)
    return (x.numerator, x.denominator)


def evaluate(f, x):
    """f(x) for a RigidMap and any value Fraction() accepts."""
    return Fraction(*f.eval(_pair(x)))


def evaluate_inverse(f, y):
    return Fraction(*f.eval_inverse(_pair(y)))


def classify_point(inst, x):
    return inst.classify_point(_pair(x))


def verify(inst, lo, hi, pair_limit=None, workers=1):
    return json.loads(inst.verify_json(lo, hi, pair_limit, workers))


def measure(inst, lo, hi, pair_limit=None):
    return json.loads(inst.measure_json(lo, hi, pair_limit))


def certify(inst, max_length, lo, hi, pair_limit=None, budget=2_000_000):
    return json.loads(inst.certify_json(max_length, lo, hi, pair_limit, budget))


def audit(f, lo, hi, samples=1000, seed=1):
    return json.loads(f.audit_json(lo, hi, samples, seed))
