"""Quaternion algebras, norm cokernels and field towers over finite and rational fields."""

import json

from . import _core
from ._core import BudgetExhausted, ConstructionError, hilbert_symbol, is_m_group, run, sqrt_formula_check, subgroup_count

__all__ = [
    "BudgetExhausted",
    "ConstructionError",
    "build_tower",
    "classify",
    "factor_degrees",
    "hilbert_symbol",
    "is_m_group",
    "relative_brauer",
    "run",
    "sqrt_formula_check",
    "subgroup_count",
]


def classify(a, b, q=None, max_height=10000):
    """Division or split verdict for the quaternion algebra (a, b).

    Over Q when q is None (a and b may be ints, fractions or strings), otherwise over GF(q)
    with a and b given as element indices.
    """
    if q is None:
        return json.loads(_core.classify_rational(str(a), str(b), max_height))
    return json.loads(_core.classify_finite(q, a, b))


def relative_brauer(L, K):
    return json.loads(_core.relative_brauer(L, K))


def factor_degrees(q, p, coeffs):
    """Factor degrees over PC(q;p) of the monic polynomial with ascending coefficients."""
    return _core.factor_degrees(q, p, list(coeffs))


def build_tower(kind, *, q=0, p=0, depth=1, max_ambient_bits=24):
    return json.loads(_core.build_tower(kind, q, p, depth, max_ambient_bits))
