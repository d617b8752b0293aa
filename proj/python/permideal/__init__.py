"""Groebner bases, radicals and primary decompositions of 2x2 permanental ideals."""

import json

from ._core import (
    AlgebraError,
    BudgetExceeded,
    Ideal,
    ParseError,
    Polynomial,
    Ring,
    __version__,
    component_count,
    embedded_component,
    gap_length,
    gb_count,
    intersect,
    minimal_primes,
    permanental_ideal,
    radical_gb_count,
    radical_generators,
    unmixed_part,
    verify_json,
)


def verify(m=3, n=3, field="q", order="diag-lex", checks=(), allow_large=False):
    """Run the check suite and return the report as a dict."""
    return json.loads(verify_json(m, n, field, order, list(checks), allow_large))


__all__ = [
    "AlgebraError",
    "BudgetExceeded",
    "Ideal",
    "ParseError",
    "Polynomial",
    "Ring",
    "__version__",
    "component_count",
    "embedded_component",
    "gap_length",
    "gb_count",
    "intersect",
    "minimal_primes",
    "permanental_ideal",
    "radical_gb_count",
    "radical_generators",
    "unmixed_part",
    "verify",
    "verify_json",
]
