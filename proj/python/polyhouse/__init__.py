"""Certified house of integer polynomials and the reciprocal minimal-house
search, with the bundled reference tables and their verifier.

Polynomials are plain lists of integer coefficients, highest degree first
("full" encoding); monic palindromic polynomials of even degree can also be
written in the "half" shorthand accepted by :func:`parse`.
"""

import os as _os
import pathlib as _pathlib

# A wheel carries the reference tables next to this file; an in-tree build
# finds them through the POLYHOUSE_DATA environment variable or the
# compiled-in source path.
_data = _pathlib.Path(__file__).resolve().parent / "data"
if _data.is_dir():
    _os.environ.setdefault("POLYHOUSE_DATA", str(_data))

from ._polyhouse import (  # noqa: E402
    analyze,
    column_bound,
    compose_power,
    composite_prediction,
    conjecture_evidence,
    constants,
    count_outside_unit,
    default_height_for_degree,
    failed_generalization_quotient,
    format,
    generate_prime5mod6,
    house,
    is_irreducible,
    is_reciprocal,
    mahler_measure,
    match_lemma_pattern,
    matveev_lower_bound,
    minimal_gate,
    negate_argument,
    parse,
    powerhouse,
    primitivity_decompose,
    search_extremal,
    upper_bound_witness,
    verify_lemma_instance,
    verify_table,
)

__all__ = [
    "analyze",
    "column_bound",
    "compose_power",
    "composite_prediction",
    "conjecture_evidence",
    "constants",
    "count_outside_unit",
    "default_height_for_degree",
    "failed_generalization_quotient",
    "format",
    "generate_prime5mod6",
    "house",
    "is_irreducible",
    "is_reciprocal",
    "mahler_measure",
    "match_lemma_pattern",
    "matveev_lower_bound",
    "minimal_gate",
    "negate_argument",
    "parse",
    "powerhouse",
    "primitivity_decompose",
    "search_extremal",
    "upper_bound_witness",
    "verify_lemma_instance",
    "verify_table",
]

__version__ = "1.0.0"
