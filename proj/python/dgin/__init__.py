"""Exact computations with Borel-fixed ideals and generic initial ideals.

The heavy lifting lives in the compiled extension; the report helpers here
decode its JSON payloads into plain dictionaries.
"""

import json as _json

from ._core import (
    AdmissibilityError,
    DimensionError,
    Error,
    GenericityError,
    NotStabilizedError,
    ParseError,
    ResourceError,
    UnsupportedInputError,
    census_json,
    compare_slices,
    conjecture_json,
    enumerate_ideals,
    gin,
    gin_extensor,
    gotzmann_decomposition,
    gotzmann_number,
    hilbert_values,
    in_extensor,
    lex_ideal,
    max_hilbert_json,
    regularity,
    segment_ideal,
    x0x1_saturation,
)

__all__ = [
    "AdmissibilityError",
    "DimensionError",
    "Error",
    "GenericityError",
    "NotStabilizedError",
    "ParseError",
    "ResourceError",
    "UnsupportedInputError",
    "census",
    "census_json",
    "compare_slices",
    "conjecture",
    "conjecture_json",
    "enumerate_ideals",
    "gin",
    "gin_extensor",
    "gotzmann_decomposition",
    "gotzmann_number",
    "hilbert_values",
    "in_extensor",
    "lex_ideal",
    "max_hilbert",
    "max_hilbert_json",
    "regularity",
    "segment_ideal",
    "x0x1_saturation",
]


def census(p, n, order="degrevlex", jobs=1):
    """Census report as a dict: ideals, maximal slices and component bounds."""
    return _json.loads(census_json(p, n, order, jobs))


def max_hilbert(p, n, jobs=1):
    """Maximal quotient Hilbert functions across the degrevlex census, as a dict."""
    return _json.loads(max_hilbert_json(p, n, jobs))


def conjecture(p, n, jobs=1):
    """Evidence for the deglex minimality conjecture, as a dict."""
    return _json.loads(conjecture_json(p, n, jobs))
