"""Exact Betti tables for the curved category built from a directed A inside B.

Tables are dicts ``{row: {homological_degree: dim}}`` with nonzero entries
only.  Rows are truncation levels for ``hochschild`` and ``bar`` and
t-weights for ``connes``.
"""

from ._core import (
    CurvedError,
    Pair,
    __version__,
    bar,
    connes,
    conventions_hash,
    donaldson,
    example_names,
    generate,
    hochschild,
    insert_a_acyclic,
    load,
    parse,
    parse_csv,
    serre_step_matches,
    to_csv,
)
from ._core import e1 as _e1


def e1(pair, pmax, field=""):
    """E1 and E2 of the weight spectral sequence.

    Returns a dict with ``e1`` and ``e2`` tables keyed by weight and
    ``d1_rank`` keyed by ``(weight, homological_degree)``.
    """
    page, ranks, e2 = _e1(pair, pmax, field)
    return {"e1": page, "d1_rank": ranks, "e2": e2}


__all__ = [
    "CurvedError",
    "Pair",
    "__version__",
    "bar",
    "connes",
    "conventions_hash",
    "donaldson",
    "e1",
    "example_names",
    "generate",
    "hochschild",
    "insert_a_acyclic",
    "load",
    "parse",
    "parse_csv",
    "serre_step_matches",
    "to_csv",
]
