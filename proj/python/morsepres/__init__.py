"""Discrete-Morse exploration of Q**-equivalence for group presentations.

The search loop mirrors the command-line tool:

    import morsepres as mp
    p = mp.catalog("AK", [2])
    out = mp.search("AK(2)", seed=0, max_trials=100000, target="empty")
    print(out["success_trial"], out["result"])
"""

from ._morsepres import (
    MorsepresError,
    Presentation,
    canonical_equivalence,
    catalog,
    catalog_families,
    complex_info,
    critical_counts,
    invariant_factors,
    morse_presentation,
    parse_presentation,
    replay,
    search,
    search_presentation,
    simplified,
    smith_normal_form,
    spanning_matching,
    torus_demo,
)

__all__ = [
    "MorsepresError",
    "Presentation",
    "canonical_equivalence",
    "catalog",
    "catalog_families",
    "complex_info",
    "critical_counts",
    "invariant_factors",
    "morse_presentation",
    "parse_presentation",
    "replay",
    "search",
    "search_presentation",
    "simplified",
    "smith_normal_form",
    "spanning_matching",
    "torus_demo",
]
