"""Exact combinatorics of virtual link diagrams and their ribbon graphs.

The package computes Kauffman bracket and Jones polynomials of virtual
link diagrams, builds the associated (signed) ribbon graphs, computes
their Bollobas-Riordan and Tutte polynomials, and mechanically verifies
the identities tying the two sides together.
"""

from .build import (
    NotAlternatingError,
    NotColorableError,
    build_ribbon,
    build_signed,
    edge_of_crossing,
    find_switch_set,
)
from .diagram import (
    BRACKET_VARS,
    JONES_VARS,
    Crossing,
    Diagram,
    DiagramError,
    StateStats,
    apply_switches,
    components,
    format_diagram,
    is_alternating,
    jones,
    kauffman_bracket,
    parse_diagram,
    split_stats,
    state_table,
    switch_crossing,
    writhe,
)
from .laurent import LaurentPoly, PolyError, parse_poly
from .limits import SizeLimitError
from .randgen import random_diagram
from .ribbon import (
    BR_VARS,
    TUTTE_VARS,
    Edge,
    RibbonError,
    RibbonGraph,
    SubgraphStats,
    br_poly,
    format_ribbon,
    genus,
    graph_stats,
    parse_ribbon,
    signed_br_poly,
    subgraph_stats,
    tutte_via_br,
)
from .verify import (
    VerifyReport,
    bracket_from_graph,
    jones_from_graph,
    jones_via_tutte,
    verify_jones,
    verify_main,
    verify_signed,
)

__all__ = [
    "BRACKET_VARS",
    "BR_VARS",
    "Crossing",
    "Diagram",
    "DiagramError",
    "Edge",
    "JONES_VARS",
    "LaurentPoly",
    "NotAlternatingError",
    "NotColorableError",
    "PolyError",
    "RibbonError",
    "RibbonGraph",
    "SizeLimitError",
    "StateStats",
    "SubgraphStats",
    "TUTTE_VARS",
    "VerifyReport",
    "apply_switches",
    "br_poly",
    "bracket_from_graph",
    "build_ribbon",
    "build_signed",
    "components",
    "edge_of_crossing",
    "find_switch_set",
    "format_diagram",
    "format_ribbon",
    "genus",
    "graph_stats",
    "is_alternating",
    "jones",
    "jones_from_graph",
    "jones_via_tutte",
    "kauffman_bracket",
    "parse_diagram",
    "parse_poly",
    "parse_ribbon",
    "random_diagram",
    "signed_br_poly",
    "split_stats",
    "state_table",
    "subgraph_stats",
    "switch_crossing",
    "tutte_via_br",
    "verify_jones",
    "verify_main",
    "verify_signed",
    "writhe",
]
