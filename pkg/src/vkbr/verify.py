"""Two-route identity checks tying diagrams to their ribbon graphs.

The bracket of an alternating diagram equals

    A^r(G) B^n(G) d^(k(G)-1) R_G(Bd/A, Ad/B, 1/d)

for its ribbon graph G, and the same shape holds for switchable diagrams
with the signed polynomial of the signed graph.  The check computes both
sides by disjoint code paths (state sum on the left, subgraph sum plus
substitution on the right) and compares canonical polynomials exactly.

The Jones polynomial admits the same treatment.  The substitution values
factor over D = -t^(1/2) - t^(-1/2) as x = D t^(1/2), y = D t^(-1/2),
z = 1/D, so a term x^a y^b z^c of the signed polynomial contributes
t^((a-b)/2) D^(a+b-c); together with the d^(k-1) prefactor the D exponent
comes to bc(F) - 1 >= 0, and the whole right side is assembled without
ever dividing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .build import build_ribbon, build_signed
from .diagram import (
    BRACKET_VARS,
    JONES_VARS,
    Diagram,
    jones,
    kauffman_bracket,
    writhe,
)
from .laurent import LaurentPoly
from .ribbon import (
    RibbonGraph,
    br_poly,
    genus,
    signed_br_poly,
    subgraph_stats,
    tutte_via_br,
)


@dataclass(frozen=True)
class VerifyReport:
    """Both sides of an identity check and the prefactor exponents used."""

    left: LaurentPoly
    right: LaurentPoly
    equal: bool
    r: int
    n: int
    k: int
    switches: tuple[int, ...] = ()


def _graph_rnk(g: RibbonGraph) -> tuple[int, int, int]:
    stats = subgraph_stats(g, g.full_subset)
    return stats.r, g.edge_count - stats.r, stats.k


def bracket_from_graph(g: RibbonGraph, signed: bool = False) -> LaurentPoly:
    """Assemble a bracket polynomial from a ribbon graph.

    Multiplies the (signed) rank polynomial, evaluated at x = Bd/A,
    y = Ad/B, z = 1/d, by the monomial A^r B^n d^(k-1).
    """
    poly = signed_br_poly(g) if signed else br_poly(g)
    r, n, k = _graph_rnk(g)
    assembled = poly.substitute(
        {
            "x": LaurentPoly.monomial(BRACKET_VARS, 1, A=-1, B=1, d=1),
            "y": LaurentPoly.monomial(BRACKET_VARS, 1, A=1, B=-1, d=1),
            "z": LaurentPoly.monomial(BRACKET_VARS, 1, d=-1),
        },
        BRACKET_VARS,
    )
    prefactor = LaurentPoly.monomial(BRACKET_VARS, 1, A=r, B=n, d=k - 1)
    return prefactor * assembled


def jones_from_graph(g: RibbonGraph, w: int) -> LaurentPoly:
    """Assemble a Jones polynomial from a signed ribbon graph and writhe.

    Per term x^a y^b z^c the contribution is t^((a-b)/2) times
    D^(a+b-c+k-1) with D = -t^(1/2) - t^(-1/2); the global prefactor is
    (-1)^w t^((3w-r+n)/4).
    """
    poly = signed_br_poly(g)
    r, n, k = _graph_rnk(g)
    big_d = LaurentPoly.parse("-t^(1/2) - t^(-1/2)", JONES_VARS)
    total = LaurentPoly.zero(JONES_VARS)
    for (a, b, c), coeff in poly.terms():
        d_power = a + b - c + k - 1  # equals bc(F) - 1, a nonnegative integer
        total = total + (
            LaurentPoly.monomial(JONES_VARS, coeff, t=(a - b) / 2)
            * big_d ** int(d_power)
        )
    prefactor = LaurentPoly.monomial(
        JONES_VARS, -1 if w % 2 else 1, t=Fraction(3 * w - r + n, 4)
    )
    return prefactor * total


def jones_via_tutte(g: RibbonGraph, w: int) -> LaurentPoly:
    """The classical Jones assembly through the Tutte polynomial.

    Only sound for genus-0 graphs with all edges positive, where the rank
    polynomial carries no z and no sign shifts; evaluates the Tutte
    polynomial at (-t, -t^-1).
    """
    if genus(g) != 0:
        raise ValueError("the Tutte route needs a genus-0 ribbon graph")
    if g.negative_mask():
        raise ValueError("the Tutte route needs all edge signs positive")
    r, n, k = _graph_rnk(g)
    value = tutte_via_br(g).substitute(
        {
            "x": LaurentPoly.parse("-t", JONES_VARS),
            "y": LaurentPoly.parse("-t^-1", JONES_VARS),
        },
        JONES_VARS,
    )
    big_d = LaurentPoly.parse("-t^(1/2) - t^(-1/2)", JONES_VARS)
    prefactor = LaurentPoly.monomial(
        JONES_VARS, -1 if w % 2 else 1, t=Fraction(3 * w - r + n, 4)
    )
    return prefactor * big_d ** (k - 1) * value


def verify_main(d: Diagram) -> VerifyReport:
    """Check the bracket identity for an alternating diagram."""
    g = build_ribbon(d)
    left = kauffman_bracket(d)
    right = bracket_from_graph(g)
    r, n, k = _graph_rnk(g)
    return VerifyReport(left, right, left == right, r, n, k)


def verify_signed(d: Diagram, switches=None) -> VerifyReport:
    """Check the signed bracket identity for a switchable diagram."""
    g, used = build_signed(d, switches)
    left = kauffman_bracket(d)
    right = bracket_from_graph(g, signed=True)
    r, n, k = _graph_rnk(g)
    return VerifyReport(left, right, left == right, r, n, k, used)


def verify_jones(d: Diagram, switches=None) -> VerifyReport:
    """Check the Jones assembly against the direct bracket route."""
    g, used = build_signed(d, switches)
    left = jones(d)
    right = jones_from_graph(g, writhe(d))
    r, n, k = _graph_rnk(g)
    return VerifyReport(left, right, left == right, r, n, k, used)
