"""Small bundled diagrams and graphs used by the tests and the selftest.

Each constant is the text form of a diagram (parse with parse_diagram) or
a ribbon graph (parse with parse_ribbon).  The values quoted in the
docstrings are pinned by the test suite.
"""

# A single closed curve with no crossings.  Bracket 1, Jones 1.
UNKNOT = "O 1\n"

# One crossing whose under strand closes on itself: writhe -1, bracket
# A + B*d, Jones 1.  Its ribbon graph is a bridge on two vertices.
NEGATIVE_KINK = "X a b b a o=1\n"

# The mirror kink: writhe +1, bracket A*d + B, Jones 1.  Its ribbon
# graph is a planar loop on one vertex.
POSITIVE_KINK = "X a a g g o=3\n"

# One classical crossing closed up through two virtual ones, so each
# strand passes the crossing once.  Bracket A + B.  No set of switches
# makes it alternate.
VIRTUAL_HOPF = "X a b a b o=1\n"

# Alternating two-component link with writhe -2 and Jones
# -t^(-1/2) - t^(-5/2).
HOPF_LINK = """\
X a c b d o=1
X d b c a o=1
"""

# Alternating knot with writhe -3 and Jones t^-1 + t^-3 - t^-4.
TREFOIL = """\
X a1 a4 a2 a5 o=1
X a3 a6 a4 a1 o=1
X a5 a2 a6 a3 o=1
"""

# Alternating virtual knot on three classical crossings with writhe +1,
# bracket A^3 + 3*A^2*B*d + A*B^2*d^2 + 2*A*B^2 + B^3*d, and Jones 1.
# Its ribbon graph has two vertices and genus one; see SAMPLE_RIBBON.
SAMPLE_KNOT = """\
X a6 a3 a1 a4 o=1
X a2 a6 a3 a5 o=3
X a4 a2 a5 a1 o=3
"""

# Two vertices joined by parallel edges a and b, plus a loop c at u whose
# ends interleave them: genus one, and
# R = x*y + x + y^2*z^2 + 3*y + 2.  The graph built from SAMPLE_KNOT has
# these same subgraph statistics and rank polynomial.
SAMPLE_RIBBON = """\
V u : a1 c1 b1 c2
V w : a2 b2
E a : a1 a2
E b : b1 b2
E c : c1 c2
"""

# Diagram fixtures by name, for the command line selftest.
DIAGRAMS = {
    "unknot": UNKNOT,
    "negative-kink": NEGATIVE_KINK,
    "positive-kink": POSITIVE_KINK,
    "virtual-hopf": VIRTUAL_HOPF,
    "hopf-link": HOPF_LINK,
    "trefoil": TREFOIL,
    "sample-knot": SAMPLE_KNOT,
}
