"""Virtual link diagrams and the bracket state sum.

A diagram is a sequence of classical crossings plus a count of crossing-free
loops.  Virtual crossings are never recorded: arcs simply pass through them,
so they leave no trace in the combinatorics.

Each crossing has four ports numbered 0..3 counterclockwise.  The under
strand enters at port 0 and leaves at port 2; the over strand enters at
port 1 or port 3 and leaves opposite.  An arc label names the strand
segment between two classical crossing ports (possibly of the same
crossing), so a valid diagram uses every label exactly once as an outgoing
port and exactly once as an incoming one.

The A-splitting of a crossing reconnects ports {0,1} and {2,3}, the
B-splitting reconnects {0,3} and {1,2}; these are the two regions swept by
rotating the over strand counterclockwise onto the under strand and the
complementary pair.  A state picks one splitting per crossing.  Writing
alpha(S) for the number of A-choices, beta(S) for the B-choices and
delta(S) for the closed curves left after all splittings, the bracket is
the state sum

    <L>(A, B, d) = sum over states S of  A^alpha(S) B^beta(S) d^(delta(S)-1)

and the Jones polynomial is (-1)^w t^(3w/4) <L> evaluated at A = t^(-1/4),
B = t^(1/4), d = -t^(1/2) - t^(-1/2), where w is the writhe.

File format, one item per line, # starts a comment:

    X a b c d o=1     crossing with arc labels a b c d at ports 0..3,
                      over strand entering at port 1 (o=1 or o=3)
    O 2               two crossing-free loops
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ._kernels import popcounts, state_delta_sweep
from .laurent import LaurentPoly
from .limits import check_enumeration_size

BRACKET_VARS = ("A", "B", "d")
JONES_VARS = ("t",)

_LABEL = re.compile(r"[A-Za-z0-9_]+\Z")


class DiagramError(ValueError):
    """Malformed diagram data."""


@dataclass(frozen=True)
class Crossing:
    """One classical crossing: arc labels at ports 0..3 and the over entry."""

    ports: tuple[str, str, str, str]
    over_in: int

    def __post_init__(self):
        if len(self.ports) != 4:
            raise DiagramError(f"crossing needs 4 ports, got {len(self.ports)}")
        if self.over_in not in (1, 3):
            raise DiagramError(f"over strand must enter at port 1 or 3, got {self.over_in}")

    @property
    def over_out(self) -> int:
        return 4 - self.over_in

    @property
    def sign(self) -> int:
        """Crossing sign; +1 when the over strand enters at port 3.

        Pinned by requiring the Jones polynomial of both kinked unknots
        (and of the bundled sample knot) to be 1.
        """
        return 1 if self.over_in == 3 else -1


@dataclass(frozen=True)
class StateStats:
    """Splitting counts and curve count of one state."""

    alpha: int
    beta: int
    delta: int


@dataclass(frozen=True)
class Diagram:
    """A virtual link diagram: classical crossings plus free loops."""

    crossings: tuple[Crossing, ...]
    free_loops: int = 0

    def __post_init__(self):
        if self.free_loops < 0:
            raise DiagramError(f"free loop count must be nonnegative, got {self.free_loops}")
        incoming: dict[str, int] = {}
        outgoing: dict[str, int] = {}
        for ci, c in enumerate(self.crossings):
            for port in range(4):
                label = c.ports[port]
                side = incoming if port in (0, c.over_in) else outgoing
                if label in side:
                    kind = "incoming" if side is incoming else "outgoing"
                    raise DiagramError(f"arc {label!r} occurs twice as {kind}")
                side[label] = ci
        dangling = set(incoming) ^ set(outgoing)
        if dangling:
            raise DiagramError(f"dangling arcs: {', '.join(sorted(dangling))}")


def parse_diagram(text: str) -> Diagram:
    """Parse the diagram file format; errors name the offending line."""
    crossings: list[Crossing] = []
    free_loops = 0
    incoming: dict[str, int] = {}
    outgoing: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "X":
            if len(tokens) != 6:
                raise DiagramError(
                    f"line {lineno}: X needs 4 arc labels and o=1|3, got {line!r}"
                )
            labels = tokens[1:5]
            for label in labels:
                if not _LABEL.match(label):
                    raise DiagramError(f"line {lineno}: bad arc label {label!r}")
            if tokens[5] not in ("o=1", "o=3"):
                raise DiagramError(
                    f"line {lineno}: expected o=1 or o=3, got {tokens[5]!r}"
                )
            over_in = int(tokens[5][2:])
            for port, label in enumerate(labels):
                side = incoming if port in (0, over_in) else outgoing
                if label in side:
                    kind = "incoming" if side is incoming else "outgoing"
                    raise DiagramError(
                        f"line {lineno}: arc {label!r} already used as {kind} "
                        f"on line {side[label]}"
                    )
                side[label] = lineno
            crossings.append(Crossing(tuple(labels), over_in))
        elif tokens[0] == "O":
            if len(tokens) != 2 or not tokens[1].isdigit():
                raise DiagramError(
                    f"line {lineno}: O needs one nonnegative integer, got {line!r}"
                )
            free_loops += int(tokens[1])
        else:
            raise DiagramError(
                f"line {lineno}: unknown directive {tokens[0]!r} (expected X or O)"
            )
    for label in sorted(set(incoming) - set(outgoing)):
        raise DiagramError(
            f"line {incoming[label]}: arc {label!r} never leaves a crossing"
        )
    for label in sorted(set(outgoing) - set(incoming)):
        raise DiagramError(
            f"line {outgoing[label]}: arc {label!r} never enters a crossing"
        )
    return Diagram(tuple(crossings), free_loops)


def format_diagram(d: Diagram) -> str:
    """Canonical file form; parse_diagram(format_diagram(d)) == d."""
    lines = [
        f"X {c.ports[0]} {c.ports[1]} {c.ports[2]} {c.ports[3]} o={c.over_in}"
        for c in d.crossings
    ]
    if d.free_loops:
        lines.append(f"O {d.free_loops}")
    return "\n".join(lines) + ("\n" if lines else "")


# -- strand structure ---------------------------------------------------


def _slot_maps(d: Diagram):
    """Maps label -> (crossing, port) for incoming and outgoing ports."""
    in_slot: dict[str, tuple[int, int]] = {}
    out_slot: dict[str, tuple[int, int]] = {}
    for ci, c in enumerate(d.crossings):
        for port in range(4):
            label = c.ports[port]
            if port in (0, c.over_in):
                in_slot[label] = (ci, port)
            else:
                out_slot[label] = (ci, port)
    return in_slot, out_slot


def components(d: Diagram) -> tuple[tuple[tuple[int, bool], ...], ...]:
    """Closed strand components, excluding free loops.

    Each component is the cyclic sequence of crossing passes it makes,
    as (crossing index, pass is on the over strand) pairs, starting from
    its least incoming port.
    """
    in_slot, _ = _slot_maps(d)
    seen: set[tuple[int, int]] = set()
    result = []
    for ci, c in enumerate(d.crossings):
        for port in (0, c.over_in):
            if (ci, port) in seen:
                continue
            passes = []
            slot = (ci, port)
            while slot not in seen:
                seen.add(slot)
                at, p = slot
                crossing = d.crossings[at]
                passes.append((at, p != 0))
                out_port = 2 if p == 0 else crossing.over_out
                slot = in_slot[crossing.ports[out_port]]
            result.append(tuple(passes))
    return tuple(result)


def writhe(d: Diagram) -> int:
    """Sum of crossing signs."""
    return sum(c.sign for c in d.crossings)


def is_alternating(d: Diagram) -> bool:
    """True when passes alternate over/under along every component.

    Equivalently, every arc runs from an under-out port to an over-in port
    or from an over-out port to an under-in port.
    """
    in_slot, out_slot = _slot_maps(d)
    for label, (_, port) in out_slot.items():
        _, q = in_slot[label]
        if (port == 2) == (q == 0):
            return False
    return True


def switch_crossing(c: Crossing) -> Crossing:
    """Exchange the over and under strands of one crossing.

    The geometric crossing is unchanged, so the port labels rotate to keep
    the under strand entering at port 0.
    """
    k = c.over_in
    return Crossing(c.ports[k:] + c.ports[:k], 4 - k)


def apply_switches(d: Diagram, indices) -> Diagram:
    """Switch the crossings at the given indices."""
    chosen = set(indices)
    for i in chosen:
        if not 0 <= i < len(d.crossings):
            raise DiagramError(f"no crossing {i} to switch")
    return Diagram(
        tuple(
            switch_crossing(c) if i in chosen else c
            for i, c in enumerate(d.crossings)
        ),
        d.free_loops,
    )


# -- state sum ----------------------------------------------------------


def _arc_mate(d: Diagram) -> np.ndarray:
    """Port-to-port arc matching as an int32 array over port ids 4c+p."""
    in_slot, out_slot = _slot_maps(d)
    mate = np.full(4 * len(d.crossings), -1, dtype=np.int32)
    for label, (ci, port) in out_slot.items():
        cj, qort = in_slot[label]
        mate[4 * ci + port] = 4 * cj + qort
        mate[4 * cj + qort] = 4 * ci + port
    return mate


def split_stats(d: Diagram, state: int) -> StateStats:
    """Splitting statistics of one state.

    `state` is a bitmask over crossings in diagram order; bit i set means
    the B-splitting at crossing i.  This is a direct pure-Python trace,
    kept independent of the sweep kernel on purpose.
    """
    n = len(d.crossings)
    if not 0 <= state < (1 << n):
        raise DiagramError(f"state {state} out of range for {n} crossings")
    in_slot, out_slot = _slot_maps(d)
    mate: dict[tuple[int, int], tuple[int, int]] = {}
    for label, slot in out_slot.items():
        mate[slot] = in_slot[label]
        mate[in_slot[label]] = slot
    delta = d.free_loops
    seen: set[tuple[int, int]] = set()
    for ci in range(n):
        for port in range(4):
            if (ci, port) in seen:
                continue
            delta += 1
            slot = (ci, port)
            while slot not in seen:
                seen.add(slot)
                at, p = slot
                flip = 3 if (state >> at) & 1 else 1
                joined = (at, p ^ flip)
                seen.add(joined)
                slot = mate[joined]
    alpha = n - int(state).bit_count()
    return StateStats(alpha, n - alpha, delta)


def state_table(d: Diagram) -> tuple[StateStats, ...]:
    """split_stats of every state, in binary-counter order."""
    n = len(d.crossings)
    check_enumeration_size(n, f"state table of a {n}-crossing diagram")
    return tuple(split_stats(d, s) for s in range(1 << n))


def kauffman_bracket(d: Diagram) -> LaurentPoly:
    """The bracket state sum as an exact polynomial in A, B, d."""
    n = len(d.crossings)
    check_enumeration_size(n, f"bracket of a {n}-crossing diagram")
    deltas = state_delta_sweep(n, _arc_mate(d)).astype(np.int64)
    alphas = n - popcounts(1 << n)
    dmax = int(deltas.max()) if n else 0
    keys = alphas * (dmax + 1) + deltas
    hist = np.bincount(keys, minlength=(n + 1) * (dmax + 1))
    terms: dict[tuple[int, int, int], int] = {}
    for flat in np.flatnonzero(hist):
        alpha, delta = divmod(int(flat), dmax + 1)
        exps = (4 * alpha, 4 * (n - alpha), 4 * (delta + d.free_loops - 1))
        terms[exps] = int(hist[flat])
    return LaurentPoly(BRACKET_VARS, terms)


def jones(d: Diagram) -> LaurentPoly:
    """The Jones polynomial in t^(1/4), via the bracket."""
    w = writhe(d)
    value = kauffman_bracket(d).substitute(
        {
            "A": LaurentPoly.monomial(JONES_VARS, 1, t=Fraction(-1, 4)),
            "B": LaurentPoly.monomial(JONES_VARS, 1, t=Fraction(1, 4)),
            "d": LaurentPoly.parse("-t^(1/2) - t^(-1/2)", JONES_VARS),
        },
        JONES_VARS,
    )
    prefactor = LaurentPoly.monomial(
        JONES_VARS, -1 if w % 2 else 1, t=Fraction(3 * w, 4)
    )
    return prefactor * value
