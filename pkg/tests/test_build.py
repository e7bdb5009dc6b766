"""Switch finding and the diagram-to-ribbon construction."""

import itertools
from dataclasses import astuple

import pytest

from vkbr import fixtures
from vkbr.build import (
    NotAlternatingError,
    NotColorableError,
    build_ribbon,
    build_signed,
    edge_of_crossing,
    find_switch_set,
)
from vkbr.diagram import (
    apply_switches,
    is_alternating,
    kauffman_bracket,
    parse_diagram,
    split_stats,
)
from vkbr.randgen import random_diagram
from vkbr.ribbon import (
    br_poly,
    format_ribbon,
    genus,
    parse_ribbon,
    signed_br_poly,
    subgraph_stats,
)


def _all_valid_switch_sets(d):
    n = len(d.crossings)
    return [
        combo
        for size in range(n + 1)
        for combo in itertools.combinations(range(n), size)
        if is_alternating(apply_switches(d, combo))
    ]


class TestFindSwitchSet:
    @pytest.mark.parametrize(
        "text",
        [
            fixtures.UNKNOT,
            fixtures.NEGATIVE_KINK,
            fixtures.POSITIVE_KINK,
            fixtures.HOPF_LINK,
            fixtures.TREFOIL,
            fixtures.SAMPLE_KNOT,
        ],
    )
    def test_alternating_needs_no_switches(self, text):
        assert find_switch_set(parse_diagram(text)) == ()

    def test_virtual_hopf_is_not_switchable(self):
        d = parse_diagram(fixtures.VIRTUAL_HOPF)
        assert find_switch_set(d) is None
        assert _all_valid_switch_sets(d) == []

    def test_single_switched_crossing_is_found(self):
        d = apply_switches(parse_diagram(fixtures.TREFOIL), (1,))
        assert not is_alternating(d)
        assert find_switch_set(d) == (1,)

    def test_tie_keeps_lowest_crossing_unswitched(self):
        # Both (0,) and (1,) restore alternation here; the tie rule picks
        # the set avoiding crossing 0.
        d = apply_switches(parse_diagram(fixtures.HOPF_LINK), (0,))
        assert sorted(_all_valid_switch_sets(d), key=len)[:2] == [(0,), (1,)]
        assert find_switch_set(d) == (1,)

    def test_result_is_valid_and_minimal(self):
        for seed in range(40):
            d = random_diagram(5, seed, kind="colorable")
            s = find_switch_set(d)
            assert s is not None
            assert is_alternating(apply_switches(d, s))
            valid = _all_valid_switch_sets(d)
            assert len(s) == min(len(v) for v in valid)
            assert s in valid

    def test_none_means_no_subset_works(self):
        missing = 0
        for seed in range(60):
            d = random_diagram(4, seed, kind="any")
            if find_switch_set(d) is None:
                missing += 1
                assert _all_valid_switch_sets(d) == []
        assert missing > 0

    def test_deterministic(self):
        d = random_diagram(6, 3, kind="colorable")
        assert find_switch_set(d) == find_switch_set(d)


class TestBuildRibbon:
    def test_kink_with_under_loop_gives_a_bridge(self):
        g = build_ribbon(parse_diagram(fixtures.NEGATIVE_KINK))
        assert (g.vertex_count, g.edge_count) == (2, 1)
        assert genus(g) == 0
        assert str(br_poly(g)) == "x + 1"

    def test_kink_with_over_loop_gives_a_loop(self):
        g = build_ribbon(parse_diagram(fixtures.POSITIVE_KINK))
        assert (g.vertex_count, g.edge_count) == (1, 1)
        assert genus(g) == 0
        assert str(br_poly(g)) == "y + 1"

    def test_trefoil_graph_is_planar(self):
        d = parse_diagram(fixtures.TREFOIL)
        g = build_ribbon(d)
        assert g.edge_count == 3
        assert genus(g) == 0

    def test_sample_knot_matches_sample_ribbon(self):
        d = parse_diagram(fixtures.SAMPLE_KNOT)
        g = build_ribbon(d)
        reference = parse_ribbon(fixtures.SAMPLE_RIBBON)
        assert (g.vertex_count, g.edge_count) == (2, 3)
        assert genus(g) == 1
        assert br_poly(g) == br_poly(reference)
        rows = sorted(astuple(subgraph_stats(g, m)) for m in range(8))
        wanted = sorted(astuple(subgraph_stats(reference, m)) for m in range(8))
        assert rows == wanted

    def test_crossing_free_diagram_gives_isolated_vertex(self):
        g = build_ribbon(parse_diagram(fixtures.UNKNOT))
        assert (g.vertex_count, g.edge_count) == (1, 0)
        assert str(br_poly(g)) == "1"

    def test_free_loops_become_isolated_vertices(self):
        g = build_ribbon(parse_diagram(fixtures.NEGATIVE_KINK + "O 2\n"))
        assert (g.vertex_count, g.edge_count) == (4, 1)
        assert str(br_poly(g)) == "x + 1"

    def test_non_alternating_is_rejected(self):
        with pytest.raises(NotAlternatingError):
            build_ribbon(parse_diagram(fixtures.VIRTUAL_HOPF))
        with pytest.raises(NotAlternatingError):
            build_ribbon(apply_switches(parse_diagram(fixtures.TREFOIL), (1,)))

    def test_edge_names_follow_crossings(self):
        g = build_ribbon(parse_diagram(fixtures.SAMPLE_KNOT))
        assert [e.name for e in g.edges] == [edge_of_crossing(i) for i in range(3)]
        assert g.edges[1].darts == ("e1a", "e1b")
        assert [name for name, _ in g.vertices] == ["v0", "v1"]

    def test_round_trips_through_text(self):
        g = build_ribbon(parse_diagram(fixtures.SAMPLE_KNOT))
        assert parse_ribbon(format_ribbon(g)) == g


class TestStateSubgraphCorrespondence:
    # A state and the subgraph keeping its A-split crossings carry the
    # same statistics: loops of the state = boundary components of the
    # subgraph, A-splittings = edges kept.
    @pytest.mark.parametrize(
        "text",
        [
            fixtures.NEGATIVE_KINK,
            fixtures.POSITIVE_KINK,
            fixtures.TREFOIL,
            fixtures.HOPF_LINK,
            fixtures.SAMPLE_KNOT,
        ],
    )
    def test_fixture_states_match_subgraphs(self, text):
        self._check(parse_diagram(text))

    def test_random_states_match_subgraphs(self):
        for seed in range(15):
            self._check(random_diagram(6, seed, kind="alternating"))

    def _check(self, d):
        g = build_ribbon(d)
        n = len(d.crossings)
        full = (1 << n) - 1
        assert g.vertex_count == split_stats(d, full).delta
        for state in range(1 << n):
            kept = full & ~state
            stats = subgraph_stats(g, kept)
            st = split_stats(d, state)
            assert stats.bc == st.delta
            assert bin(kept).count("1") == st.alpha


class TestBuildSigned:
    def test_alternating_diagram_gets_no_negative_edges(self):
        d = parse_diagram(fixtures.SAMPLE_KNOT)
        g, switches = build_signed(d)
        assert switches == ()
        assert g == build_ribbon(d)
        assert g.negative_mask() == 0

    def test_switched_crossings_become_negative_edges(self):
        d = apply_switches(parse_diagram(fixtures.HOPF_LINK), (0,))
        g, switches = build_signed(d)
        assert switches == (1,)
        assert g.negative_mask() == 0b10
        assert signed_br_poly(g) != br_poly(g)

    def test_not_colorable_is_rejected(self):
        with pytest.raises(NotColorableError):
            build_signed(parse_diagram(fixtures.VIRTUAL_HOPF))

    def test_bad_explicit_switches_are_rejected(self):
        d = apply_switches(parse_diagram(fixtures.TREFOIL), (1,))
        with pytest.raises(NotAlternatingError):
            build_signed(d, switches=(0,))

    def test_sample_knot_with_one_switch(self):
        base = parse_diagram(fixtures.SAMPLE_KNOT)
        d = apply_switches(base, (1,))
        assert find_switch_set(d) == (1,)
        g, switches = build_signed(d)
        assert switches == (1,)
        assert g.negative_mask() == 0b010
        # Same underlying graph as the unswitched build, signs aside.
        plain = build_ribbon(base)
        assert [e.darts for e in g.edges] == [e.darts for e in plain.edges]
        assert g.vertices == plain.vertices

    def test_switches_are_reported_sorted_and_deduplicated(self):
        d = apply_switches(parse_diagram(fixtures.TREFOIL), (1, 2))
        g, switches = build_signed(d, switches=(2, 1, 2))
        assert switches == (1, 2)
        assert g.negative_mask() == 0b110
