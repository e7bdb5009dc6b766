"""Both sides of the bracket and Jones identities, computed independently."""

import itertools
from fractions import Fraction

import pytest

from vkbr import fixtures
from vkbr.build import (
    NotAlternatingError,
    NotColorableError,
    build_ribbon,
    build_signed,
)
from vkbr.diagram import (
    BRACKET_VARS,
    apply_switches,
    is_alternating,
    jones,
    kauffman_bracket,
    parse_diagram,
    writhe,
)
from vkbr.laurent import LaurentPoly
from vkbr.randgen import random_diagram
from vkbr.ribbon import br_poly, genus, parse_ribbon, subgraph_stats
from vkbr.verify import (
    VerifyReport,
    bracket_from_graph,
    jones_from_graph,
    jones_via_tutte,
    verify_jones,
    verify_main,
    verify_signed,
)

ALTERNATING = ["unknot", "negative-kink", "positive-kink", "hopf-link", "trefoil", "sample-knot"]


class TestBracketIdentity:
    @pytest.mark.parametrize("name", ALTERNATING)
    def test_fixtures_verify(self, name):
        report = verify_main(parse_diagram(fixtures.DIAGRAMS[name]))
        assert report.equal
        assert report.left == report.right

    def test_sample_knot_report(self):
        report = verify_main(parse_diagram(fixtures.SAMPLE_KNOT))
        assert (report.r, report.n, report.k) == (1, 2, 1)
        assert str(report.left) == "A^3 + 3*A^2*B*d + A*B^2*d^2 + 2*A*B^2 + B^3*d"
        assert report.right == report.left

    def test_crossing_free_diagram(self):
        report = verify_main(parse_diagram(fixtures.UNKNOT))
        assert str(report.left) == "1" and str(report.right) == "1"

    def test_substitution_values_multiply_to_one(self):
        # x, y, z as substituted satisfy x*y*z^2 = 1, which is why the
        # bracket has one variable fewer than the rank polynomial.
        x = LaurentPoly.monomial(BRACKET_VARS, 1, A=-1, B=1, d=1)
        y = LaurentPoly.monomial(BRACKET_VARS, 1, A=1, B=-1, d=1)
        z = LaurentPoly.monomial(BRACKET_VARS, 1, d=-1)
        assert x * y * z ** 2 == LaurentPoly.one(BRACKET_VARS)

    def test_random_alternating_diagrams_verify(self):
        for seed in range(40):
            d = random_diagram(1 + seed % 8, seed, kind="alternating")
            assert verify_main(d).equal, format(seed)

    def test_non_alternating_is_rejected(self):
        with pytest.raises(NotAlternatingError):
            verify_main(parse_diagram(fixtures.VIRTUAL_HOPF))

    def test_frozen_graph_assembles_the_frozen_bracket(self):
        # The bundled ribbon graph reproduces the bundled knot's bracket
        # without going through the builder at all.
        g = parse_ribbon(fixtures.SAMPLE_RIBBON)
        d = parse_diagram(fixtures.SAMPLE_KNOT)
        assert bracket_from_graph(g) == kauffman_bracket(d)


class TestSignedIdentity:
    def test_alternating_input_reduces_to_unsigned(self):
        d = parse_diagram(fixtures.SAMPLE_KNOT)
        plain, signed = verify_main(d), verify_signed(d)
        assert signed.switches == ()
        assert signed.left == plain.left and signed.right == plain.right

    @pytest.mark.parametrize("switch", [(0,), (1,), (2,), (0, 1), (0, 2), (0, 1, 2)])
    def test_switched_sample_knot_verifies(self, switch):
        d = apply_switches(parse_diagram(fixtures.SAMPLE_KNOT), switch)
        report = verify_signed(d)
        assert report.equal
        assert report.left == kauffman_bracket(d)

    def test_random_colorable_diagrams_verify(self):
        for seed in range(40):
            d = random_diagram(1 + seed % 8, seed, kind="colorable")
            assert verify_signed(d).equal, format(seed)

    def test_every_switch_choice_assembles_the_same_right_side(self):
        # The signed polynomial itself depends on which crossings get
        # switched, but the assembled product always lands on the bracket.
        checked = 0
        for seed in range(20):
            d = random_diagram(5, seed, kind="colorable")
            n = len(d.crossings)
            valid = [
                combo
                for size in range(n + 1)
                for combo in itertools.combinations(range(n), size)
                if is_alternating(apply_switches(d, combo))
            ]
            if len(valid) < 2:
                continue
            checked += 1
            bracket = kauffman_bracket(d)
            for v in valid:
                g, _ = build_signed(d, switches=v)
                assert bracket_from_graph(g, signed=True) == bracket, (seed, v)
        assert checked > 5

    def test_not_colorable_is_rejected(self):
        with pytest.raises(NotColorableError):
            verify_signed(parse_diagram(fixtures.VIRTUAL_HOPF))


class TestJonesIdentity:
    @pytest.mark.parametrize("name", ALTERNATING)
    def test_fixtures_verify(self, name):
        report = verify_jones(parse_diagram(fixtures.DIAGRAMS[name]))
        assert report.equal

    def test_sample_knot_both_routes_give_one(self):
        report = verify_jones(parse_diagram(fixtures.SAMPLE_KNOT))
        assert str(report.left) == "1" and str(report.right) == "1"

    @pytest.mark.parametrize("switch", [(0,), (1,), (0, 2)])
    def test_switched_sample_knot_verifies(self, switch):
        d = apply_switches(parse_diagram(fixtures.SAMPLE_KNOT), switch)
        assert verify_jones(d).equal

    def test_random_colorable_diagrams_verify(self):
        for seed in range(40):
            d = random_diagram(1 + seed % 8, seed, kind="colorable")
            assert verify_jones(d).equal, format(seed)

    def test_tutte_route_agrees_on_planar_positive_graphs(self):
        hits = 0
        for name in ALTERNATING:
            d = parse_diagram(fixtures.DIAGRAMS[name])
            g = build_ribbon(d)
            if genus(g) != 0:
                continue
            hits += 1
            assert jones_via_tutte(g, writhe(d)) == jones(d), name
        assert hits >= 4

    def test_tutte_route_agrees_on_random_planar_inputs(self):
        hits = 0
        for seed in range(30):
            d = random_diagram(1 + seed % 6, seed, kind="alternating")
            g = build_ribbon(d)
            if genus(g) != 0:
                continue
            hits += 1
            assert jones_via_tutte(g, writhe(d)) == jones(d), seed
        assert hits > 5

    def test_tutte_route_demands_planarity_and_positivity(self):
        d = parse_diagram(fixtures.SAMPLE_KNOT)
        with pytest.raises(ValueError, match="genus-0"):
            jones_via_tutte(build_ribbon(d), writhe(d))
        negative_loop = parse_ribbon("V u : a1 a2\nE a : a1 a2 sign=-\n")
        with pytest.raises(ValueError, match="positive"):
            jones_via_tutte(negative_loop, 1)

    def test_clearing_the_z_denominator_agrees(self):
        # Alternative right-side assembly: substitute x and y as whole
        # polynomials, clear the z powers by multiplying through with the
        # largest needed power of D, and compare against jones * D^m.
        big_d = LaurentPoly.parse("-t^(1/2) - t^(-1/2)", ("t",))
        x_val = LaurentPoly.parse("-t - 1", ("t",))
        y_val = LaurentPoly.parse("-t^-1 - 1", ("t",))
        for seed in range(12):
            d = random_diagram(1 + seed % 6, seed, kind="alternating")
            g = build_ribbon(d)
            poly = br_poly(g)
            terms = poly.terms()
            m = max(int(c) for (_, _, c), _ in terms)
            stats = subgraph_stats(g, g.full_subset)
            r, k = stats.r, stats.k
            n = g.edge_count - r
            numerator = LaurentPoly.zero(("t",))
            for (a, b, c), coeff in terms:
                numerator = numerator + (
                    x_val ** int(a) * y_val ** int(b) * big_d ** (m - int(c)) * coeff
                )
            w = writhe(d)
            prefactor = LaurentPoly.monomial(
                ("t",), -1 if w % 2 else 1, t=Fraction(3 * w - r + n, 4)
            )
            left = jones(d) * big_d ** m
            right = prefactor * big_d ** (k - 1) * numerator
            assert left == right, seed

    def test_not_colorable_is_rejected(self):
        with pytest.raises(NotColorableError):
            verify_jones(parse_diagram(fixtures.VIRTUAL_HOPF))


class TestReportShape:
    def test_fields(self):
        report = verify_signed(
            apply_switches(parse_diagram(fixtures.TREFOIL), (1,))
        )
        assert isinstance(report, VerifyReport)
        assert report.switches == (1,)
        assert report.equal and report.left == report.right

    def test_assembly_functions_are_exposed(self):
        g = parse_ribbon(fixtures.SAMPLE_RIBBON)
        assert bracket_from_graph(g).variables == ("A", "B", "d")
        assert jones_from_graph(g, 1).variables == ("t",)
