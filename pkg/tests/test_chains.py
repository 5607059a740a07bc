import pytest

from tiletopo import TileParams, WrongRegime, parse_address, point_eval
from tiletopo.automata import nfa_accepts_address, nfa_prefixes
from tiletopo.chains import (
    ChainSetup,
    alpha_calibration_rows,
    alpha_curves,
    alpha_table,
    chain_report,
    circular_chain_report,
    expected_chain_junctions,
    flipped_curves,
    gamma_arcs,
    symmetry_and_junctions,
    verify_chain,
    verify_circular_chain,
)
from tiletopo.contact import psi


SETUPS: dict = {}


def setup_for(a, b) -> ChainSetup:
    if (a, b) not in SETUPS:
        SETUPS[(a, b)] = ChainSetup.build(TileParams(a, b))
    return SETUPS[(a, b)]


class TestAlphaTable:
    def test_last_row_endpoints_4_5(self):
        s = setup_for(4, 5)
        curves = alpha_curves(s)
        assert curves[-1].endpoint_addresses == (
            parse_address("440(04)"),
            parse_address("4(2)"),
        )

    def test_penultimate_starts_at_junction_4_5(self):
        s = setup_for(4, 5)
        curves = alpha_curves(s)
        assert curves[-2].endpoint_addresses[0] == parse_address("4(2)")

    def test_first_row_5_7(self):
        s = setup_for(5, 7)
        curves = alpha_curves(s)
        assert curves[0].endpoint_addresses[0] == parse_address("106(60)")

    def test_row_count(self):
        for a, b in [(4, 5), (5, 7), (6, 9)]:
            assert len(alpha_table(TileParams(a, b))) == b

    def test_calibration_rows_decode(self):
        for a, b in [(4, 5), (5, 7)]:
            s = setup_for(a, b)
            for walk, addr in alpha_calibration_rows(TileParams(a, b)):
                assert psi(walk, s.ordered) == addr

    def test_wrong_regime(self):
        with pytest.raises(WrongRegime):
            alpha_table(TileParams(5, 5))
        with pytest.raises(WrongRegime):
            alpha_table(TileParams(3, 3))


def _k_prefixes(setup, state, depth):
    return nfa_prefixes(setup.graph.language(state), depth)


def _family(setup, head, states, depth=4):
    """Depth-limited prefixes of 0.head[K_s1 u K_s2 ...]."""
    head = tuple(head)
    out = set()
    if len(head) >= depth:
        out.add(head[:depth])
        return out
    rest = depth - len(head)
    for st in states:
        for tail in _k_prefixes(setup, st, rest):
            out.add(head + tail)
    return out


class TestAlphaLanguage:
    def test_contains_lower_junction(self):
        s = setup_for(4, 5)
        lang = alpha_curves(s)[0].language
        assert nfa_accepts_address(lang, parse_address("104(40)"))

    def test_depth4_matches_explicit_decomposition(self):
        # alpha_1 for (4,5): expand the explicit union of cylinder families
        # truncated to depth 4 and compare with the automaton prefixes
        s = setup_for(4, 5)
        a, b = 4, 5
        i = 1
        fam: set = set()
        fam.add((i, 0, b - 1, b - 1))  # the point 0.i0(B-1)((B-1)0)bar
        for p in (0, 1):
            base = (i, 0, b - 1) + (b - 1, 0) * p
            fam |= _family(s, base + (b - a,), (1,))
            for k in range(b - a + 1, b - 1):
                fam |= _family(s, base + (k,), (1, 2))
            base2 = (i, 0, b - 1, b - 1) + (0, b - 1) * p
            for k in range(1, a - 1):
                fam |= _family(s, base2 + (k,), (4, 5))
            fam |= _family(s, base2 + (a - 1,), (4,))
        for k in range(0, a - 2):
            fam |= _family(s, (i, k), (4, 5))
        fam |= _family(s, (i, a - 2), (4,))
        fam |= _family(s, (i, a - 2, b - 2), (1,))
        fam |= _family(s, (i, a - 2, b - 1), (1, 2))
        for p in (0, 1):
            fam |= _family(s, (i, a - 2, b - 2) + (0, b - 1) * p + (0,), (4,))
            fam |= _family(s, (i, a - 2, b - 2, 0) + (b - 1, 0) * p + (b - 1,), (1,))
        fam.add((i, a - 2, b - 2, 0))  # the point 0.i(A-2)(B-2)(0(B-1))bar
        fam = {w[:4] for w in fam}
        auto = nfa_prefixes(alpha_curves(s)[0].language, 4)
        assert auto == fam

    def test_language_inside_boundary_language(self):
        s = setup_for(4, 5)
        from tiletopo.automata import nfa_union

        boundary = nfa_union([s.graph.language(i) for i in range(1, 7)])
        bprefixes = nfa_prefixes(boundary, 5)
        for c in alpha_curves(s):
            assert nfa_prefixes(c.language, 5) <= bprefixes


class TestChain:
    def test_4_5_chain(self):
        report = verify_chain(setup_for(4, 5))
        assert report.ok

    def test_4_5_junction_dual_addresses(self):
        s = setup_for(4, 5)
        report = chain_report(s)
        cell = report.entry("a1", "a2")
        assert cell["kind"] == "UNIQUE_POINT"
        v1 = point_eval(parse_address("223(04)"), s.params)
        v2 = point_eval(parse_address("104(40)"), s.params)
        assert v1 == v2 == cell["value"]

    def test_4_5_far_pair_empty(self):
        report = chain_report(setup_for(4, 5))
        assert report.entry("a5", "a3")["kind"] == "EMPTY"

    def test_5_7_chain(self):
        assert verify_chain(setup_for(5, 7)).ok


class TestCircularChain:
    def test_4_5(self):
        s = setup_for(4, 5)
        report = verify_circular_chain(s)
        assert report.ok
        cell = report.entry("a5", "a1'")
        assert cell["kind"] == "UNIQUE_POINT"
        assert cell["value"] == point_eval(parse_address("440(04)"), s.params)
        assert report.entry("a1", "a2'")["kind"] == "EMPTY"

    def test_4_5_appendix_pair(self):
        # alpha_1 against alpha_{B-3}' = a2' is the appendix case for (4,5)
        report = circular_chain_report(setup_for(4, 5))
        assert report.entry("a1", "a2'")["kind"] == "EMPTY"

    def test_5_7(self):
        assert verify_circular_chain(setup_for(5, 7)).ok

    def test_junction_statement_variants_agree(self):
        # the two equivalent spellings of the a_B n a_1' junction
        for a, b in [(4, 5), (5, 7), (6, 9)]:
            p = TileParams(a, b)
            j = expected_chain_junctions(p)[(f"a{b}", "a1'")]
            vals = {point_eval(ad, p) for ad in j}
            assert len(vals) == 1

    def test_flip_coherence(self):
        s = setup_for(4, 5)
        curves = alpha_curves(s)
        flipped = flipped_curves(s, curves)
        top = point_eval(parse_address("(4)"), s.params)
        for c, f in zip(curves, flipped):
            for ca, fa in zip(c.endpoint_addresses, f.endpoint_addresses):
                cv, fv = point_eval(ca, s.params), point_eval(fa, s.params)
                assert (cv[0] + fv[0], cv[1] + fv[1]) == top
            cpre = nfa_prefixes(c.language, 5)
            fpre = nfa_prefixes(f.language, 5)
            assert fpre == {tuple(4 - d for d in w) for w in cpre}


class TestGamma:
    def test_4_5_through_points(self):
        s = setup_for(4, 5)
        arcs = gamma_arcs(s)
        assert len(arcs) == 3
        assert arcs[0].through == point_eval(parse_address("1(2)"), s.params)

    def test_4_5_endpoints(self):
        s = setup_for(4, 5)
        g2 = gamma_arcs(s)[1]
        assert g2.endpoints == (
            point_eval(parse_address("223(04)"), s.params),
            point_eval(parse_address("240(04)"), s.params),
        )

    def test_containment_fact_4_5(self):
        # i=2 > B-A=1, so 0.2[K2] sits inside K5, realized by the edge 5 -2-> 2
        s = setup_for(4, 5)
        assert s.graph.has_edge(5, 2, 2)
        assert not s.graph.has_edge(6, 2, 2)

    def test_5_7(self):
        assert len(gamma_arcs(setup_for(5, 7))) == 5


class TestSymmetry:
    def test_4_5_center(self):
        rep = symmetry_and_junctions(TileParams(4, 5))
        p45 = TileParams(4, 5)
        assert rep["center"] == point_eval(parse_address("(2)"), p45)
        top = point_eval(parse_address("(4)"), p45)
        assert (rep["center"][0] * 2, rep["center"][1] * 2) == top

    def test_4_5_p4_is_curve_endpoint(self):
        s = setup_for(4, 5)
        rep = symmetry_and_junctions(s.params)
        endpoint = alpha_curves(s)[-2].endpoint_addresses[0]
        assert rep["contact_points"][4] == point_eval(endpoint, s.params)

    def test_5_7_center(self):
        rep = symmetry_and_junctions(TileParams(5, 7))
        p57 = TileParams(5, 7)
        assert rep["center"] == point_eval(parse_address("(3)"), p57)
        half = point_eval(parse_address("(6)"), p57)
        assert (rep["center"][0] * 2, rep["center"][1] * 2) == half
