import random
from itertools import permutations, product

import pytest

from geneasm import overlap, pointers, reduction, rewriting
from geneasm.errors import ParseError
from geneasm.rewriting import GraphRule, StringRule


def gamma(text):
    return overlap.overlap_graph(pointers.parse_pointer_string(text))


def _random_legal(rng, max_domain=5):
    size = rng.randint(1, max_domain)
    letters = []
    for m in range(2, size + 2):
        letters.append(-m if rng.random() < 0.5 else m)
        letters.append(-m if rng.random() < 0.5 else m)
    rng.shuffle(letters)
    return tuple(letters)


def _random_realistic(rng, kappa):
    entries = list(range(1, kappa + 1))
    rng.shuffle(entries)
    return pointers.encode_arrangement(
        tuple(-k if rng.random() < 0.5 else k for k in entries)
    )


class TestStringRules:
    def test_negative_rule(self):
        assert rewriting.apply_string_rule((2, 2), StringRule("snr", (2,))) == ()
        assert rewriting.apply_string_rule(
            (3, 2, 2, 3), StringRule("snr", (2,))
        ) == (3, 3)
        # barred adjacent pairs count as the same rule
        assert rewriting.apply_string_rule((-2, -2), StringRule("snr", (2,))) == ()

    def test_positive_rule(self):
        assert rewriting.apply_string_rule(
            (2, 3, -2, 3), StringRule("spr", (2,))
        ) == (-3, 3)
        assert rewriting.apply_string_rule((2, -2), StringRule("spr", (2,))) == ()

    def test_double_rule(self):
        assert rewriting.apply_string_rule(
            (2, 3, 2, 3), StringRule("sdr", (2, 3))
        ) == ()
        assert rewriting.apply_string_rule(
            (4, 2, 3, 2, 3, 4), StringRule("sdr", (2, 3))
        ) == (4, 4)
        # segments swap around the removed occurrences
        assert rewriting.apply_string_rule(
            (2, 4, 4, 3, 2, 5, 5, 3), StringRule("sdr", (2, 3))
        ) == (5, 5, 4, 4)

    def test_applicability(self):
        u = (2, 3, 2, 3)
        assert rewriting.applicable_string_rules(u) == [StringRule("sdr", (2, 3))]
        v = (2, 3, -2, 3)
        assert rewriting.applicable_string_rules(v) == [StringRule("spr", (2,))]
        assert rewriting.applicable_string_rules(v, kinds=("snr",)) == []
        with pytest.raises(ValueError):
            rewriting.apply_string_rule((2, 3, 2, 3), StringRule("snr", (2,)))

    def test_rules_shrink_domain_and_preserve_legality(self):
        rng = random.Random(91)
        for _ in range(150):
            u = _random_legal(rng)
            for rule in rewriting.applicable_string_rules(u):
                v = rewriting.apply_string_rule(u, rule)
                assert pointers.is_legal(v)
                assert pointers.domain(v) < pointers.domain(u)

    def test_every_legal_string_fully_reduces(self):
        rng = random.Random(92)
        for _ in range(100):
            u = _random_legal(rng, max_domain=4)
            assert rewriting.is_successful_string(u)

    def test_search_cap(self):
        u = tuple(range(2, 9)) + tuple(range(2, 9))
        with pytest.raises(ValueError):
            list(rewriting.successful_string_reductions(u))


class TestNegativeRuleCounts:
    def test_worked_examples(self):
        assert rewriting.predicted_negative_rule_count(
            pointers.parse_pointer_string("453475623267")
        ) == 2
        assert rewriting.predicted_negative_rule_count(
            pointers.parse_pointer_string("72673456-3-245")
        ) == 1
        assert rewriting.predicted_negative_rule_count((2, 2)) == 1
        assert rewriting.predicted_negative_rule_count((2, -2)) == 0

    def test_rejects_empty_string(self):
        with pytest.raises(ValueError):
            rewriting.predicted_negative_rule_count(())

    def test_graph_side_requires_contiguous_domain(self):
        with pytest.raises(ValueError):
            rewriting.predicted_negative_rule_count(gamma("2244"))

    def test_string_reductions_use_exactly_the_predicted_count(self):
        rng = random.Random(93)
        for _ in range(60):
            u = _random_legal(rng, max_domain=4)
            if not u:
                continue
            want = rewriting.predicted_negative_rule_count(u)
            counts = {
                sum(1 for r in seq if r.kind == "snr")
                for seq in rewriting.successful_string_reductions(u)
            }
            assert counts == {want}

    def test_single_pair_string(self):
        seqs = list(rewriting.successful_string_reductions((2, 2)))
        assert seqs == [[StringRule("snr", (2,))]]


class TestGraphRules:
    def test_negative_rule_removes_isolated_vertex(self):
        g = gamma("22")
        out = rewriting.apply_graph_rule(g, GraphRule("gnr", (2,)))
        assert not out.vertices

    def test_positive_rule_locally_complements(self):
        g = gamma("72673456-3-245")
        out = rewriting.apply_graph_rule(g, GraphRule("gpr", (3,)))
        # neighbors of 3 were {4,5,6}: pairwise edges toggle off, signs flip
        assert out.vertices == {2, 4, 5, 6, 7}
        assert out.positive == {2, 4, 5, 6}
        assert out.edges == {(2, 4), (2, 5), (2, 7), (6, 7)}

    def test_double_rule_toggles_odd_pairs(self):
        g = gamma("453475623267")
        out = rewriting.apply_graph_rule(g, GraphRule("gdr", (3, 6)))
        assert out.vertices == {2, 4, 5, 7}
        assert out.positive == frozenset()
        assert out.edges == {(4, 5), (5, 7)}

    def test_inapplicable_rules(self):
        g = gamma("72673456-3-245")
        with pytest.raises(ValueError):
            rewriting.apply_graph_rule(g, GraphRule("gnr", (2,)))  # 2 is positive
        with pytest.raises(ValueError):
            rewriting.apply_graph_rule(g, GraphRule("gdr", (2, 4)))  # 2 is positive
        with pytest.raises(ValueError):
            rewriting.apply_graph_rule(gamma("2233"), GraphRule("gdr", (2, 3)))

    def test_rules_shrink_vertex_count(self):
        rng = random.Random(94)
        for _ in range(80):
            g = overlap.overlap_graph(_random_legal(rng))
            for rule in rewriting.applicable_graph_rules(g):
                out = rewriting.apply_graph_rule(g, rule)
                assert len(out.vertices) < len(g.vertices)
                assert out.positive <= out.vertices


class TestPublishedReductions:
    def test_all_negative_sequence(self):
        g = gamma("453475623267")
        rules = rewriting.parse_rule_sequence("gnr_4 gdr_{5,7} gnr_2 gdr_{3,6}")
        h = g
        for rule in rules:
            assert rule in rewriting.applicable_graph_rules(h)
            h = rewriting.apply_graph_rule(h, rule)
        assert not h.vertices
        assert sum(1 for r in rules if r.kind == "gnr") == 2

    def test_signed_sequence(self):
        g = gamma("72673456-3-245")
        rules = rewriting.parse_rule_sequence("gnr_2 gpr_4 gpr_5 gpr_7 gpr_6 gpr_3")
        h = g
        for rule in rules:
            assert rule in rewriting.applicable_graph_rules(h)
            h = rewriting.apply_graph_rule(h, rule)
        assert not h.vertices
        assert sum(1 for r in rules if r.kind == "gnr") == 1

    def test_sequence_serialization_round_trip(self):
        text = "gnr_4 gdr_{5,7} gnr_2 gdr_{3,6}"
        rules = rewriting.parse_rule_sequence(text)
        assert rules[0] == GraphRule("gdr", (3, 6))  # rightmost applies first
        assert rewriting.format_rule_sequence(rules) == text

    @pytest.mark.parametrize("bad", ["xyz_2", "snr", "snr_{2,3}", "sdr_2", "gdr_4"])
    def test_malformed_sequences(self, bad):
        with pytest.raises(ParseError):
            rewriting.parse_rule_sequence(bad)


class TestGraphCounts:
    def test_graph_reductions_use_exactly_the_predicted_count(self):
        rng = random.Random(95)
        for _ in range(40):
            u = _random_realistic(rng, rng.randint(2, 5))
            g = overlap.overlap_graph(u)
            want = rewriting.predicted_negative_rule_count(g)
            counts = {
                sum(1 for r in seq if r.kind == "gnr")
                for seq in rewriting.successful_graph_reductions(g)
            }
            assert counts == {want}

    def test_string_and_graph_predictions_agree_on_realistic_strings(self):
        rng = random.Random(96)
        for _ in range(60):
            u = _random_realistic(rng, rng.randint(2, 7))
            assert rewriting.predicted_negative_rule_count(
                u
            ) == rewriting.predicted_negative_rule_count(overlap.overlap_graph(u))


class TestSuccessfulness:
    SUBSETS = [
        frozenset(),
        frozenset({"gnr"}),
        frozenset({"gpr"}),
        frozenset({"gdr"}),
        frozenset({"gnr", "gpr"}),
        frozenset({"gnr", "gdr"}),
        frozenset({"gpr", "gdr"}),
        frozenset({"gnr", "gpr", "gdr"}),
    ]

    def test_worked_example_subsets(self):
        from geneasm import direct

        g = gamma("453475623267")
        comps = direct.direct_reduction_graph(g).component_count()
        assert comps == 3
        assert rewriting.successful_in_classifier(g, {"gnr", "gdr"}, comps)
        assert not rewriting.successful_in_classifier(g, {"gpr", "gdr"}, comps)
        assert rewriting.successful_in(g, {"gnr", "gdr"})
        assert not rewriting.successful_in(g, {"gpr", "gdr"})

    def test_classifier_agrees_with_search_exhaustively_small(self):
        from geneasm import direct

        for kappa in (2, 3):
            for entries in permutations(range(1, kappa + 1)):
                for signs in product((1, -1), repeat=kappa):
                    arr = tuple(k * s for k, s in zip(entries, signs))
                    g = overlap.overlap_graph(pointers.encode_arrangement(arr))
                    comps = direct.direct_reduction_graph(g).component_count()
                    for kinds in self.SUBSETS:
                        assert rewriting.successful_in(
                            g, kinds
                        ) == rewriting.successful_in_classifier(g, kinds, comps)

    def test_classifier_agrees_with_search_random(self):
        from geneasm import direct

        rng = random.Random(97)
        for _ in range(40):
            u = _random_realistic(rng, rng.randint(2, 6))
            g = overlap.overlap_graph(u)
            comps = direct.direct_reduction_graph(g).component_count()
            for kinds in self.SUBSETS:
                assert rewriting.successful_in(
                    g, kinds
                ) == rewriting.successful_in_classifier(g, kinds, comps)

    def test_full_rule_set_always_succeeds(self):
        rng = random.Random(98)
        for _ in range(40):
            u = _random_realistic(rng, rng.randint(2, 6))
            assert rewriting.successful_in(overlap.overlap_graph(u), rewriting.ALL_GRAPH_RULES)

    def test_search_cap(self):
        g = overlap.overlap_graph(pointers.encode_arrangement(tuple(range(1, 9))))
        with pytest.raises(ValueError):
            rewriting.successful_in(g, {"gnr"})
        with pytest.raises(ValueError):
            list(rewriting.successful_graph_reductions(g))

    def test_unknown_rule_kinds_rejected(self):
        with pytest.raises(ValueError):
            rewriting.applicable_string_rules((2, 2), kinds=("snr", "bogus"))
        with pytest.raises(ValueError):
            rewriting.successful_in(gamma("22"), {"gnr", "nope"})

    def test_string_sequence_formatting(self):
        rules = [StringRule("sdr", (2, 3)), StringRule("snr", (4,))]
        assert rewriting.format_rule_sequence(rules) == "snr_4 sdr_{2,3}"
        assert rewriting.parse_rule_sequence("snr_4 sdr_{2,3}") == rules

    def test_canonical_key_respects_isomorphism(self):
        g1 = gamma("2233")
        g2 = gamma("3322")
        assert rewriting.canonical_graph_key(g1) == rewriting.canonical_graph_key(g2)
        g3 = gamma("2323")
        assert rewriting.canonical_graph_key(g1) != rewriting.canonical_graph_key(g3)
