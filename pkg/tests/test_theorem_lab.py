import pytest

from annihilator import (
    Graph,
    degree_sequence,
    encode_graph6,
    parse_graph6,
)
from annihilator.families import chorded_cycle_star
from annihilator.theorem_lab import (
    EnumerationSource,
    FamilySource,
    Graph6Source,
    GraphFacts,
    RandomSource,
    Status,
    TheoremId,
    check_bipartite_theorem,
    check_clawfree_theorem,
    check_conjecture34,
    check_corollary3,
    check_if_direction,
    check_only_if,
    check_removable_vertex_lemma,
    enumerate_labeled_graphs,
    evaluate_checks,
    run_search,
    sample_random_graph,
)

from helpers import cycle, path, star, triangle_plus_singleton


class TestEqualityConditionCheckers:
    def test_if_direction_c4(self):
        assert check_if_direction(cycle(4)).status is Status.HOLDS

    def test_if_direction_triangle_singleton(self):
        assert check_if_direction(triangle_plus_singleton()).status is Status.NOT_APPLICABLE

    def test_if_direction_k1(self):
        assert check_if_direction(Graph(1)).status is Status.HOLDS

    def test_if_direction_case_two(self):
        # C5: a == (n-1)/2 == 2, and removing any vertex leaves P4 with
        # critical independence number 2, so the condition is met.
        verdict = check_if_direction(cycle(5))
        assert verdict.status is Status.HOLDS

    def test_only_if_triangle_singleton_violated(self):
        verdict = check_only_if(triangle_plus_singleton())
        assert verdict.status is Status.VIOLATED
        assert verdict.witness["alpha"] == verdict.witness["a"] == 2
        assert verdict.witness["alpha_crit"] == 1

    def test_only_if_family_violated(self):
        assert check_only_if(chorded_cycle_star(2).graph).status is Status.VIOLATED

    def test_only_if_c4_holds(self):
        assert check_only_if(cycle(4)).status is Status.HOLDS

    def test_only_if_not_applicable(self):
        from helpers import complete

        # K4 has alpha 1 but annihilation number 2.
        assert check_only_if(complete(4)).status is Status.NOT_APPLICABLE


class TestBipartiteChecker:
    def test_c4(self):
        assert check_bipartite_theorem(cycle(4)).status is Status.HOLDS

    def test_triangle(self):
        assert check_bipartite_theorem(cycle(3)).status is Status.NOT_APPLICABLE

    def test_all_bipartite_small(self):
        from annihilator.graph_core import is_bipartite

        for n in range(0, 6):
            for g in enumerate_labeled_graphs(n):
                if is_bipartite(g) is None:
                    continue
                assert check_bipartite_theorem(g).status is Status.HOLDS


class TestClawFreeCheckers:
    def test_c5_lemma(self):
        assert check_removable_vertex_lemma(cycle(5)).status is Status.HOLDS

    def test_disconnected_not_applicable(self):
        assert check_removable_vertex_lemma(triangle_plus_singleton()).status is Status.NOT_APPLICABLE

    def test_star_has_claw(self):
        assert check_clawfree_theorem(star(3)).status is Status.NOT_APPLICABLE

    def test_c5_theorem(self):
        assert check_clawfree_theorem(cycle(5)).status is Status.HOLDS

    def test_family_not_applicable(self):
        assert check_clawfree_theorem(chorded_cycle_star(2).graph).status is Status.NOT_APPLICABLE

    def test_paths_hold(self):
        for n in range(1, 8):
            assert check_clawfree_theorem(path(n)).status in (Status.HOLDS, Status.NOT_APPLICABLE)
            assert check_clawfree_theorem(path(n)).status is not Status.VIOLATED


class TestCorollaryCheckers:
    def test_family_forward_violated(self):
        for k in (2, 3):
            forward, backward = check_corollary3(chorded_cycle_star(k).graph)
            assert forward.status is Status.VIOLATED
            assert forward.witness["koenig_egervary"] is False
            assert forward.witness["alpha"] + forward.witness["mu"] == 2 * k + 3
            assert backward.status is Status.NOT_APPLICABLE

    def test_c4_both_hold(self):
        forward, backward = check_corollary3(cycle(4))
        assert forward.status is Status.HOLDS
        assert backward.status is Status.HOLDS

    def test_not_applicable_below_half(self):
        forward, backward = check_corollary3(cycle(3))
        assert forward.status is Status.NOT_APPLICABLE
        assert backward.status is Status.NOT_APPLICABLE

    def test_conjecture_family_violated(self):
        for k in (2, 4):
            assert check_conjecture34(chorded_cycle_star(k).graph).status is Status.VIOLATED

    def test_conjecture_c4_holds(self):
        assert check_conjecture34(cycle(4)).status is Status.HOLDS


class TestEvaluateChecks:
    def test_shared_facts_cover_all_ids(self):
        g = triangle_plus_singleton()
        verdicts = evaluate_checks(g, list(TheoremId))
        assert set(verdicts) == set(TheoremId)
        assert verdicts[TheoremId.THM1_ONLY_IF].status is Status.VIOLATED

    def test_corollary_pair_computed_once(self):
        facts = GraphFacts(cycle(4))
        verdicts = evaluate_checks(cycle(4), [TheoremId.COR3_FORWARD], facts)
        assert list(verdicts) == [TheoremId.COR3_FORWARD]


class TestSources:
    def test_enumeration_counts(self):
        assert sum(1 for _ in enumerate_labeled_graphs(1)) == 1
        assert sum(1 for _ in enumerate_labeled_graphs(3)) == 8
        assert sum(1 for _ in enumerate_labeled_graphs(5)) == 1024

    def test_enumeration_rejects_large(self):
        with pytest.raises(ValueError, match="graph6 corpus"):
            next(enumerate_labeled_graphs(8))

    def test_random_determinism(self):
        assert sample_random_graph(8, 0.5, 42) == sample_random_graph(8, 0.5, 42)

    def test_random_extremes(self):
        assert sample_random_graph(5, 0.0, 1).m == 0
        assert sample_random_graph(5, 1.0, 1).m == 10

    def test_random_rejects_bad_probability(self):
        with pytest.raises(ValueError):
            sample_random_graph(5, 1.5, 1)

    def test_frozen_sample(self):
        # Relabeling-stable regression: the documented seeded sample.
        assert encode_graph6(sample_random_graph(8, 0.5, 42)) == "G^pXYK"


class TestRunSearch:
    def test_minimal_counterexample(self):
        report = run_search(EnumerationSource(max_n=4), [TheoremId.THM1_ONLY_IF])
        assert report.graphs_examined == 76
        assert report.violated(TheoremId.THM1_ONLY_IF) == 4
        for graph6, theorem in report.violations:
            assert theorem == "THM1_ONLY_IF"
            assert degree_sequence(parse_graph6(graph6)) == [2, 2, 2, 0]

    def test_tallies_sum_to_examined(self):
        report = run_search(EnumerationSource(max_n=4), [TheoremId.LEMMA_IF, TheoremId.THM4_BIPARTITE])
        for tally in report.tallies.values():
            assert sum(tally.values()) == report.graphs_examined

    def test_lemma_holds_through_n5(self):
        report = run_search(EnumerationSource(max_n=5), [TheoremId.LEMMA_IF])
        assert report.violated(TheoremId.LEMMA_IF) == 0
        assert report.unexpected_violations() == 0

    def test_graph6_stream_source(self):
        lines = tuple(encode_graph6(g) for g in enumerate_labeled_graphs(4))
        report = run_search(Graph6Source(lines=lines), [TheoremId.THM1_ONLY_IF])
        assert report.graphs_examined == 64
        assert report.violated(TheoremId.THM1_ONLY_IF) == 4

    def test_family_source(self):
        source = FamilySource(
            name="chorded-cycle-star",
            parameter_sets=tuple((("k", k),) for k in range(2, 7)),
        )
        report = run_search(source, [TheoremId.COR3_FORWARD])
        assert report.graphs_examined == 5
        assert report.violated(TheoremId.COR3_FORWARD) == 5

    def test_random_source(self):
        report = run_search(RandomSource(n=8, p=0.4, count=20, seed=7), [TheoremId.LEMMA_IF])
        assert report.graphs_examined == 20
        assert report.violated(TheoremId.LEMMA_IF) == 0

    def test_deterministic_reports(self):
        a = run_search(EnumerationSource(max_n=4), [TheoremId.THM1_ONLY_IF])
        b = run_search(EnumerationSource(max_n=4), [TheoremId.THM1_ONLY_IF])
        da, db = a.to_dict(), b.to_dict()
        da.pop("wall_time"), db.pop("wall_time")
        assert da == db

    def test_parallel_matches_serial(self):
        serial = run_search(EnumerationSource(max_n=4), [TheoremId.THM1_ONLY_IF, TheoremId.LEMMA_IF])
        parallel = run_search(
            EnumerationSource(max_n=4), [TheoremId.THM1_ONLY_IF, TheoremId.LEMMA_IF], jobs=2
        )
        ds, dp = serial.to_dict(), parallel.to_dict()
        ds.pop("wall_time"), dp.pop("wall_time")
        assert ds == dp

    def test_early_exit_stops_at_first_violation(self):
        report = run_search(
            EnumerationSource(max_n=4), [TheoremId.THM1_ONLY_IF], early_exit=True
        )
        assert len(report.violations) == 1
        assert report.graphs_examined < 76

    def test_solver_limit_becomes_error_tally(self, monkeypatch):
        monkeypatch.setenv("ANNIHILATOR_SOLVER_LIMIT", "3")
        report = run_search(EnumerationSource(max_n=4, min_n=4), [TheoremId.LEMMA_IF])
        # Only graphs whose hypothesis check reaches the exact solver error out.
        assert report.errors == 59
        assert report.tallies["LEMMA_IF"]["Error"] == 59
        assert sum(report.tallies["LEMMA_IF"].values()) == report.graphs_examined
