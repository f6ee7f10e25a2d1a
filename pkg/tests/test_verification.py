"""
    Tests for the verification suites
"""

import pytest

from heterochromatic.verification import (
    DEFAULT_SIZES,
    SUITES,
    Verification,
    check_gamma_tau,
    check_rainbow_basis,
    check_transversal,
    named_graph,
    named_matroid,
)


class TestSuites:
    """
        Every suite on desk-sized inputs, in the current process.
    """

    @pytest.mark.parametrize(
        "suite, options, records",
        [
            ("lemma3", {"sizes": [4, 5], "instances": 2}, 4),
            ("lemma4", {"sizes": [4, 5], "instances": 2}, 4),
            ("urrutia", {"sizes": [5], "instances": 2}, 2),
            ("thm5", {"sizes": [4, 5], "instances": 1, "trials": 5}, 2),
            ("thm6", {"sizes": [5], "instances": 2, "trials": 5}, 2),
            ("thm7", {"matroids": ["U_2_4", "K4"], "exhaustive": True}, 2),
            ("jiang-west", {"sizes": [4]}, 1),
            ("gamma-tau", {"graphs": ["P4", "C4"], "sizes": [4], "instances": 2}, 4),
            ("bound", {"sizes": [4], "instances": 2}, 2),
            ("corollary", {"matroids": ["U_2_4", "GF2_3"]}, 2),
            ("oracle", {"sizes": [5], "instances": 3}, 3),
        ],
    )
    def test_suite_passes(self, suite, options, records):
        report = Verification().run(suite, debug=True, **options)
        assert report.suite == suite
        assert len(report) == records
        assert report.ok, report.counterexamples
        assert report.counterexamples == []

    @pytest.mark.slow
    @pytest.mark.parametrize("suite", ["lemma3", "lemma4", "urrutia"])
    def test_default_sizes(self, suite):
        report = Verification().run(suite, instances=1, debug=True)
        assert len(report) == len(DEFAULT_SIZES[suite])
        assert report[len(report) - 1].descriptor.split()[1] == f"n={DEFAULT_SIZES[suite][-1]}"
        assert report.ok

    def test_all_suites_listed(self):
        assert set(SUITES) == {
            "lemma3",
            "lemma4",
            "urrutia",
            "thm5",
            "thm6",
            "thm7",
            "jiang-west",
            "gamma-tau",
            "bound",
            "corollary",
            "oracle",
        }

    def test_exhaustive_counts(self):
        report = Verification().run("thm7", matroids=["U_2_4", "K4"], exhaustive=True, debug=True)
        # S(4, 2) and S(6, 3) canonical colourings
        assert [record.attempted for record in report] == [7, 90]

    def test_trials_plus_blocker(self):
        report = Verification().run("thm5", sizes=[4], instances=1, trials=6, debug=True)
        assert report.attempted == 7

    def test_unknown_suite(self):
        with pytest.raises(ValueError):
            Verification().run("lemma9")

    def test_incorrect_seed(self):
        with pytest.raises(TypeError):
            Verification().run("oracle", sizes=[4], seed="1")
        with pytest.raises(TypeError):
            Verification().run("oracle", sizes=[4], seed=1.0)


class TestReproducibility:
    def test_reproduce(self):
        first = Verification().run("lemma4", sizes=[5], instances=3, seed=4, debug=True)
        second = Verification().run("lemma4", sizes=[5], instances=3, seed=4, debug=True)
        assert first.seeds == second.seeds
        assert [r.descriptor for r in first] == [r.descriptor for r in second]
        assert [r.attempted for r in first] == [r.attempted for r in second]

    def test_reproduce_fail(self):
        first = Verification().run("lemma4", sizes=[5], instances=3, seed=4, debug=True)
        second = Verification().run("lemma4", sizes=[5], instances=3, seed=5, debug=True)
        assert first.seeds != second.seeds

    def test_pool_matches_map(self):
        serial = Verification().run("lemma3", sizes=[4, 5], instances=2, seed=2, debug=True)
        pooled = Verification().run("lemma3", sizes=[4, 5], instances=2, seed=2, n_procs=2)
        assert [r.descriptor for r in serial] == [r.descriptor for r in pooled]
        assert pooled.ok


class TestChecks:
    def test_transversal(self):
        record = check_transversal("convex", 5, 0)
        assert record.attempted == 55
        assert record.passed == 55
        assert record.descriptor == "convex n=5 seed=0"

    def test_rainbow_basis_random(self):
        record = check_rainbow_basis("U_3_5", 1, 10, False)
        assert record.attempted == 10
        assert record.passed == 10
        assert "tau=4 k=3" in record.descriptor

    def test_gamma_tau_named(self):
        record = check_gamma_tau("K_2_3", 0, 0)
        assert record.passed == record.attempted == 1


class TestNames:
    @pytest.mark.parametrize(
        "name, vertices, edges",
        [("K4", 4, 6), ("P5", 5, 4), ("C5", 5, 5), ("S3", 4, 3), ("K_2_3", 5, 6)],
    )
    def test_graphs(self, name, vertices, edges):
        graph = named_graph(name)
        assert graph.vertex_count == vertices
        assert len(graph.edges) == edges

    def test_unknown_graph(self):
        with pytest.raises(ValueError):
            named_graph("X9")

    @pytest.mark.parametrize(
        "name, ground, rank", [("GF2_3", 3, 2), ("U_3_5", 5, 3), ("K4", 6, 3), ("C4", 4, 3)]
    )
    def test_matroids(self, name, ground, rank):
        matroid = named_matroid(name)
        assert matroid.ground_size == ground
        assert matroid.rank == rank
