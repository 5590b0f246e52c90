import math
import random

import pytest

from hoffgraph import (
    Graph,
    associated_hoffman_graph,
    build_graph,
    c_lambda_estimate,
    catalog,
    claim1_diagnostics,
    claim2_check,
    complete,
    complete_multipartite,
    corpus_graphs,
    corpus_run,
    cycle,
    disjoint_union,
    expand,
    forbidden_family_check,
    lambda_min,
    lambda_min_hoffman,
    lemma_isolated_vertex_check,
    m_prime,
    neumaier_check,
    petersen,
    quasi_clique_system,
    ramsey_upper,
    regularity_profile,
    rook_3x3,
    star,
    t_prime,
    theorem5_check,
    triangular_5,
)
from hoffgraph.quasiclique import QuasiCliqueSystem


class TestConstants:
    def test_t_prime_values(self):
        assert t_prime(1) == 2
        assert t_prime(2) == 5
        assert t_prime(3) == 10
        assert t_prime(6) == 37

    def test_t_prime_defining_property(self):
        for lam in range(1, 7):
            t = t_prime(lam)
            assert lambda_min(star(t)) < -lam - 1e-7
            assert lambda_min(star(t - 1)) >= -lam - 1e-7

    def test_t_prime_rejects_bad_lambda(self):
        with pytest.raises(ValueError):
            t_prime(0)
        with pytest.raises(ValueError):
            t_prime(2.5)

    def test_m_prime_values(self):
        # dual-oracle scan: full eigensolve and quotient root must agree;
        # the scan itself is the authority for the lambda = 1 edge case
        assert m_prime(1) == 1
        assert m_prime(2) == 4
        assert m_prime(3) == 12

    def test_m_prime_non_integer_lambdas(self):
        assert m_prime(1.5) == 2
        assert m_prime(2.5) == 7

    def test_m_prime_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            m_prime(0)

    def test_ramsey_upper(self):
        assert ramsey_upper(3, 3) == 6
        for t in (1, 2, 7, 20):
            assert ramsey_upper(2, t) == t
        assert ramsey_upper(4, 4) == math.comb(6, 3)
        with pytest.raises(ValueError):
            ramsey_upper(0, 3)

    def test_c_lambda_estimate_composition(self):
        t = 5  # lambda = 2
        inner = 2 * (ramsey_upper(9, t) - 1) + 1
        assert c_lambda_estimate(2, 9) == ramsey_upper(inner, t)
        assert c_lambda_estimate(2, 9) > 10**9
        with pytest.raises(ValueError):
            c_lambda_estimate(1, 9)
        with pytest.raises(ValueError):
            c_lambda_estimate(2, 0)


class TestIsolatedVertexCone:
    def test_exhaustive_lambda_2(self):
        report = lemma_isolated_vertex_check(2)
        assert len(report.entries) == 34
        assert report.all_pass
        assert all(margin > 0 for _, _, margin in report.entries)

    def test_extremal_matches_clique_plus_isolated(self):
        report = lemma_isolated_vertex_check(2)
        assert report.extremal_is_reference
        assert abs(report.reference[1] - (-1 - math.sqrt(5))) < 1e-9

    def test_empty_graph_cone_value(self):
        # the all-isolated 6-vertex graph: special matrix -J has eigenvalue -6
        e = catalog("q_of", Graph(6))
        assert abs(lambda_min_hoffman(e.hoffman) + 6.0) < 1e-9

    def test_unsupported_lambda(self):
        with pytest.raises(ValueError, match="lambda = 2"):
            lemma_isolated_vertex_check(3)

    def test_order_cap(self):
        with pytest.raises(ValueError, match="cap"):
            lemma_isolated_vertex_check(2, order_cap=5)


class TestForbiddenFamily:
    def test_single_cone_has_none(self):
        assoc = associated_hoffman_graph(complete(50), 2, 25)
        report = forbidden_family_check(assoc, 2)
        assert [name for name, _ in report.found] == ["h_t(3)", "h_t1(2)", "c_n(3)"]
        assert not report.any_found()

    def test_triple_expansion_contains_triple_fan(self):
        g = expand(catalog("h_t", 3).hoffman, 30)
        assoc = associated_hoffman_graph(g, 2, 25)
        report = forbidden_family_check(assoc, 2)
        found = dict(report.found)
        witness = found["h_t(3)"]
        assert witness is not None
        # the witness's slim vertex is the shared center (vertex 0)
        assert witness[0] == 0
        assert found["h_t1(2)"] is None and found["c_n(3)"] is None

    def test_family_member_finds_itself(self):
        c3 = catalog("c_n", 3).hoffman
        report = forbidden_family_check(c3, 2)
        assert dict(report.found)["c_n(3)"] is not None

    def test_lambda_validation(self):
        with pytest.raises(ValueError):
            forbidden_family_check(catalog("c_n", 3).hoffman, 1)


class TestClaims:
    def test_claim1_complete_graph(self):
        g = complete(50)
        qcs = quasi_clique_system(g, 2, 25)
        report = claim1_diagnostics(g, qcs, 2)
        assert not report.any_flag()
        for diag in report.per_vertex:
            assert diag.containing_classes == (0,)
            assert diag.max_non_neighbors_inside == 0
            assert diag.max_neighbors_into_other is None

    def test_claim1_center_at_membership_bound(self):
        g = expand(catalog("h_t", 2).hoffman, 30)
        qcs = quasi_clique_system(g, 2, 25)
        report = claim1_diagnostics(g, qcs, 2)
        center = report.per_vertex[0]
        assert len(center.containing_classes) == 2 == report.membership_bound
        assert not center.flags

    def test_claim1_disjoint_components(self):
        g = disjoint_union(complete(30), complete(30))
        qcs = quasi_clique_system(g, 2, 25)
        report = claim1_diagnostics(g, qcs, 2)
        for diag in report.per_vertex:
            assert len(diag.containing_classes) == 1
            assert diag.max_neighbors_into_other == 0

    def test_claim1_flags_exceedance(self):
        # four blocks through one center: the center lies in 4 > 2 classes
        g = expand(catalog("h_t", 4).hoffman, 30)
        qcs = quasi_clique_system(g, 2, 25)
        report = claim1_diagnostics(g, qcs, 2)
        center = report.per_vertex[0]
        assert len(center.containing_classes) == 4
        assert any("memberships" in f for f in center.flags)

    def test_claim2_true_systems(self):
        g = complete(50)
        assert claim2_check(quasi_clique_system(g, 2, 25), g) == [(True, None)]
        g = expand(catalog("h_t", 2).hoffman, 30)
        results = claim2_check(quasi_clique_system(g, 2, 25), g)
        assert results == [(True, None), (True, None)]

    def test_claim2_artificial_violation(self):
        g = cycle(50)
        fake = QuasiCliqueSystem(
            m=2, n=25, classes=(((0, 1, 2),),), quasi_cliques=((0, 1, 2),),
            forbidden_ok=True,
        )
        results = claim2_check(fake, g)
        assert results == [(False, (0, 2))]


class TestNeumaier:
    def test_petersen_bound_branch(self):
        report = neumaier_check(petersen(), subject="petersen")
        assert report.lam == 2
        assert not report.is_complete_multipartite
        assert report.c == 1 and report.c_bound == 8 and report.margin == 7
        assert report.outcome == "c_bound"

    def test_octahedron_multipartite_branch(self):
        report = neumaier_check(complete_multipartite([2, 2, 2]))
        assert report.is_complete_multipartite and report.outcome == "multipartite"

    def test_triangular_5(self):
        report = neumaier_check(triangular_5())
        assert report.lam == 2 and report.c == 4 and report.outcome == "c_bound"

    def test_c5_rejected_non_integer_eigenvalue(self):
        with pytest.raises(ValueError, match="integer"):
            neumaier_check(cycle(5))

    def test_non_srg_rejected(self):
        with pytest.raises(ValueError, match="strongly regular"):
            neumaier_check(build_graph(4, [(0, 1), (1, 2), (2, 3)]))

    def test_disconnected_rejected(self):
        with pytest.raises(ValueError, match="connected"):
            neumaier_check(disjoint_union(complete(4), complete(4)))


class TestTheorem5:
    def test_petersen_branch_i(self):
        report = theorem5_check(petersen(), subject="petersen")
        assert report.lam == 2 and report.outcome == "branch_i"
        assert report.margins["branch_i"] == 3.0
        assert report.margins["branch_ii"] == pytest.approx(1.25 - 6)

    def test_k333_both(self):
        report = theorem5_check(complete_multipartite([3, 3, 3]))
        assert report.lam == 3 and report.outcome == "both"
        assert report.margins["branch_i"] == 18 - 6
        assert report.margins["branch_ii"] == pytest.approx(0.0)

    def test_c8_branch_i_only(self):
        report = theorem5_check(cycle(8))
        assert report.lam == 2 and report.outcome == "branch_i"
        assert report.margins["branch_ii"] == pytest.approx(1.25 - 5)

    def test_c5_lambda_inferred_as_2(self):
        report = theorem5_check(cycle(5))
        assert report.lam == 2 and report.outcome == "branch_i"

    def test_rook_branch_i_latin_square_value(self):
        report = theorem5_check(rook_3x3())
        assert report.lam == 2 and report.outcome == "branch_i"
        # Latin square graphs carry c = lambda(lambda - 1)
        assert report.profile.sesqui_c == 2 == report.lam * (report.lam - 1)

    def test_vacuous_rejected_distinctly(self):
        with pytest.raises(ValueError, match="vacuous"):
            theorem5_check(complete(4))

    def test_non_sesqui_rejected(self):
        with pytest.raises(ValueError, match="sesqui"):
            theorem5_check(star(3))

    def test_override_below_two_rejected(self):
        with pytest.raises(ValueError, match=">= 2"):
            theorem5_check(petersen(), lambda_override=1)

    def test_override_above_keeps_hypotheses(self):
        report = theorem5_check(petersen(), lambda_override=3)
        assert report.outcome == "branch_i" and report.lam == 3

    def test_override_below_spectral_floor_is_inconclusive(self):
        report = theorem5_check(complete_multipartite([3, 3, 3]), lambda_override=2)
        assert report.outcome == "inconclusive_small_k"
        assert any("hypothesis" in w for w in report.warnings)

    def test_violated_carries_desk_scale_note(self):
        # two disjoint cocktail-party graphs: k = 10, lambda_min = -2,
        # c = 10 > 4 and v-k-1 = 13 > 1.25, so the disjunction fails; with
        # k nowhere near the degree threshold this is not a counterexample
        block = complete_multipartite([2] * 6)
        g = disjoint_union(block, block)
        prof = regularity_profile(g)
        assert prof.is_regular and prof.k == 10 and prof.sesqui_c == 10
        report = theorem5_check(g)
        assert report.lam == 2
        assert report.outcome == "violated"
        assert any("desk scale" in w for w in report.warnings)


class TestCorpus:
    def test_subject_list_and_determinism(self):
        names = [name for name, _ in corpus_graphs()]
        assert names[:7] == [
            "petersen",
            "triangular(5)",
            "cycle(5)",
            "cycle(8)",
            "complete_multipartite(3,3,3)",
            "complete_multipartite(2,2,2)",
            "rook(3,3)",
        ]
        assert len(names) == 17
        assert corpus_run() == corpus_run()

    def test_sesqui_subjects_land_in_branches(self):
        by_subject = {r.subject: r for r in corpus_run()}
        assert by_subject["petersen"].outcome == "branch_i"
        assert by_subject["complete_multipartite(3,3,3)"].outcome == "both"
        assert by_subject["complete_multipartite(2,2,2)"].outcome == "both"
        assert by_subject["rook(3,3)"].outcome == "branch_i"
        assert by_subject["cycle(5)"].outcome == "branch_i"
        assert by_subject["cycle(8)"].outcome == "branch_i"
        assert by_subject["triangular(5)"].outcome == "branch_i"

    def test_srg_subjects_carry_neumaier(self):
        by_subject = {r.subject: r for r in corpus_run()}
        for name in ("petersen", "triangular(5)", "rook(3,3)",
                     "complete_multipartite(3,3,3)", "complete_multipartite(2,2,2)"):
            nm = by_subject[name].neumaier
            assert nm is not None and nm.outcome in ("multipartite", "c_bound")
        # C5 is strongly regular but its eigenvalue is irrational
        assert by_subject["cycle(5)"].neumaier is None
        assert any("neumaier" in w for w in by_subject["cycle(5)"].warnings)

    def test_expansions_are_inconclusive_with_reason(self):
        by_subject = {r.subject: r for r in corpus_run()}
        for name, report in by_subject.items():
            if name.startswith("expand"):
                assert report.outcome == "inconclusive_small_k"
                assert any("theorem5" in w for w in report.warnings)

    def test_no_violations_on_shipped_corpus(self):
        for report in corpus_run():
            assert report.outcome != "violated"
