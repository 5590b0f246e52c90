import random

import pytest

from hoffgraph import (
    Graph,
    build_graph,
    complement,
    complete,
    complete_multipartite,
    contains_induced,
    cycle,
    disjoint_union,
    induced_embedding,
    induced_subgraph,
    is_connected,
    k_tilde,
    named_graph,
    petersen,
    regularity_profile,
    rook_3x3,
    star,
    triangular_5,
)
from conftest import brute_profile, random_graph


class TestBuildGraph:
    def test_triangle(self):
        g = build_graph(3, [(0, 1), (1, 2), (0, 2)])
        assert g.edges() == ((0, 1), (0, 2), (1, 2))
        assert g.degree_sequence() == (2, 2, 2)

    def test_single_vertex(self):
        g = build_graph(1, [])
        assert g.n == 1 and g.edges() == ()

    def test_cycle_by_edges(self):
        g = build_graph(5, [(i, (i + 1) % 5) for i in range(5)])
        assert g.degree_sequence() == (2, 2, 2, 2, 2)
        assert g == cycle(5)

    def test_duplicate_edges_collapse(self):
        g = build_graph(3, [(0, 1), (1, 0), (0, 1)])
        assert g.edge_count() == 1

    def test_out_of_range_endpoint(self):
        with pytest.raises(ValueError, match=r"\(1, 3\)"):
            build_graph(3, [(1, 3)])

    def test_self_loop(self):
        with pytest.raises(ValueError, match=r"self-loop.*\(2, 2\)"):
            build_graph(3, [(2, 2)])

    def test_negative_order(self):
        with pytest.raises(ValueError):
            Graph(-1)


class TestNamedFamilies:
    def test_k_tilde_1_is_path(self):
        g = k_tilde(1)
        assert g.n == 3
        assert g.degree_sequence() == (1, 1, 2)
        assert is_connected(g)

    def test_star_4(self):
        assert star(4).degree_sequence() == (1, 1, 1, 1, 4)

    def test_k_tilde_4_degrees(self):
        # direct count: clique vertex has 2m-1 clique neighbors, plus the
        # apex for the first m of them; the apex has degree m
        g = k_tilde(4)
        assert g.n == 9
        assert [g.degree(v) for v in range(9)] == [8, 8, 8, 8, 7, 7, 7, 7, 4]

    def test_petersen_shape(self):
        g = petersen()
        assert g.n == 10 and g.edge_count() == 15
        assert g.degree_sequence() == (3,) * 10

    def test_rook_is_srg_9_4_1_2(self):
        prof = regularity_profile(rook_3x3())
        assert (prof.k, prof.srg_a, prof.coedge_c) == (4, 1, 2)

    def test_triangular_5_is_srg_10_6_3_4(self):
        prof = regularity_profile(triangular_5())
        assert (prof.k, prof.srg_a, prof.coedge_c) == (6, 3, 4)

    def test_triangular_5_is_petersen_complement(self):
        comp = complement(triangular_5())
        assert induced_embedding(comp, petersen()) is not None

    def test_complete_multipartite(self):
        g = complete_multipartite([2, 2, 2])
        assert g.degree_sequence() == (4,) * 6

    def test_dispatcher(self):
        assert named_graph("complete", n=4) == complete(4)
        assert named_graph("k_tilde", m=2) == k_tilde(2)
        assert named_graph("petersen") == petersen()

    def test_dispatcher_unknown_family(self):
        with pytest.raises(ValueError, match="unknown family"):
            named_graph("moebius")

    def test_dispatcher_wrong_params(self):
        with pytest.raises(ValueError, match="missing"):
            named_graph("complete")
        with pytest.raises(ValueError, match="unexpected"):
            named_graph("petersen", n=5)

    def test_nonpositive_parameters(self):
        for family, kwargs in [
            ("complete", {"n": 0}),
            ("star", {"t": 0}),
            ("k_tilde", {"m": -1}),
            ("complete_multipartite", {"parts": [2, 0]}),
        ]:
            with pytest.raises(ValueError):
                named_graph(family, **kwargs)


class TestComplement:
    def test_k5_plus_isolated_gives_star(self):
        g = disjoint_union(complete(5), Graph(1))
        comp = complement(g)
        # the isolated vertex becomes a dominating star center
        assert comp.edges() == tuple((i, 5) for i in range(5))

    def test_complete_gives_empty(self):
        assert complement(complete(6)).edge_count() == 0

    def test_c5_self_complementary(self):
        comp = complement(cycle(5))
        assert induced_embedding(comp, cycle(5)) is not None

    def test_involution(self):
        rng = random.Random(7)
        for _ in range(25):
            g = random_graph(rng, rng.randint(0, 12))
            assert complement(complement(g)) == g


class TestInducedSubgraph:
    def test_k4_any_three(self):
        assert induced_subgraph(complete(4), [0, 2, 3]) == complete(3)

    def test_petersen_outer_ring_is_c5(self):
        sub = induced_subgraph(petersen(), range(5))
        assert sub == cycle(5)

    def test_empty_subset(self):
        assert induced_subgraph(petersen(), []).n == 0

    def test_reindexing_is_ascending(self):
        g = build_graph(5, [(1, 3), (3, 4)])
        sub = induced_subgraph(g, [4, 1, 3])
        # 1 -> 0, 3 -> 1, 4 -> 2
        assert sub.edges() == ((0, 1), (1, 2))

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            induced_subgraph(complete(3), [0, 5])


class TestRegularityProfile:
    def test_petersen(self):
        prof = regularity_profile(petersen())
        assert prof.is_regular and prof.k == 3
        assert prof.sesqui_c == 1 and prof.srg_a == 0 and prof.coedge_c == 1
        assert prof.diameter_at_most_2 and not prof.vacuous_c
        assert prof.is_strongly_regular

    def test_c5(self):
        prof = regularity_profile(cycle(5))
        assert prof.k == 2 and prof.sesqui_c == 1

    def test_complete_is_vacuous(self):
        for n in range(1, 7):
            prof = regularity_profile(complete(n))
            assert prof.vacuous_c and prof.sesqui_c is None

    def test_disconnected_distance2_within_components_only(self):
        # two triangles: no distance-2 pair anywhere
        g = disjoint_union(complete(3), complete(3))
        prof = regularity_profile(g)
        assert prof.vacuous_c
        assert not prof.diameter_at_most_2

    def test_srg_consistency_invariant(self):
        # regular + connected + both constants present forces sesqui_c = coedge_c
        for g in (petersen(), rook_3x3(), triangular_5(), complete_multipartite([2] * 3)):
            prof = regularity_profile(g)
            if prof.is_strongly_regular and is_connected(g) and not prof.vacuous_c:
                assert prof.sesqui_c == prof.coedge_c

    def test_matches_brute_force_oracle(self):
        rng = random.Random(11)
        for _ in range(60):
            g = random_graph(rng, rng.randint(1, 14), rng.choice([0.2, 0.5, 0.8]))
            assert regularity_profile(g).to_dict() == brute_profile(g)


class TestContainsInduced:
    def test_c5_has_no_triangle(self):
        assert not contains_induced(cycle(5), complete(3))

    def test_petersen_has_p3(self):
        p3 = build_graph(3, [(0, 1), (1, 2)])
        assert contains_induced(petersen(), p3)

    def test_k_tilde_4_contains_k_tilde_2(self):
        assert contains_induced(k_tilde(2), k_tilde(1))

    def test_pattern_larger_than_host(self):
        assert not contains_induced(complete(3), complete(4))

    def test_empty_pattern_embeds(self):
        assert induced_embedding(complete(3), Graph(0)) == ()

    def test_witness_is_valid_embedding(self):
        host = petersen()
        pattern = cycle(5)
        witness = induced_embedding(host, pattern)
        assert witness is not None and len(set(witness)) == 5
        for u in range(5):
            for v in range(u + 1, 5):
                assert pattern.adjacent(u, v) == host.adjacent(witness[u], witness[v])

    def test_monotone_under_vertex_deletion(self):
        rng = random.Random(23)
        for _ in range(30):
            g = random_graph(rng, rng.randint(4, 10))
            pattern = random_graph(rng, rng.randint(1, 3))
            s = rng.sample(range(g.n), rng.randint(pattern.n, g.n))
            if contains_induced(induced_subgraph(g, s), pattern):
                assert contains_induced(g, pattern)

    def test_complete_host_rejects_apex_pattern_fast(self):
        # the apex of the half-attached clique needs non-neighbors
        assert not contains_induced(complete(50), k_tilde(2))


class TestConnectivity:
    def test_connected_cases(self):
        assert is_connected(petersen())
        assert is_connected(Graph(1))
        assert is_connected(Graph(0))
        assert not is_connected(disjoint_union(complete(3), complete(2)))
