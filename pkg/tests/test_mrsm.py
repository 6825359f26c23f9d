import pytest

from geodetic import (
    ColoredMultigraph,
    UncoverableColorError,
    ValidationError,
    approx_geodetic_via_mrsm,
    build_geodetic_mrsm,
    is_geodetic_set,
    min_geodetic_set,
    mrsm_dump,
    rainbow_exact,
    rainbow_greedy,
)
from geodetic.generators import (
    complete_graph,
    cycle_graph,
    labeled_connected_graphs,
    path_graph,
    random_connected_graph,
    star_graph,
)
from oracles import brute_min_rainbow_size, is_rainbow_cover, shortest_path_union


class TestBuild:
    def test_p3_has_seven_edges(self):
        cm = build_geodetic_mrsm(path_graph(3))
        groups = {}
        for v, w, c in cm.edges:
            groups.setdefault((v, w), set()).add(c)
        assert groups == {
            (0, 1): {0, 1},
            (1, 2): {1, 2},
            (0, 2): {0, 1, 2},
        }
        assert len(cm.edges) == 7

    def test_k2(self):
        cm = build_geodetic_mrsm(path_graph(2))
        assert set(cm.edges) == {(0, 1, 0), (0, 1, 1)}

    def test_c4_antipodal_pair_carries_all_colors(self):
        cm = build_geodetic_mrsm(cycle_graph(4))
        colors = {c for v, w, c in cm.edges if (v, w) == (0, 2)}
        assert colors == {0, 1, 2, 3}

    def test_single_vertex_rejected(self):
        with pytest.raises(ValidationError):
            build_geodetic_mrsm(complete_graph(1))

    def test_edge_count_matches_interval_sizes(self):
        for seed in range(15):
            g = random_connected_graph(7, seed)
            cm = build_geodetic_mrsm(g)
            expected = sum(
                len(shortest_path_union(g, u, v))
                for u in range(g.n)
                for v in range(u + 1, g.n)
            )
            assert len(cm.edges) == expected
            assert cm.color_universe == frozenset(range(g.n))

    def test_constructor_validates(self):
        with pytest.raises(ValidationError):
            ColoredMultigraph(3, ((1, 1, 0),), frozenset({0}))
        with pytest.raises(ValidationError):
            ColoredMultigraph(3, ((0, 1, 0), (0, 1, 0)), frozenset({0}))
        with pytest.raises(ValidationError):
            ColoredMultigraph(3, ((0, 1, 5),), frozenset({0}))


class TestRainbowExact:
    def test_p3_instance(self):
        assert rainbow_exact(build_geodetic_mrsm(path_graph(3))) == {0, 2}

    def test_star_needs_all_leaves(self):
        assert len(rainbow_exact(build_geodetic_mrsm(star_graph(3)))) == 3

    def test_k2_instance(self):
        assert rainbow_exact(build_geodetic_mrsm(path_graph(2))) == {0, 1}

    def test_uncoverable_color(self):
        cm = ColoredMultigraph(3, ((0, 1, 0),), frozenset({0, 2}))
        with pytest.raises(UncoverableColorError):
            rainbow_exact(cm)

    def test_matches_brute_force(self):
        for seed in range(15):
            g = random_connected_graph(6, 100 + seed)
            cm = build_geodetic_mrsm(g)
            assert len(rainbow_exact(cm)) == brute_min_rainbow_size(cm)

    def test_budget_error(self):
        from geodetic import BudgetExceededError, Limits

        cm = build_geodetic_mrsm(cycle_graph(5))
        with pytest.raises(BudgetExceededError):
            rainbow_exact(cm, Limits(max_nodes=1))

    def test_equals_geodetic_number_small(self):
        for n in range(2, 6):
            for g in labeled_connected_graphs(n):
                cm = build_geodetic_mrsm(g)
                assert len(rainbow_exact(cm)) == min_geodetic_set(g).size


class TestRainbowGreedy:
    def test_p3_seed_pair_covers_everything(self):
        assert rainbow_greedy(build_geodetic_mrsm(path_graph(3))) == {0, 2}

    def test_k2(self):
        assert rainbow_greedy(build_geodetic_mrsm(path_graph(2))) == {0, 1}

    def test_c4_takes_an_antipodal_pair(self):
        got = rainbow_greedy(build_geodetic_mrsm(cycle_graph(4)))
        assert got in ({0, 2}, {1, 3})

    def test_deterministic(self):
        for seed in range(10):
            cm = build_geodetic_mrsm(random_connected_graph(9, 200 + seed))
            assert rainbow_greedy(cm) == rainbow_greedy(cm)

    def test_always_covers(self):
        for seed in range(25):
            cm = build_geodetic_mrsm(random_connected_graph(10, 300 + seed))
            assert is_rainbow_cover(cm, rainbow_greedy(cm))

    def test_stall_breaking_pair_step(self):
        # Color 1 lives only on the far edge (2,3); no single added vertex
        # gains anything after seeding on (0,1).
        cm = ColoredMultigraph(
            4, ((0, 1, 0), (2, 3, 1)), frozenset({0, 1})
        )
        got = rainbow_greedy(cm)
        assert is_rainbow_cover(cm, got)
        assert got == {0, 1, 2, 3}


class TestApproxPipeline:
    def test_p3_exact_equals_optimum(self):
        assert approx_geodetic_via_mrsm(path_graph(3), "exact").size == 2

    def test_c6_greedy(self):
        r = approx_geodetic_via_mrsm(cycle_graph(6), "greedy")
        assert r.size == 2
        assert is_geodetic_set(cycle_graph(6), r.witness)

    def test_k4_exact(self):
        assert approx_geodetic_via_mrsm(complete_graph(4), "exact").size == 4

    def test_single_vertex_short_circuit(self):
        assert approx_geodetic_via_mrsm(complete_graph(1), "greedy").witness == {0}

    def test_bad_mode(self):
        with pytest.raises(ValidationError):
            approx_geodetic_via_mrsm(path_graph(3), "anneal")

    def test_greedy_output_always_geodetic(self):
        for seed in range(40):
            g = random_connected_graph(12 + seed % 29, 400 + seed)
            r = approx_geodetic_via_mrsm(g, "greedy")
            assert is_geodetic_set(g, r.witness)


def test_dump_format():
    out = mrsm_dump(build_geodetic_mrsm(path_graph(2)))
    assert out == "colors 2\n0 1 0\n0 1 1\n"
