"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
summary lines.  Criterion coverage choices:

* Criteria 1-3 sweep the full labeled set of connected graphs on up to 6
  vertices (27,476 graphs) plus a seeded sample of 7-vertex graphs.
* Criterion 6 checks the geodetic / 2-domination biconditional over every
  subset of every connected triangle-free labeled graph on up to 6 vertices.
  The two degenerate instances where the input graph is complete (K1 with
  S={0}, K2 with S={0,1}) provably violate the biconditional and are carved
  out here; the companion xfail test documents them.
"""

from __future__ import annotations

import gc
import random
import time
from itertools import combinations

import pytest

from geodetic import (
    Graph,
    bfs_all_pairs,
    build_geodetic_mrsm,
    canonical_edge,
    check_property,
    corner_paths,
    corner_vertices,
    grid_3approx,
    is_geodetic_set,
    line_graph,
    min_geodetic_decomposed,
    min_geodetic_set,
    min_property_set,
    apex_pair_gadget,
    normalize_line_geodetic,
    pendant_gadget,
    planar_gadget,
    rainbow_exact,
    rainbow_greedy,
    universal_vertex_gadget,
    RotationSystem,
)
from geodetic.gadgets import find_triangle
from geodetic.generators import (
    cycle_graph,
    labeled_connected_graphs,
    path_graph,
    random_connected_graph,
    random_polyomino,
    rect_grid,
)


def pair_masks(g, oracle):
    """Coverage bitmasks straight from the distance-sum definition."""
    n = g.n
    pm = [[0] * n for _ in range(n)]
    dist = oracle.dist
    for u in range(n):
        pm[u][u] = 1 << u
        row_u = dist[u]
        for v in range(u + 1, n):
            duv = row_u[v]
            row_v = dist[v]
            m = 0
            for x in range(n):
                if row_u[x] + row_v[x] == duv:
                    m |= 1 << x
            pm[u][v] = pm[v][u] = m
    return pm


def covers_all(pm, full, members):
    cover = 0
    for i, u in enumerate(members):
        row = pm[u]
        cover |= row[u]
        for v in members[i + 1 :]:
            cover |= row[v]
    return cover == full


@pytest.fixture(scope="session")
def catalog():
    """One record per catalog graph: sizes from all four solution routes."""
    records = []

    def add(g):
        flat = min_geodetic_set(g).size
        dec = min_geodetic_decomposed(g).size
        if g.n >= 2:
            cm = build_geodetic_mrsm(g)
            rainbow = len(rainbow_exact(cm))
            greedy_set = rainbow_greedy(cm)
            greedy = len(greedy_set)
            greedy_ok = is_geodetic_set(g, greedy_set)
        else:
            rainbow, greedy, greedy_ok = 1, 1, True
        records.append((g.n, flat, dec, rainbow, greedy, greedy_ok))

    for n in range(1, 7):
        for g in labeled_connected_graphs(n):
            add(g)
    for seed in range(150):
        add(random_connected_graph(7, 10_000 + seed))
    return records


@pytest.fixture(scope="session")
def solid_instances():
    """Rectangles and seeded hole-free polyominoes with at most 20 vertices."""
    out = []
    for w in range(1, 21):
        for h in range(w, 21):
            if 2 <= w * h <= 20:
                g, emb = rect_grid(w, h)
                out.append((f"rect{w}x{h}", g, emb))
    seed = 0
    polys = 0
    while polys < 30:
        g, emb = random_polyomino(3 + seed % 6, seed)
        seed += 1
        if g.n <= 20:
            out.append((f"poly{seed - 1}", g, emb))
            polys += 1
    return out


def test_criterion_1_oracle_self_consistency(catalog):
    bad = [r for r in catalog if r[1] != r[2]]
    assert not bad, bad[:5]
    print(
        f"\n[criterion 1] PASS: flat and decomposed optima agree on all "
        f"{len(catalog)} catalog graphs (labeled n<=6 plus seeded n=7 sample)"
    )


def test_criterion_2_mrsm_equivalence(catalog):
    bad = [r for r in catalog if r[0] >= 2 and r[3] != r[1]]
    assert not bad, bad[:5]
    print(
        f"\n[criterion 2] PASS: minimum colorful cover equals the geodetic "
        f"number on all {sum(1 for r in catalog if r[0] >= 2)} instances"
    )


def test_criterion_3_greedy_validity_and_ratios(catalog):
    for seed in range(200):
        n = 5 + (seed * 7) % 36  # spreads over 5..40
        g = random_connected_graph(n, 20_000 + seed)
        cm = build_geodetic_mrsm(g)
        witness = rainbow_greedy(cm)
        assert is_geodetic_set(g, witness), (n, seed)

    ratios = [r[4] / r[1] for r in catalog if r[0] >= 2]
    assert all(r[5] for r in catalog), "greedy returned a non-geodetic set"
    for (n, flat, _, _, greedy, _) in catalog:
        assert greedy / flat <= n
    exact_hits = sum(1 for x in ratios if x == 1.0)
    print(
        f"\n[criterion 3] PASS: greedy verified on 200 random graphs (n<=40); "
        f"catalog ratio distribution over {len(ratios)} instances: "
        f"max={max(ratios):.3f}, mean={sum(ratios)/len(ratios):.4f}, "
        f"optimal on {exact_hits} ({100 * exact_hits / len(ratios):.1f}%)"
    )


PLANAR_CASES = [
    ("K2", path_graph(2), ((1,), (0,))),
    ("P3", path_graph(3), ((1,), (0, 2), (1,))),
    ("P4", path_graph(4), ((1,), (0, 2), (1, 3), (2,))),
    ("C4", cycle_graph(4), ((1, 3), (0, 2), (1, 3), (0, 2))),
]


def test_criterion_4_planar_reduction_correspondence():
    lines = []
    for name, g, rings in PLANAR_CASES:
        k = min_property_set(g, "dominating").size
        out = planar_gadget(g, RotationSystem(rings))
        got = min_geodetic_set(out.graph).size
        assert got == 3 * g.n + k, (name, got, 3 * g.n + k)
        lines.append(f"{name}: g(f)={got}=3*{g.n}+{k}")
    print("\n[criterion 4] PASS: " + "; ".join(lines))


def test_criterion_5_line_reduction_chain():
    lines = []
    for name, g in [("K2", path_graph(2)), ("P3", path_graph(3)), ("C4", cycle_graph(4))]:
        k = min_property_set(g, "edge_dominating").size
        n = g.n
        gstar = pendant_gadget(g).graph
        good = min_property_set(gstar, "good_edge_set").size
        assert good == k + n, (name, good, k + n)
        h = apex_pair_gadget(gstar).graph
        line_geo = min_property_set(h, "line_geodetic").size
        assert line_geo == k + n + 2, (name, line_geo)
        lg = line_graph(h)
        geo = min_geodetic_set(lg.line_graph).size
        assert geo == k + n + 2, (name, geo)
        lines.append(f"{name}: {k} -> {good} -> {line_geo} -> {geo}")
    print("\n[criterion 5] PASS: " + "; ".join(lines))


def _universal_mismatches(g):
    """All (subset, geodetic, 2-dominating) disagreements for one graph."""
    out = universal_vertex_gadget(g)
    gp = out.graph
    hub = out.name_map["universal"]
    pm = pair_masks(gp, bfs_all_pairs(gp))
    full = (1 << gp.n) - 1
    nbr = g.neighbor_masks()
    mismatches = []
    for k in range(gp.n + 1):
        for s in combinations(range(gp.n), k):
            geo = covers_all(pm, full, s)
            smask = 0
            for v in s:
                if v != hub:
                    smask |= 1 << v
            two_dom = all(
                (smask >> v) & 1 or (nbr[v] & smask).bit_count() >= 2
                for v in range(g.n)
            )
            if geo != two_dom:
                mismatches.append((s, geo, two_dom))
    return mismatches


def test_criterion_6_universal_vertex_equivalence():
    checked_graphs = 0
    checked_subsets = 0
    rng = random.Random(99)
    for n in range(1, 7):
        for g in labeled_connected_graphs(n):
            if find_triangle(g) is not None:
                continue
            complete = g.edge_count == g.n * (g.n - 1) // 2
            mismatches = _universal_mismatches(g)
            if complete:
                # K1 and K2: the single known degenerate subset each.
                assert mismatches == [(tuple(range(g.n)), False, True)], mismatches
            else:
                assert mismatches == [], (n, g.edges(), mismatches[:3])
            checked_graphs += 1
            checked_subsets += 1 << (g.n + 1)

            # Spot-check the fast path against the public checker.
            if rng.random() < 0.01:
                out = universal_vertex_gadget(g)
                pm = pair_masks(out.graph, bfs_all_pairs(out.graph))
                full = (1 << out.graph.n) - 1
                s = tuple(
                    sorted(rng.sample(range(out.graph.n), rng.randint(1, out.graph.n)))
                )
                assert covers_all(pm, full, s) == is_geodetic_set(out.graph, s)
    print(
        f"\n[criterion 6] PASS: biconditional exact on {checked_graphs} "
        f"triangle-free graphs / {checked_subsets} subsets, excluding the two "
        f"documented complete-graph degeneracies (see xfail companion)"
    )


@pytest.mark.xfail(
    strict=True,
    reason=(
        "The biconditional is provably false when the triangle-free input is "
        "complete: for K1 with S={0} and K2 with S={0,1}, S minus the "
        "universal vertex is vacuously 2-dominating yet S is not geodetic "
        "(the universal vertex is uncovered)."
    ),
)
def test_criterion_6_literal_on_complete_inputs():
    for g in (Graph(1, []), path_graph(2)):
        assert _universal_mismatches(g) == []


def test_criterion_7_grid_bound(solid_instances):
    assert len(solid_instances) >= 50
    worst = 0.0
    for name, g, emb in solid_instances:
        r = grid_3approx(g, emb, check=True)
        assert is_geodetic_set(g, r.witness), name
        opt = min_geodetic_set(g).size
        assert r.size <= 3 * opt, (name, r.size, opt)
        worst = max(worst, r.size / opt)
    print(
        f"\n[criterion 7a] PASS: corner sets verified geodetic and within 3x "
        f"optimum on {len(solid_instances)} instances (worst ratio {worst:.2f})"
    )


def test_criterion_7_corner_detection_scales_linearly():
    sizes = [(512, 256), (512, 512), (1024, 512), (1024, 1024)]

    def measure(w, h, reps=3):
        g, _ = rect_grid(w, h)
        best = float("inf")
        gc.disable()
        try:
            for _ in range(reps):
                t0 = time.perf_counter()
                cv = corner_vertices(g)
                best = min(best, time.perf_counter() - t0)
        finally:
            gc.enable()
        assert len(cv) == 4
        return best

    # Warm the allocator at full scale, then keep per-size minima over up to
    # three passes: minima converge to the deterministic cost, so shared-CPU
    # noise shrinks while the bound itself stays fixed.
    measure(*sizes[-1], reps=1)
    times = [float("inf")] * len(sizes)
    for _ in range(3):
        for i, (w, h) in enumerate(sizes):
            times[i] = min(times[i], measure(w, h))
        ratios = [b / a for a, b in zip(times, times[1:])]
        if all(r <= 2.5 for r in ratios):
            break
    assert all(r <= 2.5 for r in ratios), ratios
    print(
        "\n[criterion 7b] PASS: corner detection up to 10^6 vertices; "
        "times " + ", ".join(f"{t:.2f}s" for t in times)
        + "; per-doubling growth " + ", ".join(f"{r:.2f}" for r in ratios)
    )


def test_criterion_8_corner_path_lower_bound(solid_instances):
    checked = 0
    for name, g, emb in solid_instances:
        if g.n > 12:
            continue
        paths = [set(p) for p in corner_paths(g)]
        opt = min_geodetic_set(g).size
        pm = pair_masks(g, bfs_all_pairs(g))
        full = (1 << g.n) - 1
        optimum_sets = [
            set(s) for s in combinations(range(g.n), opt) if covers_all(pm, full, s)
        ]
        assert optimum_sets, name
        for s in optimum_sets:
            for p in paths:
                assert s & p, (name, sorted(s), sorted(p))
        checked += 1
    assert checked >= 20
    print(
        f"\n[criterion 8] PASS: every optimum geodetic set meets every corner "
        f"path on all {checked} instances with n<=12"
    )


def test_criterion_9_normalization():
    rng = random.Random(2024)
    gadgets = []
    for g in (path_graph(2), path_graph(3), cycle_graph(4)):
        h = apex_pair_gadget(g)
        a, b, c, d = (h.name_map[key] for key in "abcd")
        base = set(g.edges()) | {canonical_edge(a, b), canonical_edge(c, d)}
        assert check_property(h.graph, "line_geodetic", base)
        gadgets.append((h, base, sorted(h.aux_edge_sets["spokes"]), g.edges()))
    trials = 0
    while trials < 100:
        h, base, spokes, core_edges = gadgets[trials % 3]
        q = set(base)
        q.update(rng.sample(spokes, rng.randint(1, len(spokes))))
        if core_edges and rng.random() < 0.5:
            q.update(rng.sample(core_edges, rng.randint(0, len(core_edges))))
        out = normalize_line_geodetic(h, q)
        assert not (out & h.aux_edge_sets["spokes"])
        assert len(out) <= len(q)
        assert check_property(h.graph, "line_geodetic", out)
        assert normalize_line_geodetic(h, out) == out
        trials += 1
    print(
        "\n[criterion 9] PASS: 100 seeded line-geodetic supersets normalised "
        "to spoke-free sets (never larger, checker-verified, idempotent)"
    )
