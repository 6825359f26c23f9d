"""Reduction of minimum geodetic set to a colored-multigraph covering problem.

The multigraph has one parallel edge ``(v, w)`` per vertex ``u`` lying on a
shortest ``v``-``w`` path, colored ``u`` (endpoints included, so every vertex
appears as a color).  A vertex set is geodetic exactly when it touches both
endpoints of at least one edge of every color, so minimum geodetic sets and
minimum colorful vertex sets coincide.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .errors import GeodeticError, UncoverableColorError, ValidationError
from .exact import Limits, SolveReport, _CoverSearch, default_limits
from .graph import (
    DistanceOracle,
    Graph,
    bfs_all_pairs,
    interval,
    is_geodetic_set,
    require_connected,
)


@dataclass(frozen=True)
class ColoredMultigraph:
    """Edge-colored multigraph; parallel edges must carry distinct colors."""

    vertex_count: int
    edges: tuple[tuple[int, int, int], ...]
    color_universe: frozenset[int] = field(default=frozenset())

    def __post_init__(self):
        seen = set()
        for v, w, c in self.edges:
            if v == w:
                raise ValidationError(f"self-loop at vertex {v}")
            if not (0 <= v < w < self.vertex_count):
                raise ValidationError(f"edge ({v},{w}) not canonical or out of range")
            if (v, w, c) in seen:
                raise ValidationError(f"duplicate colored edge ({v},{w},{c})")
            seen.add((v, w, c))
            if c not in self.color_universe:
                raise ValidationError(f"edge color {c} outside the color universe")


def build_geodetic_mrsm(g: Graph, d: DistanceOracle | None = None) -> ColoredMultigraph:
    """Construct the covering instance for a connected graph on >= 2 vertices."""
    require_connected(g)
    if g.n < 2:
        raise ValidationError("reduction needs at least two vertices (no pairs exist)")
    if d is None:
        d = bfs_all_pairs(g)
    edges = []
    colors = set()
    for v in range(g.n):
        for w in range(v + 1, g.n):
            for u in sorted(interval(g, d, v, w)):
                edges.append((v, w, u))
                colors.add(u)
    return ColoredMultigraph(
        vertex_count=g.n, edges=tuple(edges), color_universe=frozenset(colors)
    )


def _pair_color_masks(cm: ColoredMultigraph) -> tuple[dict[tuple[int, int], int], int]:
    pair_colors: dict[tuple[int, int], int] = {}
    full = 0
    for c in cm.color_universe:
        full |= 1 << c
    covered = 0
    for v, w, c in cm.edges:
        pair_colors[(v, w)] = pair_colors.get((v, w), 0) | (1 << c)
        covered |= 1 << c
    if covered != full:
        missing = sorted(c for c in cm.color_universe if not (covered >> c) & 1)
        raise UncoverableColorError(f"colors with no edge: {missing}")
    return pair_colors, full


def rainbow_exact(cm: ColoredMultigraph, limits: Limits | None = None) -> frozenset[int]:
    """Minimum vertex set touching both endpoints of an edge of every color.

    Colors carried by exactly one edge force both endpoints of that edge into
    the answer before enumeration starts.
    """
    limits = limits or default_limits()
    pair_colors, full = _pair_color_masks(cm)
    n = cm.vertex_count

    edges_of_color: dict[int, list[tuple[int, int]]] = {}
    for v, w, c in cm.edges:
        edges_of_color.setdefault(c, []).append((v, w))
    pinned = set()
    for c, pairs in edges_of_color.items():
        if len(pairs) == 1:
            pinned.update(pairs[0])

    pair_gain = [[0] * n for _ in range(n)]
    for (v, w), mask in pair_colors.items():
        pair_gain[v][w] = mask
        pair_gain[w][v] = mask

    pinned_list = sorted(pinned)
    candidates = [x for x in range(n) if x not in pinned]
    search = _CoverSearch(
        candidates=candidates,
        pinned=pinned_list,
        riders=[],
        elem_gain=[0] * n,
        pair_gain=pair_gain,
        full=full,
        max_nodes=limits.max_nodes,
    )
    witness, _ = search.run()
    return witness


def rainbow_greedy(cm: ColoredMultigraph) -> frozenset[int]:
    """Deterministic greedy cover of all colors.

    Seeds with the pair carrying the most distinct colors (ties broken by the
    lexicographically smallest pair), then repeatedly adds the vertex covering
    the most new colors (ties broken by smallest id).  If no single vertex
    helps but colors remain, the best remaining pair is added whole.
    """
    pair_colors, full = _pair_color_masks(cm)

    best_pair, best_cnt = None, -1
    for pair in sorted(pair_colors):
        cnt = pair_colors[pair].bit_count()
        if cnt > best_cnt:
            best_pair, best_cnt = pair, cnt
    assert best_pair is not None
    chosen = set(best_pair)
    covered = pair_colors[best_pair]

    def contribution(x: int) -> int:
        m = 0
        for s in chosen:
            if s != x:
                key = (x, s) if x < s else (s, x)
                m |= pair_colors.get(key, 0)
        return m

    while covered != full:
        best_x, best_gain, best_mask = None, 0, 0
        for x in range(cm.vertex_count):
            if x in chosen:
                continue
            m = contribution(x)
            gain = (m & ~covered).bit_count()
            if gain > best_gain:
                best_x, best_gain, best_mask = x, gain, m
        if best_x is not None:
            chosen.add(best_x)
            covered |= best_mask
            continue
        # No single vertex helps: cover the best remaining pair outright.
        best_pair, best_gain = None, 0
        for pair in sorted(pair_colors):
            gain = (pair_colors[pair] & ~covered).bit_count()
            if gain > best_gain:
                best_pair, best_gain = pair, gain
        if best_pair is None:
            raise GeodeticError("greedy stalled with colors uncovered")
        chosen.update(best_pair)
        for a in best_pair:
            covered |= contribution(a)
    return frozenset(chosen)


def approx_geodetic_via_mrsm(
    g: Graph, mode: str = "greedy", limits: Limits | None = None
) -> SolveReport:
    """Geodetic set through the colored-multigraph reduction.

    ``mode`` is ``exact`` (minimum, budget-bounded) or ``greedy``.  The result
    is re-verified with the geodetic checker before being returned.
    """
    if mode not in ("exact", "greedy"):
        raise ValidationError(f"unknown mode {mode!r}; expected 'exact' or 'greedy'")
    require_connected(g)
    t0 = time.perf_counter()
    if g.n == 1:
        return SolveReport(1, frozenset({0}), 0, time.perf_counter() - t0)
    cm = build_geodetic_mrsm(g)
    if mode == "exact":
        witness = rainbow_exact(cm, limits)
    else:
        witness = rainbow_greedy(cm)
    assert is_geodetic_set(g, witness), "rainbow cover is not geodetic"
    return SolveReport(len(witness), witness, 0, time.perf_counter() - t0)


def mrsm_dump(cm: ColoredMultigraph) -> str:
    """Debug dump: ``colors <k>`` header, then one ``v w color`` line per edge."""
    lines = [f"colors {len(cm.color_universe)}"]
    for v, w, c in sorted(cm.edges):
        lines.append(f"{v} {w} {c}")
    return "\n".join(lines) + "\n"
