"""Exhaustive-search solvers used as ground truth throughout the test suite.

All solvers enumerate candidate sets in ascending cardinality (lexicographic
within a cardinality), so the returned witness is deterministic and provably
minimum.  A node budget bounds the search; exceeding it raises
:class:`BudgetExceededError` rather than returning a possibly wrong answer.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass
from itertools import combinations

from .errors import BudgetExceededError, GeodeticError, ValidationError
from .graph import (
    Graph,
    bfs_all_pairs,
    biconnected_decomposition,
    is_geodetic_set,
    line_graph,
    require_connected,
    _pair_cover_masks,
)
from .properties import PROPERTY_SELECTORS, check_property

#: Environment variable overriding the default search node budget.
NODE_BUDGET_ENV = "GEODETIC_NODE_BUDGET"
_DEFAULT_MAX_NODES = 100_000_000


@dataclass(frozen=True)
class Limits:
    """Resource bounds for exhaustive searches (search-tree nodes, not time)."""

    max_nodes: int = _DEFAULT_MAX_NODES


def default_limits() -> Limits:
    raw = os.environ.get(NODE_BUDGET_ENV)
    if raw is None:
        return Limits()
    return Limits(max_nodes=int(raw))


@dataclass(frozen=True)
class SolveReport:
    """Outcome of one solve: the witness set, its size, and search effort."""

    size: int
    witness: frozenset
    nodes_explored: int
    elapsed: float


class _CoverSearch:
    """Minimum-cardinality cover search over bitmask coverage.

    Choosing element ``x`` contributes ``elem_gain[x]`` plus, when
    ``pair_gain`` is given, ``pair_gain[x][y]`` for every other chosen or
    pre-placed element ``y``.  ``pinned`` elements are forced members counted
    in the answer; ``riders`` contribute coverage but are free.
    """

    def __init__(
        self,
        *,
        candidates: list[int],
        pinned: list[int],
        riders: list[int],
        elem_gain: list[int],
        pair_gain: list[list[int]] | None,
        full: int,
        max_nodes: int,
    ):
        self.candidates = candidates
        self.pinned = pinned
        self.elem_gain = elem_gain
        self.pair_gain = pair_gain
        self.full = full
        self.max_nodes = max_nodes
        self.nodes = 0

        placed = pinned + riders
        base = 0
        for i, p in enumerate(placed):
            base |= elem_gain[p]
            if pair_gain is not None:
                row = pair_gain[p]
                for q in placed[:i]:
                    base |= row[q]
        self.base = base

        # Per-candidate fixed contribution (self plus pairs with placed
        # elements) and optimistic potential for the suffix prune.
        static = []
        pot = []
        partners = placed + candidates
        for x in candidates:
            sg = elem_gain[x]
            px = sg
            if pair_gain is not None:
                row = pair_gain[x]
                for p in placed:
                    sg |= row[p]
                for y in partners:
                    if y != x:
                        px |= row[y]
            static.append(sg)
            pot.append(px)
        self.static_gain = static
        suffix = [0] * (len(candidates) + 1)
        for i in range(len(candidates) - 1, -1, -1):
            suffix[i] = suffix[i + 1] | pot[i]
        self.suffix = suffix

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.max_nodes:
            raise BudgetExceededError(self.nodes)

    def _rec(self, start: int, cover: int, chosen: list[int], r: int):
        self._tick()
        if r == 0:
            return [] if cover == self.full else None
        if cover | self.suffix[start] != self.full:
            return None
        cands = self.candidates
        pair_gain = self.pair_gain
        for j in range(start, len(cands) - r + 1):
            gain = self.static_gain[j]
            if pair_gain is not None and chosen:
                row = pair_gain[cands[j]]
                for y in chosen:
                    gain |= row[y]
            chosen.append(cands[j])
            res = self._rec(j + 1, cover | gain, chosen, r - 1)
            chosen.pop()
            if res is not None:
                return [cands[j]] + res
        return None

    def run(self) -> tuple[frozenset[int], int]:
        for k in range(len(self.candidates) + 1):
            res = self._rec(0, self.base, [], k)
            if res is not None:
                return frozenset(self.pinned) | frozenset(res), self.nodes
        raise GeodeticError("no covering set exists")  # pragma: no cover


def _uncoverable(num: int, pair_gain: list[list[int]]) -> list[int]:
    """Elements never strictly inside any pair's coverage; they must belong to
    every valid set (for geodetic problems: degree-one and simplicial
    vertices)."""
    cov = 0
    for a in range(num):
        row = pair_gain[a]
        clear_a = ~(1 << a)
        for b in range(a + 1, num):
            cov |= row[b] & clear_a & ~(1 << b)
    return [x for x in range(num) if not (cov >> x) & 1]


def min_geodetic_set(g: Graph, limits: Limits | None = None) -> SolveReport:
    """Minimum geodetic set by ascending-cardinality exhaustive search.

    Vertices that no pair can cover (degree-one and simplicial vertices) are
    pinned before enumeration.
    """
    limits = limits or default_limits()
    require_connected(g)
    t0 = time.perf_counter()
    if g.n == 1:
        return SolveReport(1, frozenset({0}), 0, time.perf_counter() - t0)
    oracle = bfs_all_pairs(g)
    pm = _pair_cover_masks(g, oracle)
    elem_gain = [pm[x][x] for x in range(g.n)]
    pinned = _uncoverable(g.n, pm)
    pinned_set = set(pinned)
    candidates = [x for x in range(g.n) if x not in pinned_set]
    search = _CoverSearch(
        candidates=candidates,
        pinned=pinned,
        riders=[],
        elem_gain=elem_gain,
        pair_gain=pm,
        full=(1 << g.n) - 1,
        max_nodes=limits.max_nodes,
    )
    witness, nodes = search.run()
    return SolveReport(len(witness), witness, nodes, time.perf_counter() - t0)


def min_geodetic_decomposed(g: Graph, limits: Limits | None = None) -> SolveReport:
    """Minimum geodetic set assembled from the biconnected components.

    Each component is solved with its cut vertices pre-placed in the covering
    test (but not counted); the union of the per-component minima is a
    minimum geodetic set of the whole graph.
    """
    limits = limits or default_limits()
    require_connected(g)
    t0 = time.perf_counter()
    if g.n == 1:
        return SolveReport(1, frozenset({0}), 0, time.perf_counter() - t0)
    cuts, components = biconnected_decomposition(g)
    witness: set[int] = set()
    total_nodes = 0
    for comp in components:
        local = {v: i for i, v in enumerate(comp)}
        sub = Graph(
            len(comp),
            [
                (local[u], local[v])
                for u in comp
                for v in g.adj[u]
                if v in local and u < v
            ],
        )
        oracle = bfs_all_pairs(sub)
        pm = _pair_cover_masks(sub, oracle)
        elem_gain = [pm[x][x] for x in range(sub.n)]
        riders = sorted(local[v] for v in comp if v in cuts)
        rider_set = set(riders)
        pinned = [x for x in _uncoverable(sub.n, pm) if x not in rider_set]
        excluded = rider_set | set(pinned)
        candidates = [x for x in range(sub.n) if x not in excluded]
        search = _CoverSearch(
            candidates=candidates,
            pinned=pinned,
            riders=riders,
            elem_gain=elem_gain,
            pair_gain=pm,
            full=(1 << sub.n) - 1,
            max_nodes=limits.max_nodes - total_nodes,
        )
        chosen, nodes = search.run()
        total_nodes += nodes
        witness.update(comp[x] for x in chosen)
    if not is_geodetic_set(g, witness):
        raise GeodeticError(
            "component-wise solution is not geodetic; decomposition assumption failed"
        )  # pragma: no cover
    return SolveReport(
        len(witness), frozenset(witness), total_nodes, time.perf_counter() - t0
    )


def _min_unary_cover(
    elem_gain: list[int], limits: Limits
) -> tuple[frozenset[int], int]:
    """Minimum set under a unary coverage rule (plain set cover)."""
    n = len(elem_gain)
    full = (1 << n) - 1
    covered_by_others = 0
    for x in range(n):
        covered_by_others |= elem_gain[x] & ~(1 << x)
    pinned = [x for x in range(n) if not (covered_by_others >> x) & 1]
    pinned_set = set(pinned)
    candidates = [x for x in range(n) if x not in pinned_set]
    search = _CoverSearch(
        candidates=candidates,
        pinned=pinned,
        riders=[],
        elem_gain=elem_gain,
        pair_gain=None,
        full=full,
        max_nodes=limits.max_nodes,
    )
    return search.run()


def _min_two_dominating(g: Graph, limits: Limits) -> tuple[frozenset[int], int]:
    # Needs neighbor counting, so enumerate subsets directly.
    masks = g.neighbor_masks()
    pinned = [v for v in range(g.n) if g.degree(v) < 2]
    pinned_mask = 0
    for v in pinned:
        pinned_mask |= 1 << v
    candidates = [v for v in range(g.n) if not (pinned_mask >> v) & 1]
    nodes = 0

    def ok(smask: int) -> bool:
        for v in range(g.n):
            if (smask >> v) & 1:
                continue
            if (masks[v] & smask).bit_count() < 2:
                return False
        return True

    for k in range(len(candidates) + 1):
        for extra in combinations(candidates, k):
            nodes += 1
            if nodes > limits.max_nodes:
                raise BudgetExceededError(nodes)
            smask = pinned_mask
            for v in extra:
                smask |= 1 << v
            if ok(smask):
                return frozenset(pinned) | frozenset(extra), nodes
    raise GeodeticError("no 2-dominating set exists")  # pragma: no cover


def _line_metric_setup(g: Graph, distances: tuple[int, ...] | None):
    """Pair-coverage masks over the line graph; optionally restricted to
    witnessing pairs at the given edge distances."""
    lg = line_graph(g)
    L = lg.line_graph
    require_connected(L)
    oracle = bfs_all_pairs(L)
    pm = _pair_cover_masks(L, oracle)
    if distances is not None:
        dist = oracle.dist
        for a in range(L.n):
            for b in range(L.n):
                if a != b and dist[a][b] not in distances:
                    pm[a][b] = 0
    return lg, L, pm


def min_property_set(
    g: Graph, prop: str, limits: Limits | None = None
) -> SolveReport:
    """Minimum vertex or edge set satisfying a ``check_property`` selector."""
    limits = limits or default_limits()
    if prop not in PROPERTY_SELECTORS:
        raise ValidationError(
            f"unknown property {prop!r}; expected one of {PROPERTY_SELECTORS}"
        )
    t0 = time.perf_counter()

    if prop == "dominating":
        masks = g.neighbor_masks()
        elem_gain = [masks[v] | (1 << v) for v in range(g.n)]
        witness, nodes = _min_unary_cover(elem_gain, limits)
    elif prop == "two_dominating":
        witness, nodes = _min_two_dominating(g, limits)
    elif prop == "edge_dominating":
        edges = g.edges()
        if not edges:
            witness, nodes = frozenset(), 0
        else:
            index = {e: i for i, e in enumerate(edges)}
            elem_gain = [1 << i for i in range(len(edges))]
            for v in range(g.n):
                incident = [index[(min(v, w), max(v, w))] for w in g.adj[v]]
                for a in incident:
                    for b in incident:
                        elem_gain[a] |= 1 << b
            picked, nodes = _min_unary_cover(elem_gain, limits)
            witness = frozenset(edges[i] for i in picked)
    else:
        distances = (2, 3) if prop == "good_edge_set" else None
        lg, L, pm = _line_metric_setup(g, distances)
        elem_gain = [1 << x for x in range(L.n)]
        pinned = _uncoverable(L.n, pm)
        pinned_set = set(pinned)
        candidates = [x for x in range(L.n) if x not in pinned_set]
        search = _CoverSearch(
            candidates=candidates,
            pinned=pinned,
            riders=[],
            elem_gain=elem_gain,
            pair_gain=pm,
            full=(1 << L.n) - 1,
            max_nodes=limits.max_nodes,
        )
        picked, nodes = search.run()
        witness = frozenset(lg.edge_of_vertex[i] for i in picked)

    if witness and not check_property(g, prop, witness):
        raise GeodeticError(
            f"internal error: witness fails its own {prop} check"
        )  # pragma: no cover
    return SolveReport(len(witness), witness, nodes, time.perf_counter() - t0)
