"""Independent brute-force oracles for the test suite.

Everything here recomputes results from first principles (path enumeration,
plain subset sweeps) without touching the solvers' pruning, pinning, or mask
machinery, so test expectations stay independent of the code under test.
"""

from __future__ import annotations

from itertools import combinations

from geodetic.graph import Graph, canonical_edge, is_geodetic_set
from geodetic.mrsm import ColoredMultigraph
from geodetic.properties import check_property


def shortest_path_union(g: Graph, u: int, v: int) -> frozenset[int]:
    """Vertices on shortest u-v paths, by exhaustive simple-path enumeration."""
    best_len: int | None = None
    best_vertices: set[int] = set()
    stack = [([u], {u})]
    while stack:
        path, seen = stack.pop()
        last = path[-1]
        if best_len is not None and len(path) - 1 > best_len:
            continue
        if last == v:
            plen = len(path) - 1
            if best_len is None or plen < best_len:
                best_len = plen
                best_vertices = set(path)
            elif plen == best_len:
                best_vertices.update(path)
            continue
        for w in g.adj[last]:
            if w not in seen:
                stack.append((path + [w], seen | {w}))
    if best_len is None:
        raise AssertionError(f"no path between {u} and {v}")
    return frozenset(best_vertices)


def inductive_edge_distance(g: Graph, e, f) -> int:
    """Edge distance straight from the inductive rule: distance 1 for edges
    sharing a vertex, i for edges sharing a vertex with something at i-1."""
    e = canonical_edge(*e)
    f = canonical_edge(*f)
    if e == f:
        return 0
    edges = set(g.edges())
    seen = {e}
    frontier = {e}
    d = 0
    while frontier:
        d += 1
        nxt = set()
        for h in edges - seen:
            if any(set(h) & set(x) for x in frontier):
                nxt.add(h)
        if f in nxt:
            return d
        seen |= nxt
        frontier = nxt
    raise AssertionError(f"edges {e} and {f} are in different components")


def brute_min_geodetic_size(g: Graph) -> int:
    """Plain ascending subset sweep with the public checker; no pinning."""
    for k in range(1, g.n + 1):
        for s in combinations(range(g.n), k):
            if is_geodetic_set(g, s):
                return k
    raise AssertionError("V(G) itself must be geodetic")


def brute_min_property_size(g: Graph, prop: str) -> int:
    if prop in ("dominating", "two_dominating"):
        carrier = list(range(g.n))
    else:
        carrier = g.edges()
    for k in range(len(carrier) + 1):
        for s in combinations(carrier, k):
            if check_property(g, prop, s):
                return k
    raise AssertionError(f"full carrier must satisfy {prop}")


def is_rainbow_cover(cm: ColoredMultigraph, s) -> bool:
    s = set(s)
    for c in cm.color_universe:
        if not any(v in s and w in s for v, w, color in cm.edges if color == c):
            return False
    return True


def brute_min_rainbow_size(cm: ColoredMultigraph) -> int:
    n = cm.vertex_count
    for k in range(n + 1):
        for s in combinations(range(n), k):
            if is_rainbow_cover(cm, s):
                return k
    raise AssertionError("V itself must cover all colors")
