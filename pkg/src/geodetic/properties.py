"""Set-property verifiers over vertex and edge sets.

``check_property`` dispatches on a selector string; the first two selectors
take vertex sets, the remaining three take edge sets.  Edge-metric selectors
are evaluated as vertex problems in the line graph.
"""

from __future__ import annotations

from .errors import ValidationError
from .graph import (
    Graph,
    bfs_all_pairs,
    canonical_edge,
    is_geodetic_set,
    line_graph,
    require_connected,
)

VERTEX_PROPERTIES = ("dominating", "two_dominating")
EDGE_PROPERTIES = ("edge_dominating", "line_geodetic", "good_edge_set")
PROPERTY_SELECTORS = VERTEX_PROPERTIES + EDGE_PROPERTIES


def _as_vertex_set(g: Graph, s) -> set[int]:
    members = set()
    for item in s:
        if isinstance(item, bool) or not isinstance(item, int):
            raise ValidationError(
                f"vertex-set property got non-vertex member {item!r}"
            )
        if not (0 <= item < g.n):
            raise ValidationError(f"vertex {item} out of range")
        members.add(item)
    return members


def _as_edge_set(g: Graph, s) -> set[tuple[int, int]]:
    members = set()
    for item in s:
        if isinstance(item, int) or not (
            isinstance(item, tuple) and len(item) == 2
        ):
            raise ValidationError(f"edge-set property got non-edge member {item!r}")
        e = canonical_edge(*item)
        if not g.has_edge(*e):
            raise ValidationError(f"({e[0]},{e[1]}) is not an edge of the graph")
        members.add(e)
    return members


def _is_dominating(g: Graph, s: set[int]) -> bool:
    return all(
        v in s or any(w in s for w in g.adj[v]) for v in range(g.n)
    )


def _is_two_dominating(g: Graph, s: set[int]) -> bool:
    for v in range(g.n):
        if v in s:
            continue
        if sum(1 for w in g.adj[v] if w in s) < 2:
            return False
    return True


def _is_edge_dominating(g: Graph, s: set[tuple[int, int]]) -> bool:
    picked = set()
    for u, v in s:
        picked.add(u)
        picked.add(v)
    for e in g.edges():
        if e in s:
            continue
        if e[0] not in picked and e[1] not in picked:
            return False
    return True


def _is_line_geodetic(g: Graph, s: set[tuple[int, int]]) -> bool:
    # An edge set is line geodetic exactly when the corresponding vertex set
    # is geodetic in the line graph.
    lg = line_graph(g)
    return is_geodetic_set(lg.line_graph, (lg.index_of(e) for e in s))


def _is_good_edge_set(g: Graph, s: set[tuple[int, int]]) -> bool:
    # Like line geodetic, but every edge outside the set needs a witnessing
    # pair at edge distance exactly 2 or 3.
    lg = line_graph(g)
    L = lg.line_graph
    require_connected(L)
    oracle = bfs_all_pairs(L)
    members = sorted(lg.index_of(e) for e in s)
    outside = [i for i in range(L.n) if i not in set(members)]
    if not outside:
        return True
    dist = oracle.dist
    for x in outside:
        found = False
        for i, a in enumerate(members):
            row_a = dist[a]
            for b in members[i + 1 :]:
                dab = row_a[b]
                if dab not in (2, 3):
                    continue
                if row_a[x] + dist[b][x] == dab:
                    found = True
                    break
            if found:
                break
        if not found:
            return False
    return True


def check_property(g: Graph, prop: str, s) -> bool:
    """Exact check of a named set property.

    ``prop`` is one of ``dominating``, ``two_dominating`` (vertex sets) or
    ``edge_dominating``, ``line_geodetic``, ``good_edge_set`` (edge sets,
    canonical pairs).  Raises :class:`ValidationError` when the carrier type
    does not match the selector.
    """
    if prop == "dominating":
        return _is_dominating(g, _as_vertex_set(g, s))
    if prop == "two_dominating":
        return _is_two_dominating(g, _as_vertex_set(g, s))
    if prop == "edge_dominating":
        return _is_edge_dominating(g, _as_edge_set(g, s))
    if prop == "line_geodetic":
        require_connected(g)
        return _is_line_geodetic(g, _as_edge_set(g, s))
    if prop == "good_edge_set":
        require_connected(g)
        return _is_good_edge_set(g, _as_edge_set(g, s))
    raise ValidationError(
        f"unknown property {prop!r}; expected one of {PROPERTY_SELECTORS}"
    )
