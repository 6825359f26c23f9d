"""Graph transformations with certified size correspondences.

Each constructor returns the transformed graph together with a name map from
symbolic role labels to vertex ids, so tests and the CLI can address gadget
vertices without knowing the id layout.  The transformations tie the minimum
geodetic / line-geodetic / good-edge-set sizes of the output to classical
covering optima of the input; the exact solvers certify those ties on small
instances.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import GeodeticError, ValidationError
from .graph import (
    Graph,
    bfs_all_pairs,
    canonical_edge,
    line_graph,
    require_connected,
    _pair_cover_masks,
)
from .properties import check_property


@dataclass(frozen=True)
class RotationSystem:
    """Counterclockwise cyclic neighbor order around every vertex.

    ``order[v]`` lists the neighbors of ``v`` in counterclockwise order; the
    edge to ``order[v][i]`` carries label ``i`` at ``v``.
    """

    order: tuple[tuple[int, ...], ...]

    def validate(self, g: Graph) -> None:
        if len(self.order) != g.n:
            raise ValidationError(
                f"rotation system covers {len(self.order)} of {g.n} vertices"
            )
        for v, ring in enumerate(self.order):
            if sorted(ring) != list(g.adj[v]):
                raise ValidationError(
                    f"rotation at vertex {v} is not a permutation of its neighbors"
                )

    def label(self, v: int, w: int) -> int:
        """Label of edge ``vw`` at endpoint ``v``."""
        return self.order[v].index(w)


@dataclass(frozen=True)
class GadgetOutput:
    """Constructed graph plus the role-label <-> vertex-id bijection."""

    graph: Graph
    name_map: dict[str, int]
    aux_edge_sets: dict[str, frozenset[tuple[int, int]]] = field(default_factory=dict)

    def vertex(self, role: str) -> int:
        try:
            return self.name_map[role]
        except KeyError:
            raise ValidationError(f"unknown gadget role {role!r}")


def find_triangle(g: Graph) -> tuple[int, int, int] | None:
    """Some triangle of ``g``, or ``None`` when triangle-free."""
    for u in range(g.n):
        for v in g.adj[u]:
            if v <= u:
                continue
            for w in g.adj[u]:
                if w > v and w in g.adj[v]:
                    return (u, v, w)
    return None


def _require_triangle_free(g: Graph) -> None:
    tri = find_triangle(g)
    if tri is not None:
        raise ValidationError(f"input must be triangle-free; found triangle {tri}")


def _pair(a: int, b: int) -> tuple[int, int]:
    a %= 3
    b %= 3
    return (a, b) if a < b else (b, a)


_PAIR_INDEX = {(0, 1): 0, (0, 2): 1, (1, 2): 2}


def planar_gadget(g: Graph, rot: RotationSystem) -> GadgetOutput:
    """Replace every vertex of a connected subcubic plane graph by a
    13-vertex wheel-like block and wire adjacent blocks through their spokes.

    The block of vertex ``v`` has a hub ``c^v``, three spoke tips ``t0..t2``,
    and per index pair ``ij`` a chain ``c - x_ij - y_ij - z_ij`` braided with
    the tips.  For an edge ``vw`` labeled ``i`` at ``v`` and ``j`` at ``w``
    (labels from the rotation system), the blocks are joined by
    ``ti^v - tj^w`` and the two y-y cross edges with shifted index pairs.
    The minimum geodetic set of the output has size ``3n + k`` where ``k`` is
    the minimum dominating set size of the input.
    """
    require_connected(g)
    for v in range(g.n):
        if g.degree(v) > 3:
            raise ValidationError(f"vertex {v} has degree {g.degree(v)} > 3")
    rot.validate(g)

    name_map: dict[str, int] = {}
    edges: list[tuple[int, int]] = []

    def vid(role: str) -> int:
        return name_map[role]

    for v in range(g.n):
        base = 13 * v
        name_map[f"c^{v}"] = base
        for i in range(3):
            name_map[f"t{i}^{v}"] = base + 1 + i
        for (i, j), p in _PAIR_INDEX.items():
            name_map[f"x{i}{j}^{v}"] = base + 4 + p
            name_map[f"y{i}{j}^{v}"] = base + 7 + p
            name_map[f"z{i}{j}^{v}"] = base + 10 + p

    def x_of(v: int, pair: tuple[int, int]) -> int:
        return vid(f"x{pair[0]}{pair[1]}^{v}")

    def y_of(v: int, pair: tuple[int, int]) -> int:
        return vid(f"y{pair[0]}{pair[1]}^{v}")

    for v in range(g.n):
        c = vid(f"c^{v}")
        for i in range(3):
            t = vid(f"t{i}^{v}")
            edges.append((c, t))
            for pair in (_pair(i, i + 1), _pair(i - 1, i)):
                edges.append((t, x_of(v, pair)))
                edges.append((t, y_of(v, pair)))
        for i, j in _PAIR_INDEX:
            x = vid(f"x{i}{j}^{v}")
            y = vid(f"y{i}{j}^{v}")
            z = vid(f"z{i}{j}^{v}")
            edges.append((c, x))
            edges.append((x, y))
            edges.append((y, z))

    for v, w in g.edges():
        i = rot.label(v, w)
        j = rot.label(w, v)
        edges.append((vid(f"t{i}^{v}"), vid(f"t{j}^{w}")))
        edges.append((y_of(v, _pair(i, i + 1)), y_of(w, _pair(j - 1, j))))
        edges.append((y_of(v, _pair(i - 1, i)), y_of(w, _pair(j + 1, j))))

    out = Graph(13 * g.n, edges)
    return GadgetOutput(graph=out, name_map=name_map)


def pendant_gadget(g: Graph) -> GadgetOutput:
    """Attach a fresh two-edge pendant path ``v - x_v - y_v`` to every vertex
    of a triangle-free graph.  Minimum good edge sets of the output exceed
    minimum edge dominating sets of the input by exactly ``n``."""
    _require_triangle_free(g)
    n = g.n
    edges = list(g.edges())
    name_map = {f"v{v}": v for v in range(n)}
    for v in range(n):
        xv = n + 2 * v
        yv = n + 2 * v + 1
        name_map[f"x{v}"] = xv
        name_map[f"y{v}"] = yv
        edges.append((v, xv))
        edges.append((xv, yv))
    out = Graph(3 * n, edges)
    _require_triangle_free(out)
    return GadgetOutput(graph=out, name_map=name_map)


def apex_pair_gadget(g: Graph) -> GadgetOutput:
    """Add a pendant pair ``a-b`` and ``c-d`` with the inner vertices ``b``
    and ``c`` adjacent to every original vertex of a triangle-free graph.

    The spoke edges (``b`` or ``c`` to an original vertex) are returned as the
    auxiliary edge set ``"spokes"``; minimum line geodetic sets of the output
    exceed minimum good edge sets of the input by exactly 2, and can always be
    normalised to avoid the spokes.
    """
    _require_triangle_free(g)
    n = g.n
    a, b, c, d = n, n + 1, n + 2, n + 3
    name_map = {f"v{v}": v for v in range(n)}
    name_map.update({"a": a, "b": b, "c": c, "d": d})
    edges = list(g.edges())
    edges.append((a, b))
    edges.append((c, d))
    spokes = []
    for v in range(n):
        spokes.append(canonical_edge(b, v))
        spokes.append(canonical_edge(c, v))
    edges.extend(spokes)
    out = Graph(n + 4, edges)
    return GadgetOutput(
        graph=out,
        name_map=name_map,
        aux_edge_sets={"spokes": frozenset(spokes)},
    )


def universal_vertex_gadget(g: Graph) -> GadgetOutput:
    """Add one vertex adjacent to every other; the result has diameter <= 2.

    For triangle-free inputs, a set is geodetic in the output exactly when it
    is a 2-dominating set of the input after removing the new vertex (the two
    complete inputs K1 and K2 are the known degenerate exceptions).
    """
    n = g.n
    u = n
    edges = list(g.edges()) + [(v, u) for v in range(n)]
    name_map = {f"v{v}": v for v in range(n)}
    name_map["universal"] = u
    return GadgetOutput(graph=Graph(n + 1, edges), name_map=name_map)


def normalize_line_geodetic(
    h: GadgetOutput, q: frozenset[tuple[int, int]] | set[tuple[int, int]]
) -> frozenset[tuple[int, int]]:
    """Rewrite a line geodetic set of an apex-pair gadget to avoid the spokes.

    Spoke edges that cover no original edge are dropped; each remaining spoke
    is swapped for the canonically smallest original edge it covers.  The
    result is never larger, still line geodetic (re-checked after every swap),
    and a fixed point of this procedure.
    """
    if "spokes" not in h.aux_edge_sets:
        raise ValidationError("normalization expects an apex-pair gadget output")
    graph = h.graph
    spokes = h.aux_edge_sets["spokes"]
    qset = {canonical_edge(*e) for e in q}
    if not check_property(graph, "line_geodetic", qset):
        raise ValidationError("input set is not line geodetic")

    lg = line_graph(graph)
    L = lg.line_graph
    pm = _pair_cover_masks(L, bfs_all_pairs(L))
    apex_ids = {h.name_map[k] for k in ("a", "b", "c", "d")}
    original = [
        e for e in lg.edge_of_vertex if e[0] not in apex_ids and e[1] not in apex_ids
    ]

    def covered_originals(e: tuple[int, int]) -> list[tuple[int, int]]:
        ei = lg.index_of(e)
        row = pm[ei]
        out = []
        for f in original:
            if f in qset:
                continue
            fbit = 1 << lg.index_of(f)
            for q2 in qset:
                if q2 != e and row[lg.index_of(q2)] & fbit:
                    out.append(f)
                    break
        return out

    while True:
        members = sorted(qset & spokes)
        if not members:
            break
        dropped = False
        for e in members:
            if e in qset and not covered_originals(e):
                qset.discard(e)
                dropped = True
        if dropped:
            continue
        e = min(qset & spokes)
        replacement = min(covered_originals(e))
        qset.discard(e)
        qset.add(replacement)
        if not check_property(graph, "line_geodetic", qset):
            raise GeodeticError(
                "spoke replacement broke the line geodetic property"
            )  # pragma: no cover
    return frozenset(qset)
