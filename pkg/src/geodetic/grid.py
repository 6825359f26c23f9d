"""Solid-grid machinery: embedding validation, corner paths, corner vertices,
and the linear-time geodetic 3-approximation.

A grid embedding places vertices on integer lattice points with adjacency
exactly between points at distance one.  The embedding is *solid* when every
bounded face of the induced plane drawing is a unit square.  Corner paths are
the maximal straight boundary segments whose end-vertices have degree 2 and
whose interior vertices have degree 3, with no cut vertex anywhere on them;
the corner vertices (degree-1 vertices plus corner-path end-vertices) form a
geodetic set of at most three times the optimum size.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .errors import (
    DisconnectedGraphError,
    GeodeticError,
    StructuralError,
    ValidationError,
)
from .exact import SolveReport
from .graph import Graph, articulation_points, is_connected, is_geodetic_set


@dataclass(frozen=True)
class GridEmbedding:
    """Integer lattice coordinates, indexed by vertex id."""

    coords: tuple[tuple[int, int], ...]

    @property
    def n(self) -> int:
        return len(self.coords)


@dataclass(frozen=True)
class SolidGridReport:
    ok: bool
    violations: tuple[str, ...]


# Counterclockwise order of the four axis directions: E, N, W, S.
_DIRECTION_RANK = {(1, 0): 0, (0, 1): 1, (-1, 0): 2, (0, -1): 3}


def validate_solid_grid(g: Graph, emb: GridEmbedding) -> SolidGridReport:
    """Check injectivity, the unit-distance adjacency law, connectivity, and
    solidity (every bounded face a unit square).  Violations are reported, not
    raised."""
    violations: list[str] = []
    coords = emb.coords
    if len(coords) != g.n:
        return SolidGridReport(
            False,
            (f"embedding has {len(coords)} coordinates for {g.n} vertices",),
        )

    point_of: dict[tuple[int, int], int] = {}
    for v, p in enumerate(coords):
        if p in point_of:
            violations.append(
                f"vertices {point_of[p]} and {v} share coordinates {p}"
            )
        else:
            point_of[p] = v
    if violations:
        return SolidGridReport(False, tuple(violations))

    for v, (x, y) in enumerate(coords):
        for dx, dy in _DIRECTION_RANK:
            w = point_of.get((x + dx, y + dy))
            if w is not None and w > v and not g.has_edge(v, w):
                violations.append(
                    f"vertices {v} and {w} are at distance 1 but not adjacent"
                )
    for u in range(g.n):
        xu, yu = coords[u]
        for v in g.adj[u]:
            if u < v:
                xv, yv = coords[v]
                if abs(xu - xv) + abs(yu - yv) != 1:
                    violations.append(
                        f"edge ({u},{v}) spans distance {abs(xu-xv)+abs(yu-yv)}"
                    )
    if violations:
        return SolidGridReport(False, tuple(violations))

    if not is_connected(g):
        violations.append("graph is disconnected")
        return SolidGridReport(False, tuple(violations))

    violations.extend(_solidity_violations(g, coords))
    return SolidGridReport(not violations, tuple(violations))


def _solidity_violations(g: Graph, coords) -> list[str]:
    """Traverse all faces of the plane drawing induced by the coordinates.

    With counterclockwise vertex rotations and the next-dart rule below,
    bounded faces come out with positive signed area; each must be a unit
    square (walk length 4, area 1).
    """
    rot: list[tuple[int, ...]] = []
    pos: list[dict[int, int]] = []
    for v in range(g.n):
        x, y = coords[v]
        ordered = sorted(
            g.adj[v],
            key=lambda w: _DIRECTION_RANK[(coords[w][0] - x, coords[w][1] - y)],
        )
        rot.append(tuple(ordered))
        pos.append({w: i for i, w in enumerate(ordered)})

    violations = []
    seen: set[tuple[int, int]] = set()
    for u0 in range(g.n):
        for v0 in g.adj[u0]:
            if (u0, v0) in seen:
                continue
            walk = []
            u, v = u0, v0
            while (u, v) not in seen:
                seen.add((u, v))
                walk.append((u, v))
                # Predecessor in the CCW rotation keeps the face on the left,
                # so bounded faces are walked counterclockwise.
                nxt = rot[v][(pos[v][u] - 1) % len(rot[v])]
                u, v = v, nxt
            twice_area = 0
            for a, b in walk:
                xa, ya = coords[a]
                xb, yb = coords[b]
                twice_area += xa * yb - xb * ya
            if twice_area > 0 and (len(walk) != 4 or twice_area != 2):
                face_verts = sorted({a for a, _ in walk})
                violations.append(
                    f"bounded face of area {twice_area / 2:g} with {len(walk)} "
                    f"edges through vertices {face_verts}"
                )
    return violations


def _corner_walk(
    g: Graph, cuts: frozenset[int], v: int, first: int, other: int
) -> tuple[int, ...] | None:
    """Follow the boundary from degree-2 vertex ``v`` through neighbor
    ``first``, keeping the parallel inner row as companion.

    Returns the corner path ending at the next degree-2 vertex, or ``None``
    when the walk terminates at a cut vertex or a degree-4 vertex.  Raises
    :class:`StructuralError` when the companion row breaks, which cannot
    happen on a biconnected solid grid.
    """
    if first in cuts:
        return None
    deg = g.degree(first)
    if deg == 2:
        return (v, first)
    if deg != 3:
        return None
    path = [v, first]
    u_prev, u, x = v, first, other
    for _ in range(g.n):
        adj_x = g.adj[x]
        commons = [w for w in g.adj[u] if w != u_prev and w in adj_x]
        if len(commons) != 1:
            raise StructuralError(
                "expected exactly one fresh common neighbour on the inner row",
                vertex=u,
            )
        x_next = commons[0]
        forward = [w for w in g.adj[u] if w != u_prev and w != x_next]
        if len(forward) != 1:
            raise StructuralError("boundary walk lost its direction", vertex=u)
        u_next = forward[0]
        if u_next in cuts:
            return None
        deg = g.degree(u_next)
        if deg == 2:
            path.append(u_next)
            return tuple(path)
        if deg == 4:
            return None
        if deg != 3:
            raise StructuralError(f"unexpected degree {deg}", vertex=u_next)
        path.append(u_next)
        u_prev, u, x = u, u_next, x_next
    raise StructuralError("boundary walk failed to terminate", vertex=v)


def corner_paths(g: Graph) -> list[tuple[int, ...]]:
    """All corner paths, canonicalised with the smaller end-vertex first and
    sorted.  Works without an embedding via the boundary walk."""
    if not is_connected(g):
        raise DisconnectedGraphError("corner paths need a connected graph")
    cuts = articulation_points(g)
    found: set[tuple[int, ...]] = set()
    for v in range(g.n):
        if g.degree(v) != 2 or v in cuts:
            continue
        a, b = g.adj[v]
        for first, other in ((a, b), (b, a)):
            path = _corner_walk(g, cuts, v, first, other)
            if path is not None:
                if path[0] > path[-1]:
                    path = tuple(reversed(path))
                found.add(path)
    return sorted(found)


def corner_vertices(g: Graph) -> frozenset[int]:
    """Degree-1 vertices plus end-vertices of corner paths, in O(n) total.

    The input is trusted to be a solid grid graph; a broken companion-row
    step raises :class:`StructuralError` naming the offending vertex.
    """
    if g.n == 1:
        return frozenset({0})
    if not is_connected(g):
        raise DisconnectedGraphError("corner detection needs a connected graph")
    cuts = articulation_points(g)
    corners = {v for v in range(g.n) if g.degree(v) == 1}
    for v in range(g.n):
        if g.degree(v) != 2 or v in cuts or v in corners:
            continue
        a, b = g.adj[v]
        for first, other in ((a, b), (b, a)):
            path = _corner_walk(g, cuts, v, first, other)
            if path is not None:
                corners.add(path[0])
                corners.add(path[-1])
                break
    return frozenset(corners)


def corner_vertices_from_embedding(g: Graph, emb: GridEmbedding) -> frozenset[int]:
    """Corner detection using the coordinates: split every maximal straight
    run of adjacent vertices at unusable vertices and collect the segments
    with degree-2 ends and degree-3 interiors."""
    if len(emb.coords) != g.n:
        raise ValidationError("embedding does not cover the vertex set")
    if g.n == 1:
        return frozenset({0})
    if not is_connected(g):
        raise DisconnectedGraphError("corner detection needs a connected graph")
    cuts = articulation_points(g)
    corners = {v for v in range(g.n) if g.degree(v) == 1}

    def scan(run: list[int]) -> None:
        anchor = None
        prev = None
        for v in run:
            if prev is not None and not g.has_edge(prev, v):
                anchor = None
            deg = g.degree(v)
            if v in cuts or deg not in (2, 3):
                anchor = None
            elif deg == 2:
                if anchor is not None:
                    corners.add(anchor)
                    corners.add(v)
                anchor = v
            prev = v

    by_row: dict[int, list[int]] = {}
    by_col: dict[int, list[int]] = {}
    for v, (x, y) in enumerate(emb.coords):
        by_row.setdefault(y, []).append(v)
        by_col.setdefault(x, []).append(v)
    for y, run in by_row.items():
        run.sort(key=lambda v: emb.coords[v][0])
        scan(run)
    for x, run in by_col.items():
        run.sort(key=lambda v: emb.coords[v][1])
        scan(run)
    return frozenset(corners)


def grid_3approx(
    g: Graph, emb: GridEmbedding | None = None, check: bool = True
) -> SolveReport:
    """Geodetic set of a solid grid graph via corner vertices.

    When an embedding is supplied it is validated first and corner detection
    runs on the coordinates; otherwise the embedding-free boundary walk is
    used.  With ``check=True`` the result is re-verified with the geodetic
    checker (skip for very large instances).
    """
    t0 = time.perf_counter()
    if not is_connected(g):
        raise DisconnectedGraphError("grid approximation needs a connected graph")
    if emb is not None:
        report = validate_solid_grid(g, emb)
        if not report.ok:
            raise ValidationError(
                "not a solid grid embedding: " + "; ".join(report.violations)
            )
    if g.n == 1:
        witness = frozenset({0})
    elif g.n == 2:
        witness = frozenset({0, 1})
    elif emb is not None:
        witness = corner_vertices_from_embedding(g, emb)
    else:
        witness = corner_vertices(g)
    if check and not is_geodetic_set(g, witness):
        raise GeodeticError(
            "corner set is not geodetic; input is not a solid grid graph"
        )
    return SolveReport(len(witness), witness, 0, time.perf_counter() - t0)
