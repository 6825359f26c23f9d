"""Instance generators for tests, benchmarks, and the CLI."""

from __future__ import annotations

import random
from itertools import combinations
from typing import Iterator

from .errors import ValidationError
from .graph import Graph
from .grid import GridEmbedding


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValidationError("cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, list(combinations(range(n), 2)))


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def rect_grid(width: int, height: int) -> tuple[Graph, GridEmbedding]:
    """Full rectangular grid with ``width * height`` vertices; vertex ids run
    row by row, so vertex ``y*width + x`` sits at ``(x, y)``."""
    if width < 1 or height < 1:
        raise ValidationError("rectangle needs positive dimensions")
    adj: list[list[int]] = []
    coords: list[tuple[int, int]] = []
    for y in range(height):
        base = y * width
        for x in range(width):
            v = base + x
            row = []
            if y > 0:
                row.append(v - width)
            if x > 0:
                row.append(v - 1)
            if x < width - 1:
                row.append(v + 1)
            if y < height - 1:
                row.append(v + width)
            adj.append(row)
            coords.append((x, y))
    return Graph.from_adjacency(adj, check=False), GridEmbedding(tuple(coords))


def random_connected_graph(n: int, seed: int, extra_edges: int | None = None) -> Graph:
    """Random connected graph: a random attachment tree plus extra edges."""
    if n < 1:
        raise ValidationError("need at least one vertex")
    rng = random.Random(seed)
    edges = set()
    for v in range(1, n):
        edges.add((rng.randrange(v), v))
    non_edges = [
        (u, v) for u, v in combinations(range(n), 2) if (u, v) not in edges
    ]
    if extra_edges is None:
        extra_edges = rng.randint(0, n)
    extra_edges = min(extra_edges, len(non_edges))
    edges.update(rng.sample(non_edges, extra_edges))
    return Graph(n, sorted(edges))


def random_polyomino(cells: int, seed: int) -> tuple[Graph, GridEmbedding]:
    """Seeded hole-free polyomino, returned as its lattice-point graph.

    Cells accrete one at a time onto a random boundary position; enclosed
    empty cells are filled afterwards, so every bounded face of the resulting
    point graph is a unit square.
    """
    if cells < 1:
        raise ValidationError("need at least one cell")
    rng = random.Random(seed)
    cell_set = {(0, 0)}
    while len(cell_set) < cells:
        frontier = sorted(
            {
                (x + dx, y + dy)
                for x, y in cell_set
                for dx, dy in ((1, 0), (-1, 0), (0, 1), (0, -1))
            }
            - cell_set
        )
        cell_set.add(frontier[rng.randrange(len(frontier))])

    # Fill enclosed holes: flood the complement from outside the bounding box.
    xs = [c[0] for c in cell_set]
    ys = [c[1] for c in cell_set]
    x0, x1 = min(xs) - 1, max(xs) + 1
    y0, y1 = min(ys) - 1, max(ys) + 1
    outside = set()
    stack = [(x0, y0)]
    while stack:
        c = stack.pop()
        if c in outside or c in cell_set:
            continue
        x, y = c
        if not (x0 <= x <= x1 and y0 <= y <= y1):
            continue
        outside.add(c)
        stack.extend(((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)))
    for x in range(x0, x1 + 1):
        for y in range(y0, y1 + 1):
            if (x, y) not in cell_set and (x, y) not in outside:
                cell_set.add((x, y))

    points = sorted(
        {
            (x + dx, y + dy)
            for x, y in cell_set
            for dx in (0, 1)
            for dy in (0, 1)
        }
    )
    index = {p: i for i, p in enumerate(points)}
    edges = []
    for (x, y), i in index.items():
        for q in ((x + 1, y), (x, y + 1)):
            j = index.get(q)
            if j is not None:
                edges.append((i, j))
    return Graph(len(points), edges), GridEmbedding(tuple(points))


def labeled_connected_graphs(n: int) -> Iterator[Graph]:
    """Every connected labeled graph on exactly ``n`` vertices, in edge-mask
    order.  Intended for exhaustive small-``n`` sweeps (``n <= 6`` is cheap)."""
    pairs = list(combinations(range(n), 2))
    full = (1 << n) - 1
    for mask in range(1 << len(pairs)):
        adj_masks = [0] * n
        for i, (u, v) in enumerate(pairs):
            if (mask >> i) & 1:
                adj_masks[u] |= 1 << v
                adj_masks[v] |= 1 << u
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            f = frontier
            while f:
                v = (f & -f).bit_length() - 1
                f &= f - 1
                nxt |= adj_masks[v]
            frontier = nxt & ~seen
            seen |= frontier
        if seen != full:
            continue
        yield Graph(n, [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1])
