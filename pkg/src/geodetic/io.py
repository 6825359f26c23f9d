"""Text formats for graphs, grid embeddings, and rotation systems.

All formats are UTF-8 line based; ``#`` starts a comment line and blank lines
are ignored.  Graph text starts with ``n <vertex_count>`` followed by one
``u v`` edge per line.  Grid files hold ``v x y`` coordinate lines and define
the graph implicitly through unit-distance adjacency.  Rotation files hold
``v: w0 w1 ...`` neighbor rings in counterclockwise order.
"""

from __future__ import annotations

from .errors import ParseError, ValidationError
from .gadgets import RotationSystem
from .graph import Graph
from .grid import GridEmbedding


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append((i, line))
    return out


def parse_graph_text(text: str) -> Graph:
    lines = _content_lines(text)
    if not lines:
        raise ParseError(1, "empty graph file")
    line_no, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] != "n" or not parts[1].isdigit():
        raise ParseError(line_no, f"expected header 'n <vertex_count>', got {header!r}")
    n = int(parts[1])
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for line_no, line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(line_no, f"expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(line_no, f"non-integer endpoint in {line!r}")
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(line_no, f"endpoint out of range in {line!r}")
        if u == v:
            raise ParseError(line_no, f"self-loop {line!r}")
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise ParseError(line_no, f"duplicate edge {line!r}")
        seen.add(e)
        edges.append(e)
    return Graph(n, edges)


def write_graph_text(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_grid_text(text: str) -> tuple[Graph, GridEmbedding]:
    lines = _content_lines(text)
    if not lines:
        raise ParseError(1, "empty grid file")
    coords: dict[int, tuple[int, int]] = {}
    for line_no, line in lines:
        parts = line.split()
        if len(parts) != 3:
            raise ParseError(line_no, f"expected 'v x y', got {line!r}")
        try:
            v, x, y = (int(p) for p in parts)
        except ValueError:
            raise ParseError(line_no, f"non-integer field in {line!r}")
        if v in coords:
            raise ParseError(line_no, f"duplicate vertex id {v}")
        coords[v] = (x, y)
    n = len(coords)
    if sorted(coords) != list(range(n)):
        raise ValidationError(f"vertex ids must be exactly 0..{n - 1}")
    points = tuple(coords[v] for v in range(n))
    if len(set(points)) != n:
        raise ValidationError("two vertices share coordinates")
    index = {p: v for v, p in enumerate(points)}
    edges = []
    for v, (x, y) in enumerate(points):
        for q in ((x + 1, y), (x, y + 1)):
            w = index.get(q)
            if w is not None:
                edges.append((v, w) if v < w else (w, v))
    return Graph(n, edges), GridEmbedding(points)


def write_grid_text(emb: GridEmbedding) -> str:
    lines = [f"{v} {x} {y}" for v, (x, y) in enumerate(emb.coords)]
    return "\n".join(lines) + "\n"


def parse_rotation_text(text: str, g: Graph) -> RotationSystem:
    lines = _content_lines(text)
    rings: dict[int, tuple[int, ...]] = {}
    for line_no, line in lines:
        head, sep, tail = line.partition(":")
        if not sep:
            raise ParseError(line_no, f"expected 'v: w0 w1 ...', got {line!r}")
        try:
            v = int(head.strip())
            ring = tuple(int(p) for p in tail.split())
        except ValueError:
            raise ParseError(line_no, f"non-integer field in {line!r}")
        if v in rings:
            raise ParseError(line_no, f"duplicate rotation for vertex {v}")
        rings[v] = ring
    if sorted(rings) != list(range(g.n)):
        raise ValidationError(f"rotation file must list every vertex 0..{g.n - 1}")
    rot = RotationSystem(tuple(rings[v] for v in range(g.n)))
    rot.validate(g)
    return rot
