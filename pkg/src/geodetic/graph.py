"""Core graph machinery: adjacency-list graphs, hop distances, shortest-path
intervals, line graphs, and the biconnected decomposition.

Vertices are the integers ``0..n-1``.  Edges are unordered pairs, always
canonicalised with the smaller endpoint first.  All structures here are
immutable after construction and safe to share between threads.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator

from .errors import DisconnectedGraphError, ValidationError

#: Distance marker for vertex pairs in different connected components.
UNREACHABLE = -1


def canonical_edge(u: int, v: int) -> tuple[int, int]:
    """Return the edge ``{u, v}`` as an ordered pair, smaller id first."""
    return (u, v) if u < v else (v, u)


class Graph:
    """A simple undirected graph with sorted adjacency lists.

    Invariants enforced at construction: no self-loops, no parallel edges,
    symmetric adjacency, and vertex ids within ``0..n-1``.
    """

    __slots__ = ("n", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValidationError(f"vertex count must be non-negative, got {n}")
        neighbor_sets: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValidationError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValidationError(f"self-loop at vertex {u}")
            if v in neighbor_sets[u]:
                raise ValidationError(f"duplicate edge ({u},{v})")
            neighbor_sets[u].add(v)
            neighbor_sets[v].add(u)
        self.n = n
        self.adj: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(s)) for s in neighbor_sets
        )

    @classmethod
    def from_adjacency(cls, adj: list[list[int]], check: bool = True) -> "Graph":
        """Build from prebuilt adjacency lists.

        With ``check=False`` the lists are trusted to be sorted, symmetric and
        loop-free; intended for generators that construct graphs too large for
        edge-by-edge validation.
        """
        g = cls.__new__(cls)
        g.n = len(adj)
        g.adj = tuple(tuple(row) for row in adj)
        if check:
            seen = set()
            for u, row in enumerate(g.adj):
                prev = -1
                for v in row:
                    if not (0 <= v < g.n) or v == u:
                        raise ValidationError(f"bad neighbor {v} of vertex {u}")
                    if v <= prev:
                        raise ValidationError(f"adjacency of {u} not sorted/unique")
                    prev = v
                    seen.add((u, v))
            for u, v in seen:
                if (v, u) not in seen:
                    raise ValidationError(f"asymmetric adjacency ({u},{v})")
        return g

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> list[tuple[int, int]]:
        """All edges in canonical order, sorted lexicographically."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    @property
    def edge_count(self) -> int:
        return sum(len(row) for row in self.adj) // 2

    def neighbor_masks(self) -> list[int]:
        """Per-vertex bitmask of neighbors (bit ``v`` set iff ``v`` adjacent)."""
        masks = []
        for row in self.adj:
            m = 0
            for v in row:
                m |= 1 << v
            masks.append(m)
        return masks

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


class DistanceOracle:
    """All-pairs hop distances; ``UNREACHABLE`` marks disconnected pairs."""

    __slots__ = ("dist",)

    def __init__(self, dist: tuple[tuple[int, ...], ...]):
        self.dist = dist

    def distance(self, u: int, v: int) -> int:
        return self.dist[u][v]

    def reachable(self, u: int, v: int) -> bool:
        return self.dist[u][v] != UNREACHABLE


def bfs_all_pairs(g: Graph) -> DistanceOracle:
    """Exact hop distances by one breadth-first search per vertex."""
    n = g.n
    adj = g.adj
    rows = []
    for src in range(n):
        row = [UNREACHABLE] * n
        row[src] = 0
        queue = deque([src])
        while queue:
            u = queue.popleft()
            du = row[u] + 1
            for w in adj[u]:
                if row[w] == UNREACHABLE:
                    row[w] = du
                    queue.append(w)
        rows.append(tuple(row))
    return DistanceOracle(tuple(rows))


def is_connected(g: Graph) -> bool:
    """True for the one-vertex graph and any graph where BFS from 0 reaches all."""
    if g.n == 0:
        return False
    seen = bytearray(g.n)
    seen[0] = 1
    queue = deque([0])
    count = 1
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if not seen[w]:
                seen[w] = 1
                count += 1
                queue.append(w)
    return count == g.n


def require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise DisconnectedGraphError("operation requires a connected graph")


def interval(g: Graph, d: DistanceOracle, u: int, v: int) -> frozenset[int]:
    """Vertices lying on at least one shortest ``u``-``v`` path.

    A vertex ``x`` qualifies exactly when ``d(u,x) + d(x,v) = d(u,v)``; the
    endpoints always qualify and ``interval(g, d, u, u) == {u}``.
    """
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise ValidationError(f"vertex pair ({u},{v}) out of range")
    duv = d.distance(u, v)
    if duv == UNREACHABLE:
        raise DisconnectedGraphError(f"vertices {u} and {v} are not connected")
    row_u, row_v = d.dist[u], d.dist[v]
    return frozenset(
        x
        for x in range(g.n)
        if row_u[x] != UNREACHABLE and row_u[x] + row_v[x] == duv
    )


def _pair_cover_masks(g: Graph, d: DistanceOracle) -> list[list[int]]:
    """Bitmask form of ``interval`` for every vertex pair (diagonal = {u})."""
    n = g.n
    masks = [[0] * n for _ in range(n)]
    dist = d.dist
    for u in range(n):
        masks[u][u] = 1 << u
        row_u = dist[u]
        for v in range(u + 1, n):
            duv = row_u[v]
            if duv == UNREACHABLE:
                continue
            row_v = dist[v]
            m = 0
            for x in range(n):
                dux = row_u[x]
                if dux != UNREACHABLE and dux + row_v[x] == duv:
                    m |= 1 << x
            masks[u][v] = m
            masks[v][u] = m
    return masks


def is_geodetic_set(
    g: Graph, s: Iterable[int], oracle: DistanceOracle | None = None
) -> bool:
    """True when the pairwise shortest-path intervals of ``s`` cover ``V(G)``.

    Requires a connected graph; membership in ``s`` covers a vertex by itself
    (the pair ``(u, u)`` contributes ``{u}``).
    """
    require_connected(g)
    members = sorted(set(s))
    for v in members:
        if not (0 <= v < g.n):
            raise ValidationError(f"vertex {v} out of range")
    if not members:
        return False
    if oracle is None:
        oracle = bfs_all_pairs(g)
    full = (1 << g.n) - 1
    covered = 0
    dist = oracle.dist
    for i, u in enumerate(members):
        covered |= 1 << u
        row_u = dist[u]
        for v in members[i + 1 :]:
            duv = row_u[v]
            row_v = dist[v]
            for x in range(g.n):
                if row_u[x] + row_v[x] == duv:
                    covered |= 1 << x
        if covered == full:
            return True
    return covered == full


class LineGraphMap:
    """A line graph together with the vertex <-> original-edge bijection.

    ``edge_of_vertex[i]`` is the edge of the source graph represented by
    line-graph vertex ``i``; ``index_of`` inverts the map.
    """

    __slots__ = ("line_graph", "edge_of_vertex", "_index")

    def __init__(self, line_graph: Graph, edge_of_vertex: tuple[tuple[int, int], ...]):
        self.line_graph = line_graph
        self.edge_of_vertex = edge_of_vertex
        self._index = {e: i for i, e in enumerate(edge_of_vertex)}

    def index_of(self, e: tuple[int, int]) -> int:
        try:
            return self._index[canonical_edge(*e)]
        except KeyError:
            raise ValidationError(f"({e[0]},{e[1]}) is not an edge of the graph")


def line_graph(g: Graph) -> LineGraphMap:
    """Build the line graph: one vertex per edge, adjacency iff shared endpoint."""
    edges = g.edges()
    if not edges:
        raise ValidationError("line graph of an edgeless graph is undefined")
    index = {e: i for i, e in enumerate(edges)}
    pairs = set()
    for v in range(g.n):
        incident = [index[canonical_edge(v, w)] for w in g.adj[v]]
        for a in range(len(incident)):
            for b in range(a + 1, len(incident)):
                pairs.add(canonical_edge(incident[a], incident[b]))
    lg = Graph(len(edges), sorted(pairs))
    return LineGraphMap(line_graph=lg, edge_of_vertex=tuple(edges))


def edge_distance(g: Graph, e: tuple[int, int], f: tuple[int, int]) -> int:
    """Hop distance between two edges: 0 for the same edge, 1 when they share
    a vertex, and in general the hop distance of the corresponding line-graph
    vertices."""
    lg = line_graph(g)
    ei = lg.index_of(e)
    fi = lg.index_of(f)
    if ei == fi:
        return 0
    # Single-source BFS in the line graph.
    dist = [UNREACHABLE] * lg.line_graph.n
    dist[ei] = 0
    queue = deque([ei])
    while queue:
        u = queue.popleft()
        if u == fi:
            return dist[u]
        for w in lg.line_graph.adj[u]:
            if dist[w] == UNREACHABLE:
                dist[w] = dist[u] + 1
                queue.append(w)
    raise DisconnectedGraphError(f"edges {e} and {f} are not connected")


def articulation_points(g: Graph) -> frozenset[int]:
    """Cut vertices by the iterative lowpoint algorithm; O(n + m).

    Uses flat index arrays instead of per-vertex frames so that million-vertex
    grids traverse with steady allocation behavior.
    """
    n = g.n
    adj = g.adj
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    ptr = [0] * n
    cuts = set()
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        stack = [root]
        while stack:
            v = stack[-1]
            row = adj[v]
            i = ptr[v]
            if i < len(row):
                ptr[v] = i + 1
                w = row[i]
                if w == parent[v]:
                    continue
                dw = disc[w]
                if dw == -1:
                    parent[w] = v
                    disc[w] = low[w] = timer
                    timer += 1
                    if v == root:
                        root_children += 1
                    stack.append(w)
                elif dw < low[v]:
                    low[v] = dw
            else:
                stack.pop()
                if stack:
                    pv = stack[-1]
                    if low[v] < low[pv]:
                        low[pv] = low[v]
                    if pv != root and low[v] >= disc[pv]:
                        cuts.add(pv)
        if root_children >= 2:
            cuts.add(root)
    return frozenset(cuts)


def biconnected_decomposition(
    g: Graph,
) -> tuple[frozenset[int], list[list[int]]]:
    """Cut vertices and the vertex sets of the maximal biconnected subgraphs.

    Every edge belongs to exactly one component; a bridge yields a two-vertex
    component; isolated vertices belong to no component.  Components are
    returned as sorted vertex lists in a deterministic order.
    """
    n = g.n
    adj = g.adj
    disc = [-1] * n
    low = [0] * n
    cuts = set()
    components: list[list[int]] = []
    edge_stack: list[tuple[int, int]] = []
    timer = 0

    def pop_component(u: int, w: int) -> None:
        verts = set()
        while True:
            a, b = edge_stack.pop()
            verts.add(a)
            verts.add(b)
            if (a, b) == (u, w):
                break
        components.append(sorted(verts))

    for root in range(n):
        if disc[root] != -1 or not adj[root]:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        stack: list[tuple[int, int, Iterator[int]]] = [(root, -1, iter(adj[root]))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if disc[w] == -1:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    if v == root:
                        root_children += 1
                    stack.append((w, v, iter(adj[w])))
                    advanced = True
                    break
                if disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            if advanced:
                continue
            stack.pop()
            if stack:
                pv = stack[-1][0]
                if low[v] < low[pv]:
                    low[pv] = low[v]
                if low[v] >= disc[pv]:
                    pop_component(pv, v)
                    if pv != root:
                        cuts.add(pv)
        if root_children >= 2:
            cuts.add(root)
    components.sort(key=lambda c: (c[0], len(c), c))
    return frozenset(cuts), components
