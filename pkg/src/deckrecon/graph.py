"""Core labeled-graph representation and metric/connectivity primitives.

Graphs are simple, undirected, on at most 16 densely indexed vertices.
Adjacency lives in one bitmask per vertex, so neighborhood algebra is
plain integer arithmetic. Vertex sets throughout the package are int
bitmasks; ``bits`` / ``mask_of`` convert to and from iterables.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations

from .errors import DisconnectedInput, MissingEdge, MissingVertex, OversizeGraph

MAX_VERTICES = 16

#: Sentinel for unreachable pairs; compares greater than any hop count.
INFINITY = float("inf")


def bits(mask: int):
    """Iterate the set bit positions of a mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices) -> int:
    """Pack an iterable of vertex indices into a bitmask."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Immutable simple graph with bitmask adjacency rows."""

    __slots__ = ("n", "rows", "_hash")

    def __init__(self, n: int, rows):
        if not 1 <= n <= MAX_VERTICES:
            raise OversizeGraph(f"vertex count {n} outside 1..{MAX_VERTICES}")
        rows = tuple(rows)
        if len(rows) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(rows)}")
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise ValueError(f"row {v} references vertices >= {n}")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
        for v, row in enumerate(rows):
            for u in bits(row):
                if not rows[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        self.n = n
        self.rows = rows
        self._hash = hash((n, rows))

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degree_sequence(self) -> tuple:
        """Degrees sorted descending."""
        return tuple(sorted((row.bit_count() for row in self.rows), reverse=True))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def edges(self):
        return [(u, v) for u in range(self.n) for v in bits(self.rows[u]) if u < v]

    def add_edge(self, u: int, v: int) -> "Graph":
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, rows)

    def permute(self, perm) -> "Graph":
        """Relabel: vertex v of self becomes perm[v] of the result."""
        rows = [0] * self.n
        for v, row in enumerate(self.rows):
            new = 0
            for u in bits(row):
                new |= 1 << perm[u]
            rows[perm[v]] = new
        return Graph(self.n, rows)

    def add_vertex(self, neighbors_mask: int) -> "Graph":
        """Append vertex ``n`` adjacent to the masked vertices."""
        new = self.n
        rows = [row | ((neighbors_mask >> v & 1) << new) for v, row in enumerate(self.rows)]
        rows.append(neighbors_mask)
        return Graph(new + 1, rows)

    def induced(self, keep_mask: int) -> "Graph":
        """Induced subgraph on the masked vertices, indices compacted in order."""
        kept = list(bits(keep_mask))
        if not kept:
            raise ValueError("induced subgraph must keep at least one vertex")
        pos = {v: i for i, v in enumerate(kept)}
        rows = []
        for v in kept:
            row = 0
            for u in bits(self.rows[v] & keep_mask):
                row |= 1 << pos[u]
            rows.append(row)
        return Graph(len(kept), rows)


def delete_vertex(g: Graph, v: int) -> Graph:
    """Card ``g - v`` with order-preserving index compaction."""
    if not 0 <= v < g.n:
        raise MissingVertex(f"vertex {v} not in graph on {g.n} vertices")
    if g.n == 1:
        raise ValueError("cannot delete the last vertex")
    return g.induced(g.vertex_mask ^ (1 << v))


def delete_edge(g: Graph, e) -> Graph:
    """Edge-card ``g - e``; labels are preserved."""
    u, v = e
    if not g.has_edge(u, v):
        raise MissingEdge(f"edge {(u, v)} not in graph")
    rows = list(g.rows)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return Graph(g.n, rows)


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph(g.n, tuple((full ^ row) & ~(1 << v) for v, row in enumerate(g.rows)))


def reachable_mask(g: Graph, start: int, alive: int | None = None) -> int:
    """Mask of vertices reachable from ``start`` inside the ``alive`` mask."""
    if alive is None:
        alive = g.vertex_mask
    rows = g.rows
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= rows[v]
        frontier = nxt & alive & ~seen
        seen |= frontier
    return seen


def connected_components(g: Graph, alive: int | None = None):
    """Component masks of the subgraph induced on ``alive``, by lowest vertex."""
    if alive is None:
        alive = g.vertex_mask
    comps = []
    todo = alive
    while todo:
        start = (todo & -todo).bit_length() - 1
        comp = reachable_mask(g, start, alive)
        comps.append(comp)
        todo &= ~comp
    return comps


def is_connected(g: Graph) -> bool:
    return reachable_mask(g, 0) == g.vertex_mask


def distance_row(g: Graph, source: int):
    """Hop counts from ``source``; INFINITY for unreachable vertices."""
    rows = g.rows
    dist = [INFINITY] * g.n
    dist[source] = 0
    seen = 1 << source
    frontier = seen
    d = 0
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= rows[v]
        frontier = nxt & ~seen
        seen |= frontier
        d += 1
        for v in bits(frontier):
            dist[v] = d
    return dist


def distance_matrix(g: Graph):
    """All-pairs shortest-path hop counts (list of rows)."""
    return [distance_row(g, v) for v in range(g.n)]


def diameter(g: Graph):
    """Largest pairwise distance; INFINITY iff disconnected (n >= 2)."""
    worst = 0
    for v in range(g.n):
        row = distance_row(g, v)
        m = max(row)
        if m == INFINITY:
            return INFINITY
        if m > worst:
            worst = m
    return worst


def in_g2(g: Graph) -> bool:
    """Diameter exactly 2."""
    return diameter(g) == 2


def in_g3(g: Graph) -> bool:
    """Diameter 3 for both the graph and its complement."""
    return diameter(g) == 3 and diameter(complement(g)) == 3


def is_triangle_free(g: Graph) -> bool:
    rows = g.rows
    for u in range(g.n):
        for v in bits(rows[u]):
            if v > u and rows[u] & rows[v]:
                return False
    return True


def bipartition(g: Graph):
    """Two-coloring as a pair of masks, or None if an odd cycle exists.

    Per component, the class containing the component's lowest vertex goes
    into the first part.
    """
    color = [-1] * g.n
    part0 = part1 = 0
    rows = g.rows
    for comp in connected_components(g):
        start = (comp & -comp).bit_length() - 1
        color[start] = 0
        part0 |= 1 << start
        queue = deque([start])
        while queue:
            v = queue.popleft()
            cv = color[v]
            for u in bits(rows[v]):
                if color[u] == -1:
                    color[u] = 1 - cv
                    if color[u]:
                        part1 |= 1 << u
                    else:
                        part0 |= 1 << u
                    queue.append(u)
                elif color[u] == cv:
                    return None
    return part0, part1


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


def vertex_connectivity_by_subsets(g: Graph) -> int:
    """Connectivity via cut-set enumeration in increasing size."""
    if not is_connected(g):
        raise DisconnectedInput("connectivity undefined for disconnected graphs")
    n = g.n
    if g.edge_count == n * (n - 1) // 2:
        return n - 1
    for k in range(1, n - 1):
        for cut in combinations(range(n), k):
            alive = g.vertex_mask & ~mask_of(cut)
            if len(connected_components(g, alive)) > 1:
                return k
    return n - 1


def _max_vertex_flow(g: Graph, s: int, t: int) -> int:
    """Max number of internally vertex-disjoint s-t paths (s,t non-adjacent).

    Unit-capacity vertex-split network solved by BFS augmentation. Node 2v
    is v_in, 2v+1 is v_out.
    """
    n = g.n
    cap = {}
    for v in range(g.n):
        cap[(2 * v, 2 * v + 1)] = 1 if v not in (s, t) else n
        for u in bits(g.rows[v]):
            cap[(2 * v + 1, 2 * u)] = n
    adj = {}
    for a, b in list(cap):
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
        cap.setdefault((b, a), 0)
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while True:
        prev = {source: source}
        queue = deque([source])
        while queue and sink not in prev:
            a = queue.popleft()
            for b in adj.get(a, ()):
                if b not in prev and cap[(a, b)] > 0:
                    prev[b] = a
                    queue.append(b)
        if sink not in prev:
            return flow
        b = sink
        while b != source:
            a = prev[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1


def vertex_connectivity(g: Graph) -> int:
    """Connectivity via Menger-style max-flow over non-adjacent pairs."""
    if not is_connected(g):
        raise DisconnectedInput("connectivity undefined for disconnected graphs")
    n = g.n
    best = n - 1
    for s in range(n):
        for t in range(s + 1, n):
            if not g.has_edge(s, t):
                best = min(best, _max_vertex_flow(g, s, t))
    return best
