"""Finite simple graphs viewed as extended metric spaces.

Vertices are the integers ``0..n-1``.  Distances are shortest-path lengths
computed by breadth-first search; vertices in different components are at
distance :data:`INF`.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

INF = float("inf")

Edge = tuple[int, int]


class GraphError(ValueError):
    pass


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def _bfs(adj: Sequence[Sequence[int]], src: int) -> list:
    dist = [INF] * len(adj)
    dist[src] = 0
    queue = deque([src])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in adj[u]:
            if dist[w] == INF:
                dist[w] = du
                queue.append(w)
    return dist


class Graph:
    """Immutable simple undirected graph with all-pairs distances."""

    __slots__ = ("n", "edges", "adj", "dist")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise GraphError("vertex count must be nonnegative")
        es = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {(u, v)} has a vertex outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            es.add(_norm_edge(u, v))
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in es:
            adj[u].append(v)
            adj[v].append(u)
        self.n = n
        self.edges: frozenset[Edge] = frozenset(es)
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in adj)
        self.dist: tuple[tuple, ...] = tuple(tuple(_bfs(self.adj, s)) for s in range(n))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={len(self.edges)})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __getstate__(self):
        return (self.n, sorted(self.edges))

    def __setstate__(self, state):
        n, edges = state
        g = Graph(n, edges)
        for name in Graph.__slots__:
            object.__setattr__(self, name, getattr(g, name))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge(u, v) in self.edges

    def d(self, u: int, v: int):
        return self.dist[u][v]

    def diameter(self) -> int:
        """Largest finite distance."""
        return max((x for row in self.dist for x in row if x != INF), default=0)

    def components(self) -> list[list[int]]:
        seen: set[int] = set()
        comps = []
        for s in range(self.n):
            if s in seen:
                continue
            comp = [v for v in range(self.n) if self.dist[s][v] != INF]
            seen.update(comp)
            comps.append(comp)
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or all(x != INF for x in self.dist[0])

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.sorted_edges()]}

    @classmethod
    def from_json(cls, data: dict) -> "Graph":
        try:
            return cls(int(data["n"]), data.get("edges", []))
        except (KeyError, TypeError, IndexError) as exc:
            raise GraphError(f"malformed graph JSON: {exc}") from exc

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges])


def build_graph(n: int, edge_list: Iterable[Sequence[int]]) -> Graph:
    return Graph(n, edge_list)


# -- family constructors ----------------------------------------------------

def cycle(n: int) -> Graph:
    """Cycle C_n on vertices 0..n-1 in cyclic order."""
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    """Path graph on n vertices 0-1-...-(n-1)."""
    if n < 1:
        raise GraphError("path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def empty(n: int) -> Graph:
    return Graph(n, [])


def tree(edge_list: Sequence[Sequence[int]]) -> Graph:
    """Tree from an edge list; vertex count is inferred as ``len(edges) + 1``."""
    n = len(edge_list) + 1
    g = Graph(n, edge_list)
    if g.num_edges != n - 1 or not g.is_connected():
        raise GraphError("edge list is not a tree")
    return g


def wheel(n: int) -> Graph:
    """Wheel with an n-cycle rim on 0..n-1 and the hub at vertex n."""
    if n < 3:
        raise GraphError("wheel needs a rim of at least 3 vertices")
    rim = [(i, (i + 1) % n) for i in range(n)]
    return Graph(n + 1, rim + [(i, n) for i in range(n)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def square_polyomino(cells: Iterable[Sequence[int]]) -> Graph:
    """Grid graph of a set of unit squares given by lower-left corners.

    Vertices are the distinct corner points sorted by ``(x, y)``; edges are
    the unit segments on cell boundaries.
    """
    cellset = {(int(c[0]), int(c[1])) for c in cells}
    if not cellset:
        raise GraphError("polyomino needs at least one cell")
    # edge-connectivity of cells
    start = min(cellset)
    seen = {start}
    stack = [start]
    while stack:
        x, y = stack.pop()
        for nb in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)):
            if nb in cellset and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    if seen != cellset:
        raise GraphError("polyomino cells are not edge-connected")
    points = set()
    segs = set()
    for x, y in cellset:
        corners = [(x, y), (x + 1, y), (x + 1, y + 1), (x, y + 1)]
        points.update(corners)
        for i in range(4):
            a, b = corners[i], corners[(i + 1) % 4]
            segs.add((min(a, b), max(a, b)))
    order = sorted(points)
    index = {p: i for i, p in enumerate(order)}
    return Graph(len(order), [(index[a], index[b]) for a, b in segs])


def family(kind: str, *args) -> Graph:
    """Dispatch a named family: cycle, path, complete, empty, tree, wheel,
    petersen, polyomino."""
    table = {
        "cycle": cycle,
        "path": path,
        "complete": complete,
        "empty": empty,
        "tree": tree,
        "wheel": wheel,
        "petersen": petersen,
        "polyomino": square_polyomino,
        "square_polyomino": square_polyomino,
    }
    try:
        ctor = table[kind]
    except KeyError:
        raise GraphError(f"unknown family {kind!r}") from None
    return ctor(*args)


# -- gluing ------------------------------------------------------------------

@dataclass(frozen=True)
class Attachment:
    """Identify part of a new piece with part of the graph built so far.

    ``piece`` and ``target`` are either single vertices or edges ``(a, b)``;
    for edges, ``piece[0]`` is identified with ``target[0]`` and ``piece[1]``
    with ``target[1]``.
    """

    piece: int | tuple[int, int]
    target: int | tuple[int, int]

    @property
    def is_edge(self) -> bool:
        return not isinstance(self.piece, int)


@dataclass(frozen=True)
class GlueSpec:
    pieces: tuple[Graph, ...]
    attachments: tuple[Attachment, ...] = field(default=())

    def __post_init__(self):
        if not self.pieces:
            raise GraphError("glue needs at least one piece")
        if len(self.attachments) != len(self.pieces) - 1:
            raise GraphError("need one attachment per piece after the first")


def glue_with_maps(spec: GlueSpec) -> tuple[Graph, list[list[int]]]:
    """Glue pieces in order; also return, per piece, its vertex map into the result."""
    first = spec.pieces[0]
    n = first.n
    edges = set(first.edges)
    maps = [list(range(first.n))]
    for piece, att in zip(spec.pieces[1:], spec.attachments):
        ident: dict[int, int] = {}
        if att.is_edge:
            (a, b), (u, v) = att.piece, att.target
            if not piece.has_edge(a, b):
                raise GraphError(f"{(a, b)} is not an edge of the piece")
            if _norm_edge(u, v) not in edges:
                raise GraphError(f"{(u, v)} is not an edge of the partial gluing")
            ident = {a: u, b: v}
        else:
            a, u = att.piece, att.target
            if not (0 <= a < piece.n and 0 <= u < n):
                raise GraphError("vertex attachment out of range")
            ident = {a: u}
        vmap = []
        for w in range(piece.n):
            if w in ident:
                vmap.append(ident[w])
            else:
                vmap.append(n)
                n += 1
        for x, y in piece.edges:
            edges.add(_norm_edge(vmap[x], vmap[y]))
        maps.append(vmap)
    return Graph(n, edges), maps


def glue(spec: GlueSpec) -> Graph:
    return glue_with_maps(spec)[0]


def glue_chain(pieces: Sequence[Graph], attachments: Sequence[Attachment]) -> Graph:
    return glue(GlueSpec(tuple(pieces), tuple(attachments)))


def cartesian_product(g1: Graph, g2: Graph) -> Graph:
    """Box product; vertex (x1, x2) is numbered ``x1 * g2.n + x2``."""
    n2 = g2.n
    edges = []
    for x1 in range(g1.n):
        for a, b in g2.edges:
            edges.append((x1 * n2 + a, x1 * n2 + b))
    for x2 in range(n2):
        for a, b in g1.edges:
            edges.append((a * n2 + x2, b * n2 + x2))
    return Graph(g1.n * n2, edges)


# -- subgraphs, convexity, projections -------------------------------------

@dataclass(frozen=True)
class SubgraphRef:
    """Induced subgraph of ``parent`` on ``vertices``."""

    parent: Graph
    vertices: frozenset[int]

    def __init__(self, parent: Graph, vertices: Iterable[int]):
        vs = frozenset(int(v) for v in vertices)
        if any(not 0 <= v < parent.n for v in vs):
            raise GraphError("subgraph vertex outside parent")
        object.__setattr__(self, "parent", parent)
        object.__setattr__(self, "vertices", vs)

    @property
    def order(self) -> list[int]:
        return sorted(self.vertices)

    @property
    def edges(self) -> frozenset[Edge]:
        return frozenset(e for e in self.parent.edges if e[0] in self.vertices and e[1] in self.vertices)

    def graph(self) -> Graph:
        """The induced subgraph, relabelled to 0..|H|-1 in increasing parent order."""
        order = self.order
        index = {v: i for i, v in enumerate(order)}
        return Graph(len(order), [(index[u], index[v]) for u, v in self.edges])

    def __and__(self, other: "SubgraphRef") -> "SubgraphRef":
        return SubgraphRef(self.parent, self.vertices & other.vertices)


def is_convex(g: Graph, h: SubgraphRef) -> bool:
    order = h.order
    hg = h.graph()
    for i, x in enumerate(order):
        for j, y in enumerate(order):
            if hg.dist[i][j] != g.dist[x][y]:
                return False
    return True


class NotConvexError(GraphError):
    pass


def projection(g: Graph, h: SubgraphRef) -> dict[int, int] | None:
    """Nearest-point map onto a convex subgraph, or None when ``g`` does not
    project onto ``h``.

    Raises NotConvexError when ``h`` is not convex in ``g``.
    """
    if not is_convex(g, h):
        raise NotConvexError("subgraph is not convex")
    hv = h.order
    pi: dict[int, int] = {}
    for x in range(g.n):
        dx = g.dist[x]
        if all(dx[v] == INF for v in hv):
            continue
        found = None
        for c in hv:
            if all(dx[v] == dx[c] + g.dist[c][v] for v in hv):
                found = c
                break
        if found is None:
            return None
        pi[x] = found
    return pi


def geodesic_counts(g: Graph) -> list[list[int]]:
    """Number of shortest paths between each ordered pair (0 across components)."""
    counts = []
    for s in range(g.n):
        ds = g.dist[s]
        c = [0] * g.n
        c[s] = 1
        for v in sorted(range(g.n), key=lambda w: ds[w]):
            if ds[v] == INF or v == s:
                continue
            c[v] = sum(c[u] for u in g.adj[v] if ds[u] == ds[v] - 1)
        counts.append(c)
    return counts


def geodesic_stats(g: Graph) -> tuple[list[list[int]], int]:
    counts = geodesic_counts(g)
    return counts, max((c for row in counts for c in row), default=0)


def girth(g: Graph):
    """Length of a shortest cycle, INF for forests."""
    best = INF
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.num_edges == g.n - 1 and g.is_connected()
