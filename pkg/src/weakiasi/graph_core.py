"""Simple undirected graphs, the six product constructions, and helpers.

Vertices are always 0..n-1. Edges are stored normalized (u < v). Graphs are
immutable after construction and every operation here is a pure function.

Product vertex numbering is fixed row-major: the pair (i, j) of factor
vertices becomes product vertex i * n2 + j. Corona and rooted products use
their own vertex maps because their vertex sets are not full grids.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field


class GraphError(ValueError):
    """Malformed graph input (bad endpoints, self-loops, isolated vertices)."""


def _normalize_edge(u, v):
    if u == v:
        raise GraphError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple finite undirected graph on vertices 0..n-1."""

    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __init__(self, n, edges=(), allow_isolated=False):
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        norm = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) has endpoint outside 0..{n - 1}")
            norm.add(_normalize_edge(u, v))
        if not allow_isolated:
            touched = {w for e in norm for w in e}
            isolated = [v for v in range(n) if v not in touched]
            if isolated:
                raise GraphError(
                    f"isolated vertices {isolated}; pass allow_isolated=True to accept"
                )
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(norm))

    @property
    def m(self):
        return len(self.edges)

    def sorted_edges(self):
        return sorted(self.edges)

    def has_edge(self, u, v):
        return _normalize_edge(u, v) in self.edges if u != v else False

    def neighbors(self, v):
        out = set()
        for a, b in self.edges:
            if a == v:
                out.add(b)
            elif b == v:
                out.add(a)
        return out

    def adjacency(self):
        """Neighbor sets for all vertices, computed in one pass."""
        adj = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def degree(self, v):
        return len(self.neighbors(v))

    def induced_subgraph(self, vertices):
        """Induced subgraph on the given vertices, relabeled 0..k-1.

        Returns (subgraph, old_id_by_new_id). Vertex order follows the
        sorted order of `vertices`.
        """
        verts = sorted(set(vertices))
        index = {v: i for i, v in enumerate(verts)}
        edges = [
            (index[u], index[v])
            for u, v in self.edges
            if u in index and v in index
        ]
        return Graph(len(verts), edges, allow_isolated=True), verts

    def is_connected(self):
        if self.n == 0:
            return True
        adj = self.adjacency()
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def to_json_dict(self):
        return {"n": self.n, "edges": [list(e) for e in self.sorted_edges()]}

    def to_json(self):
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json_dict(cls, d, allow_isolated=False):
        try:
            n = d["n"]
            edges = [tuple(e) for e in d["edges"]]
        except (KeyError, TypeError) as exc:
            raise GraphError(f"bad graph JSON: {exc}")
        return cls(n, edges, allow_isolated=allow_isolated)

    @classmethod
    def from_json(cls, text, allow_isolated=False):
        return cls.from_json_dict(json.loads(text), allow_isolated=allow_isolated)


# ---------------------------------------------------------------------------
# Named small graphs used throughout the test families.

def path_graph(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)], allow_isolated=(n == 1))


def cycle_graph(n):
    if n < 3:
        raise GraphError("cycles need at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n):
    return Graph(
        n,
        [(i, j) for i in range(n) for j in range(i + 1, n)],
        allow_isolated=(n == 1),
    )


def star_graph(leaves):
    """Star K_{1,leaves}: center 0 joined to each leaf."""
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def single_vertex():
    return Graph(1, [], allow_isolated=True)


# ---------------------------------------------------------------------------
# Vertex maps for products.

@dataclass(frozen=True)
class ProductVertexMap:
    """Row-major bijection (i, j) <-> i * n2 + j for grid-style products."""

    n1: int
    n2: int

    def forward(self, i, j):
        if not (0 <= i < self.n1 and 0 <= j < self.n2):
            raise GraphError(f"({i},{j}) outside {self.n1}x{self.n2} grid")
        return i * self.n2 + j

    def inverse(self, pid):
        if not (0 <= pid < self.n1 * self.n2):
            raise GraphError(f"product vertex {pid} out of range")
        return divmod(pid, self.n2)


@dataclass(frozen=True)
class CoronaVertexMap:
    """Vertex layout of a corona: g1 keeps ids 0..p1-1, copy i of g2 follows."""

    p1: int
    p2: int

    def g1_vertex(self, i):
        if not 0 <= i < self.p1:
            raise GraphError(f"g1 vertex {i} out of range")
        return i

    def copy_vertex(self, i, j):
        """Product id of vertex j in the i-th copy of g2."""
        if not (0 <= i < self.p1 and 0 <= j < self.p2):
            raise GraphError(f"copy vertex ({i},{j}) out of range")
        return self.p1 + i * self.p2 + j

    def copy_vertices(self, i):
        return [self.copy_vertex(i, j) for j in range(self.p2)]

    def locate(self, pid):
        """Return ('g1', i) or ('copy', i, j) for a product vertex id."""
        if pid < self.p1:
            return ("g1", pid)
        i, j = divmod(pid - self.p1, self.p2)
        return ("copy", i, j)


@dataclass(frozen=True)
class RootedVertexMap:
    """Vertex layout of a rooted product.

    Merged vertices (g1 vertex i fused with the root of copy i) keep the
    ids 0..n1-1. The non-root vertices of copy i, in ascending g2-vertex
    order with the root skipped, occupy a contiguous block after that.
    """

    n1: int
    n2: int
    root: int

    def merged_vertex(self, i):
        if not 0 <= i < self.n1:
            raise GraphError(f"g1 vertex {i} out of range")
        return i

    def copy_vertex(self, i, v):
        """Product id of g2-vertex v inside copy i (v may be the root)."""
        if not (0 <= i < self.n1 and 0 <= v < self.n2):
            raise GraphError(f"copy vertex ({i},{v}) out of range")
        if v == self.root:
            return i
        offset = v if v < self.root else v - 1
        return self.n1 + i * (self.n2 - 1) + offset


# ---------------------------------------------------------------------------
# Products.

def _require_nonempty(g1, g2):
    if g1.n == 0 or g2.n == 0:
        raise GraphError("product factors must be nonempty")


def cartesian_product(g1, g2):
    """Cartesian product: (u1,u2) ~ (v1,v2) iff equal in one coordinate and
    adjacent in the other."""
    _require_nonempty(g1, g2)
    vmap = ProductVertexMap(g1.n, g2.n)
    edges = []
    for i in range(g1.n):
        for u, v in g2.edges:
            edges.append((vmap.forward(i, u), vmap.forward(i, v)))
    for j in range(g2.n):
        for u, v in g1.edges:
            edges.append((vmap.forward(u, j), vmap.forward(v, j)))
    return Graph(g1.n * g2.n, edges, allow_isolated=True), vmap


def direct_product(g1, g2):
    """Direct (tensor) product: adjacent iff adjacent in both coordinates."""
    _require_nonempty(g1, g2)
    vmap = ProductVertexMap(g1.n, g2.n)
    edges = []
    for u1, v1 in g1.edges:
        for u2, v2 in g2.edges:
            edges.append((vmap.forward(u1, u2), vmap.forward(v1, v2)))
            edges.append((vmap.forward(u1, v2), vmap.forward(v1, u2)))
    return Graph(g1.n * g2.n, edges, allow_isolated=True), vmap


def strong_product(g1, g2):
    """Strong product: union of the Cartesian and direct product edge sets."""
    _require_nonempty(g1, g2)
    cart, vmap = cartesian_product(g1, g2)
    tens, _ = direct_product(g1, g2)
    return Graph(g1.n * g2.n, cart.edges | tens.edges, allow_isolated=True), vmap


def lexicographic_product(g1, g2):
    """Lexicographic product g1 o g2: adjacent iff adjacent in g1, or equal
    in g1 and adjacent in g2. Not symmetric in its arguments."""
    _require_nonempty(g1, g2)
    vmap = ProductVertexMap(g1.n, g2.n)
    edges = []
    for u, v in g1.edges:
        for j in range(g2.n):
            for k in range(g2.n):
                edges.append((vmap.forward(u, j), vmap.forward(v, k)))
    for i in range(g1.n):
        for u, v in g2.edges:
            edges.append((vmap.forward(i, u), vmap.forward(i, v)))
    return Graph(g1.n * g2.n, edges, allow_isolated=True), vmap


def corona(g1, g2):
    """Corona g1 (.) g2: one copy of g2 per g1 vertex, joined to that vertex."""
    _require_nonempty(g1, g2)
    vmap = CoronaVertexMap(g1.n, g2.n)
    edges = list(g1.edges)
    for i in range(g1.n):
        for u, v in g2.edges:
            edges.append((vmap.copy_vertex(i, u), vmap.copy_vertex(i, v)))
        for j in range(g2.n):
            edges.append((i, vmap.copy_vertex(i, j)))
    return Graph(g1.n * (1 + g2.n), edges, allow_isolated=True), vmap


def rooted_product(g1, g2, root):
    """Rooted product: one copy of g2 per g1 vertex, roots identified."""
    _require_nonempty(g1, g2)
    if not 0 <= root < g2.n:
        raise GraphError(f"root {root} is not a vertex of the rooted factor")
    vmap = RootedVertexMap(g1.n, g2.n, root)
    edges = list(g1.edges)
    for i in range(g1.n):
        for u, v in g2.edges:
            edges.append((vmap.copy_vertex(i, u), vmap.copy_vertex(i, v)))
    n = g1.n + g1.n * (g2.n - 1)
    return Graph(n, edges, allow_isolated=True), vmap


def disjoint_union(g1, g2):
    """Disjoint union; g2's vertex ids are shifted up by g1.n."""
    edges = list(g1.edges)
    edges.extend((u + g1.n, v + g1.n) for u, v in g2.edges)
    return Graph(g1.n + g2.n, edges, allow_isolated=True)


def restrict_to_layer(product, vmap, factor, index):
    """Induced subgraph on one layer of a grid product.

    factor=1 keeps {(i, index) : i}, so the layer is a copy of the first
    factor; factor=2 keeps {(index, j) : j}. Returns (layer graph, list of
    product vertex ids in layer-vertex order). For Cartesian products the
    layer is the corresponding factor on the nose.
    """
    if factor == 1:
        if not 0 <= index < vmap.n2:
            raise GraphError(f"layer index {index} out of range for factor 2")
        ids = [vmap.forward(i, index) for i in range(vmap.n1)]
    elif factor == 2:
        if not 0 <= index < vmap.n1:
            raise GraphError(f"layer index {index} out of range for factor 1")
        ids = [vmap.forward(index, j) for j in range(vmap.n2)]
    else:
        raise GraphError("factor must be 1 or 2")
    sub, old_ids = product.induced_subgraph(ids)
    return sub, old_ids


# ---------------------------------------------------------------------------
# Bipartiteness.

@dataclass(frozen=True)
class BipartiteResult:
    """Either a two-coloring (sides) or an odd-cycle certificate."""

    is_bipartite: bool
    sides: tuple = None      # (tuple_of_side0, tuple_of_side1)
    odd_cycle: tuple = None  # vertex sequence of an odd closed walk


def is_bipartite(g):
    """BFS two-coloring; on failure returns an explicit odd cycle."""
    color = [-1] * g.n
    parent = [-1] * g.n
    adj = g.adjacency()
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = [s]
        while queue:
            v = queue.pop(0)
            for w in adj[v]:
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    parent[w] = v
                    queue.append(w)
                elif color[w] == color[v]:
                    return BipartiteResult(False, odd_cycle=_odd_cycle(parent, v, w))
    side0 = tuple(v for v in range(g.n) if color[v] in (0, -1))
    side1 = tuple(v for v in range(g.n) if color[v] == 1)
    return BipartiteResult(True, sides=(side0, side1))


def _odd_cycle(parent, u, v):
    """Close the cycle through the BFS-tree paths of the clashing edge uv."""
    pu, pv = [u], [v]
    while parent[pu[-1]] != -1:
        pu.append(parent[pu[-1]])
    while parent[pv[-1]] != -1:
        pv.append(parent[pv[-1]])
    su, sv = set(pu), set(pv)
    meet = next(x for x in pu if x in sv)
    cu = pu[: pu.index(meet) + 1]
    cv = pv[: pv.index(meet)]
    return tuple(cu + cv[::-1])
