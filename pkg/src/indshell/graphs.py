"""Simple undirected graphs and the structural decompositions built on them.

Vertices are 0-based integers.  Graphs are immutable; every operation is a
pure function returning fresh values, so shared instances are safe to use
from concurrent code.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .errors import InvalidInput, InvalidVertex, NoQualifyingClique


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: vertex count plus per-vertex neighbor sets."""

    n: int
    adj: tuple[frozenset[int], ...]

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise InvalidInput(f"adjacency length {len(self.adj)} != n={self.n}")
        for v, nbrs in enumerate(self.adj):
            if v in nbrs:
                raise InvalidInput(f"loop at vertex {v}")
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise InvalidVertex(f"neighbor {u} out of range")
                if v not in self.adj[u]:
                    raise InvalidInput(f"asymmetric edge {v}-{u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidVertex(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise InvalidInput(f"loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, tuple(frozenset(s) for s in adj))

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def edge_count(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InvalidInput("cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def _check_subset(g: Graph, a: Iterable[int]) -> frozenset[int]:
    a = frozenset(a)
    for v in a:
        if not 0 <= v < g.n:
            raise InvalidVertex(f"vertex {v} not in graph on {g.n} vertices")
    return a


def induced_subgraph(g: Graph, a: Iterable[int]) -> tuple[Graph, list[int]]:
    """Induced subgraph on ``a`` plus the list mapping new index -> old label."""
    a = _check_subset(g, a)
    order = sorted(a)
    index = {old: new for new, old in enumerate(order)}
    edges = [
        (index[u], index[v]) for u in order for v in g.adj[u] if v in a and u < v
    ]
    return Graph.from_edges(len(order), edges), order


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Partition of the vertex set into components, sorted by minimum vertex."""
    seen = [False] * g.n
    blocks = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = {s}
        seen[s] = True
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.add(w)
                    queue.append(w)
        blocks.append(frozenset(comp))
    return sorted(blocks, key=min)


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def _bfs_dist(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def distance(g: Graph, u: int, v: int) -> float:
    d = _bfs_dist(g, u)[v]
    return math.inf if d < 0 else d


def diameter(g: Graph) -> float:
    """Maximum eccentricity; ``math.inf`` when the graph is disconnected."""
    if g.n == 0:
        raise InvalidInput("diameter of the empty graph is undefined")
    best = 0
    for v in range(g.n):
        dist = _bfs_dist(g, v)
        if min(dist) < 0:
            return math.inf
        best = max(best, max(dist))
    return best


def is_simplicial_vertex(g: Graph, v: int) -> bool:
    nbrs = g.adj[v]
    return all(u in g.adj[w] for u, w in combinations(sorted(nbrs), 2))


def simplicial_vertices(g: Graph) -> frozenset[int]:
    """Vertices whose neighborhood induces a clique."""
    return frozenset(v for v in range(g.n) if is_simplicial_vertex(g, v))


@dataclass(frozen=True)
class EliminationLayers:
    """Iterated simplicial-vertex strata V_1, ..., V_k of a graph.

    ``residual`` holds the vertices never eliminated; it is empty exactly
    for chordal graphs.
    """

    layers: tuple[frozenset[int], ...]
    residual: frozenset[int]

    def exhausts(self) -> bool:
        return not self.residual

    def layer_of(self, v: int) -> int | None:
        """1-based layer index of ``v``, or None if v was never eliminated."""
        for i, layer in enumerate(self.layers):
            if v in layer:
                return i + 1
        return None

    def first_layer_touching(self, vertices: Iterable[int]) -> int | None:
        """min{ i : V_i meets ``vertices`` } (1-based), or None."""
        vs = set(vertices)
        for i, layer in enumerate(self.layers):
            if layer & vs:
                return i + 1
        return None


def elimination_layers(g: Graph) -> EliminationLayers:
    """Strip the full simplicial-vertex set repeatedly until stuck or empty."""
    layers: list[frozenset[int]] = []
    remaining = list(range(g.n))
    current = g
    labels = list(range(g.n))
    while current.n:
        simp = simplicial_vertices(current)
        if not simp:
            break
        layers.append(frozenset(labels[v] for v in simp))
        keep = [v for v in range(current.n) if v not in simp]
        current, order = induced_subgraph(current, keep)
        labels = [labels[v] for v in order]
    remaining = frozenset(labels) if current.n else frozenset()
    return EliminationLayers(tuple(layers), remaining)


def is_chordal(g: Graph) -> bool:
    """Dirac: the simplicial elimination layers exhaust V(G) iff G is chordal."""
    return elimination_layers(g).exhausts()


def blocks(g: Graph) -> tuple[list[frozenset[int]], frozenset[int]]:
    """Biconnected components (as vertex sets) and the cut vertices.

    Isolated vertices form singleton blocks.  Blocks are sorted by their
    sorted vertex tuple; cut vertices are exactly those lying in >= 2 blocks.
    """
    disc = [-1] * g.n
    low = [0] * g.n
    comps: list[frozenset[int]] = []
    timer = 0
    edge_stack: list[tuple[int, int]] = []

    for root in range(g.n):
        if disc[root] != -1:
            continue
        if not g.adj[root]:
            comps.append(frozenset([root]))
            disc[root] = timer
            timer += 1
            continue
        # iterative Hopcroft-Tarjan, neighbors visited in sorted order
        stack = [(root, -1, iter(sorted(g.adj[root])))]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    edge_stack.append((u, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, u, iter(sorted(g.adj[w]))))
                    advanced = True
                    break
                if w != parent and disc[w] < disc[u]:
                    edge_stack.append((u, w))
                    low[u] = min(low[u], disc[w])
            if advanced:
                continue
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[u])
                if low[u] >= disc[p]:
                    comp = set()
                    while True:
                        e = edge_stack.pop()
                        comp.update(e)
                        if e == (p, u):
                            break
                    comps.append(frozenset(comp))
    counts: dict[int, int] = {}
    for comp in comps:
        for v in comp:
            counts[v] = counts.get(v, 0) + 1
    cuts = frozenset(v for v, c in counts.items() if c >= 2)
    return sorted(comps, key=lambda c: tuple(sorted(c))), cuts


def is_clique(g: Graph, vs: Iterable[int]) -> bool:
    vs = sorted(set(vs))
    return all(v in g.adj[u] for u, v in combinations(vs, 2))


def is_block_graph(g: Graph) -> bool:
    comps, _ = blocks(g)
    return all(is_clique(g, c) for c in comps)


def clique_shadow(g: Graph, layers: EliminationLayers, v: int) -> frozenset[int]:
    """S_v: union, over the maximum cliques at v lying in {v} + V_1, of the
    clique minus v.

    Defined for block graphs and vertices of the second elimination layer.
    """
    if not is_block_graph(g):
        raise InvalidInput("clique_shadow is defined for block graphs only")
    if len(layers.layers) < 2 or v not in layers.layers[1]:
        raise InvalidInput(f"vertex {v} is not in the second elimination layer")
    v1 = layers.layers[0]
    comps, _ = blocks(g)
    best_size = 1
    shadow: set[int] = set()
    for comp in comps:
        if v not in comp:
            continue
        inside = (comp - {v}) & v1
        size = 1 + len(inside)
        if size > best_size:
            best_size = size
            shadow = set(inside)
        elif size == best_size and inside:
            shadow |= inside
    if best_size == 1:
        raise NoQualifyingClique(
            f"no clique at {v} has all of its other vertices in the first layer"
        )
    return frozenset(shadow)


def contains_induced(g: Graph, h: Graph) -> tuple[bool, dict[int, int] | None]:
    """Does some vertex subset of ``g`` induce a copy of ``h``?

    Backtracking over pattern vertices (most-constrained-first static order),
    with degree pruning.  Returns the embedding V(h) -> V(g) when found.
    """
    if h.n == 0:
        return True, {}
    if h.n > g.n:
        return False, None
    # order pattern vertices: highest degree first, then keep each subsequent
    # vertex adjacent to the mapped prefix when possible
    order: list[int] = []
    placed = set()
    by_degree = sorted(range(h.n), key=lambda v: (-h.degree(v), v))
    while len(order) < h.n:
        nxt = None
        for v in by_degree:
            if v in placed:
                continue
            if not order or h.adj[v] & placed:
                nxt = v
                break
        if nxt is None:
            nxt = next(v for v in by_degree if v not in placed)
        order.append(nxt)
        placed.add(nxt)

    mapping: dict[int, int] = {}
    used: set[int] = set()

    def extend(i: int) -> bool:
        if i == h.n:
            return True
        p = order[i]
        anchors = [(q, mapping[q]) for q in order[:i] if q in h.adj[p]]
        if anchors:
            candidates = sorted(g.adj[anchors[0][1]])
        else:
            candidates = range(g.n)
        for c in candidates:
            if c in used or g.degree(c) < h.degree(p):
                continue
            ok = True
            for q in order[:i]:
                gq = mapping[q]
                if (q in h.adj[p]) != (gq in g.adj[c]):
                    ok = False
                    break
            if not ok:
                continue
            mapping[p] = c
            used.add(c)
            if extend(i + 1):
                return True
            del mapping[p]
            used.discard(c)
        return False

    if extend(0):
        return True, dict(sorted(mapping.items()))
    return False, None
